// Copyright 2026 The ampshape Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ampshape/analysis.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ampshape {

double entropy(const AveragePmf& pmf) {
    double h = 0.0;
    for (double p : pmf.probabilities)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

double average_energy(const AveragePmf& pmf, const Alphabet& alphabet) {
    if (pmf.probabilities.size() != alphabet.size())
        throw std::invalid_argument("average_energy: pmf/alphabet size mismatch");
    double e = 0.0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        const double a = alphabet[i];
        e += pmf.probabilities[i] * a * a;
    }
    return e;
}

std::string to_string(SweepScheme scheme) {
    switch (scheme) {
        case SweepScheme::Ccdm: return "ccdm";
        case SweepScheme::Mpdm: return "mpdm";
        case SweepScheme::HcssMr: return "hcss-mr";
        case SweepScheme::HcssSr: return "hcss-sr";
        case SweepScheme::Sphere: return "sphere";
    }
    throw std::logic_error("to_string(SweepScheme): bad value");
}

SweepRow codebook_row(SweepScheme scheme, const ShaperCodebook& cb, std::uint64_t lut_bits) {
    const AveragePmf pmf = codebook_average_pmf(cb);
    SweepRow row;
    row.scheme = scheme;
    row.n = cb.n();
    row.k = cb.k();
    row.rate = static_cast<double>(cb.k()) / cb.n();
    row.entropy = entropy(pmf);
    row.rate_loss = row.entropy - row.rate;
    row.avg_energy = average_energy(pmf, cb.alphabet());
    row.num_compositions = static_cast<std::int64_t>(cb.entries().size());
    row.tree_depth = cb.tree_depth();
    row.lut_bits = lut_bits;
    return row;
}

SweepRow sphere_row(int n, const Alphabet& alphabet, int k) {
    SphereUsage usage = sphere_usage(build_shell_spectrum(n, alphabet), k);
    const SphereMetrics metrics = sphere_metrics(usage);
    SweepRow row;
    row.scheme = SweepScheme::Sphere;
    row.n = n;
    row.k = k;
    row.rate = static_cast<double>(k) / n;
    row.entropy = metrics.entropy;
    row.rate_loss = metrics.rate_loss;
    row.avg_energy = metrics.avg_energy;
    std::int64_t used = 0;
    for (int s = 0; s < usage.full_shells; ++s)
        used += static_cast<std::int64_t>(usage.spectrum.shells[s].compositions.size());
    if (usage.boundary_fraction != 0)
        used += static_cast<std::int64_t>(usage.spectrum.shells[usage.full_shells].compositions.size());
    row.num_compositions = used;
    row.tree_depth = 0;
    row.lut_bits = 0;
    return row;
}

std::vector<SweepRow> rate_loss_sweep(const std::vector<SweepScheme>& schemes,
                                      const AveragePmf& pmf, const std::vector<int>& n_list,
                                      const Alphabet& alphabet) {
    if (n_list.empty()) throw std::invalid_argument("rate_loss_sweep: empty n list");
    std::vector<SweepRow> rows;
    std::map<int, std::uint64_t> mr_bits, sr_bits;  // LUT sizes are reused across schemes
    auto mr_lut_bits = [&](int n) {
        auto it = mr_bits.find(n);
        if (it == mr_bits.end()) it = mr_bits.emplace(n, build_mr_lut(n, alphabet).total_bits()).first;
        return it->second;
    };
    auto sr_lut_bits = [&](int n) {
        auto it = sr_bits.find(n);
        if (it == sr_bits.end()) it = sr_bits.emplace(n, build_sr_lut(n).total_bits()).first;
        return it->second;
    };

    for (int n : n_list) {
        const ShaperCodebook mpdm = build_mpdm(pmf, n, alphabet);
        const int k = mpdm.k();
        for (SweepScheme scheme : schemes) {
            switch (scheme) {
                case SweepScheme::Ccdm:
                    rows.push_back(codebook_row(scheme, build_ccdm(pmf, n, Engine::Mr, alphabet),
                                                mr_lut_bits(n)));
                    break;
                case SweepScheme::Mpdm:
                    rows.push_back(codebook_row(scheme, mpdm, mr_lut_bits(n)));
                    break;
                case SweepScheme::HcssMr:
                    rows.push_back(codebook_row(scheme, build_hcss(n, alphabet, k, Engine::Mr),
                                                mr_lut_bits(n)));
                    break;
                case SweepScheme::HcssSr:
                    rows.push_back(codebook_row(scheme, build_hcss(n, alphabet, k, Engine::SrPa),
                                                sr_lut_bits(n)));
                    break;
                case SweepScheme::Sphere:
                    rows.push_back(sphere_row(n, alphabet, k));
                    break;
            }
        }
    }
    return rows;
}

std::vector<SweepRow> pruning_sweep(int n, const Alphabet& alphabet, int k, Engine engine,
                                    const std::vector<int>& exponent_list) {
    std::vector<SweepRow> rows;
    rows.push_back(sphere_row(n, alphabet, k));
    const std::uint64_t lut_bits = engine == Engine::Mr ? build_mr_lut(n, alphabet).total_bits()
                                                        : build_sr_lut(n).total_bits();
    for (int exponent : exponent_list) {
        const SweepScheme scheme =
            engine == Engine::Mr ? SweepScheme::HcssMr : SweepScheme::HcssSr;
        rows.push_back(codebook_row(scheme, build_hcss(n, alphabet, k, engine, exponent), lut_bits));
    }
    return rows;
}

std::vector<std::pair<int, std::uint64_t>> lut_size_sweep(LutKind kind,
                                                          const std::vector<int>& n_list,
                                                          const Alphabet& alphabet) {
    std::vector<std::pair<int, std::uint64_t>> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        const std::uint64_t bits = kind == LutKind::SrBinomial
                                       ? build_sr_lut(n).total_bits()
                                       : build_mr_lut(n, alphabet).total_bits();
        out.emplace_back(n, bits);
    }
    return out;
}

namespace {

std::string format_fixed(double value) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(6);
    ss << value;
    return ss.str();
}

}  // namespace

void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "scheme\tn\tk\trate\trate_loss\tavg_energy\tentropy\tnum_compositions\ttree_depth\tlut_bits\n";
    for (const SweepRow& r : rows) {
        out << to_string(r.scheme) << '\t' << r.n << '\t' << r.k << '\t' << format_fixed(r.rate)
            << '\t' << format_fixed(r.rate_loss) << '\t' << format_fixed(r.avg_energy) << '\t'
            << format_fixed(r.entropy) << '\t' << r.num_compositions << '\t' << r.tree_depth
            << '\t' << r.lut_bits << '\n';
    }
}

void write_lut_sweep_tsv(std::ostream& out,
                         const std::vector<std::pair<int, std::uint64_t>>& rows) {
    out << "n\tbits\n";
    for (const auto& [n, bits] : rows) out << n << '\t' << bits << '\n';
}

}  // namespace ampshape
