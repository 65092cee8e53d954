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

#include "ampshape/shapers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ampshape/combinatorics.hpp"
#include "ampshape/errors.hpp"

namespace ampshape {

Composition ccdm_composition_from_pmf(const AveragePmf& pmf, int n) {
    pmf.validate();
    if (n < 1) throw std::domain_error("ccdm_composition_from_pmf: n must be >= 1");
    const std::size_t m = pmf.probabilities.size();
    std::vector<int> counts(m);
    std::vector<double> remainders(m);
    int assigned = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double exact = n * pmf.probabilities[i];
        counts[i] = static_cast<int>(std::floor(exact));
        remainders[i] = exact - counts[i];
        assigned += counts[i];
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (int d = 0; d < n - assigned; ++d) ++counts[order[d]];
    return Composition(counts);
}

ShaperCodebook build_ccdm(const AveragePmf& pmf, int n, Engine engine, const Alphabet& alphabet) {
    if (pmf.probabilities.size() != alphabet.size())
        throw std::invalid_argument("build_ccdm: pmf/alphabet size mismatch");
    Composition composition = ccdm_composition_from_pmf(pmf, n);
    const int k = ccdm_payload_bits(composition, engine);
    if (k == 0)
        throw DegenerateShaperError("build_ccdm: composition addresses zero bits");
    CodebookEntry entry{BitWord(), composition, k, std::nullopt};
    return ShaperCodebook(Scheme::Ccdm, engine, alphabet, n, k, {std::move(entry)});
}

namespace {

struct RankedComposition {
    std::int64_t energy;
    std::size_t enum_order;
    Composition composition;
    int payload_capacity;
};

}  // namespace

ShaperCodebook build_hcss(int n, const Alphabet& alphabet, int k_target, Engine engine,
                          int min_perm_exponent) {
    if (k_target < 1) throw std::domain_error("build_hcss: k_target must be >= 1");
    if (min_perm_exponent < 0) throw std::domain_error("build_hcss: negative threshold exponent");

    std::vector<RankedComposition> eligible;
    {
        std::vector<Composition> all = enumerate_compositions(n, alphabet);
        eligible.reserve(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            const int capacity = ccdm_payload_bits(all[i], engine);
            if (capacity < min_perm_exponent) continue;  // usable count below 2^threshold
            eligible.push_back({composition_energy(all[i], alphabet), i, std::move(all[i]), capacity});
        }
    }
    std::sort(eligible.begin(), eligible.end(), [](const RankedComposition& a, const RankedComposition& b) {
        return std::tie(a.energy, a.enum_order) < std::tie(b.energy, b.enum_order);
    });

    BigNat residual = pow2(k_target);
    std::vector<Composition> compositions;
    std::vector<int> payloads;
    for (RankedComposition& rc : eligible) {
        if (residual == 0) break;
        const int grant = std::min(rc.payload_capacity, floor_log2(residual));
        compositions.push_back(std::move(rc.composition));
        payloads.push_back(grant);
        residual -= pow2(grant);
    }
    if (residual != 0)
        throw RateInfeasibleError("build_hcss: eligible compositions cannot address 2^k sequences");

    std::vector<BitWord> prefixes = assign_canonical_prefixes(k_target, payloads);
    std::vector<CodebookEntry> entries(compositions.size());
    for (std::size_t i = 0; i < compositions.size(); ++i)
        entries[i] = {std::move(prefixes[i]), std::move(compositions[i]), payloads[i], std::nullopt};
    return ShaperCodebook(Scheme::Hcss, engine, alphabet, n, k_target, std::move(entries));
}

namespace {

struct MpdmUnit {
    bool is_pair;
    Composition plus;          // == target for the singleton
    Composition minus;         // unused for the singleton
    int grant_exponent;        // unit grant is 2^grant_exponent
    std::int64_t max_energy;   // larger member energy; tie-break key
    std::size_t enum_order;
};

// All element-wise deviations d != 0 with sum 0 and both T+d, T-d valid,
// one representative per {d, -d} (first nonzero component positive).
std::vector<std::pair<Composition, Composition>> enumerate_pairs(const Composition& target) {
    const int m = static_cast<int>(target.size());
    const int n = target.n();
    std::vector<std::pair<Composition, Composition>> pairs;
    std::vector<int> d(m, 0);
    auto recurse = [&](auto&& self, int index, int partial_sum) -> void {
        if (index == m - 1) {
            d[index] = -partial_sum;
            if (target[index] + d[index] < 0 || target[index] - d[index] < 0) return;
            int first_nonzero = 0;
            for (int v : d)
                if (v != 0) { first_nonzero = v; break; }
            if (first_nonzero <= 0) return;  // skip zero and the mirrored representative
            std::vector<int> plus(m), minus(m);
            for (int i = 0; i < m; ++i) {
                plus[i] = target[i] + d[i];
                minus[i] = target[i] - d[i];
            }
            pairs.emplace_back(Composition(plus), Composition(minus));
            return;
        }
        const int lo = -target[index];
        const int hi = std::min(n - target[index], target[index]);
        // |d_i| <= target_i keeps T - d valid; larger values cannot recover
        for (int v = lo; v <= hi; ++v) {
            d[index] = v;
            self(self, index + 1, partial_sum + v);
        }
    };
    recurse(recurse, 0, 0);
    return pairs;
}

}  // namespace

ShaperCodebook build_mpdm(const AveragePmf& pmf, int n, const Alphabet& alphabet) {
    if (pmf.probabilities.size() != alphabet.size())
        throw std::invalid_argument("build_mpdm: pmf/alphabet size mismatch");
    const Composition target = ccdm_composition_from_pmf(pmf, n);

    std::vector<MpdmUnit> units;
    {
        std::vector<std::pair<Composition, Composition>> pairs = enumerate_pairs(target);
        units.reserve(pairs.size() + 1);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto& [plus, minus] = pairs[i];
            const BigNat smaller = std::min(multinom(plus), multinom(minus));
            const int member_exponent = smaller == 1 ? 0 : floor_log2(smaller);
            const std::int64_t max_energy =
                std::max(composition_energy(plus, alphabet), composition_energy(minus, alphabet));
            units.push_back({true, std::move(plus), std::move(minus), 1 + member_exponent,
                             max_energy, i + 1});
        }
        const BigNat target_count = multinom(target);
        const int target_exponent = target_count == 1 ? 0 : floor_log2(target_count);
        units.push_back({false, target, target, target_exponent,
                         composition_energy(target, alphabet), 0});
    }

    BigNat total = 0;
    for (const MpdmUnit& u : units) total += pow2(u.grant_exponent);
    if (total < 2) throw RateInfeasibleError("build_mpdm: fewer than two addressable sequences");
    const int k = floor_log2(total);

    // Trim walk: largest grants first; singleton ahead of pairs on ties, then
    // lower boundary energy. Pairs shrink as one unit so both members stay equal.
    std::sort(units.begin(), units.end(), [](const MpdmUnit& a, const MpdmUnit& b) {
        if (a.grant_exponent != b.grant_exponent) return a.grant_exponent > b.grant_exponent;
        if (a.is_pair != b.is_pair) return !a.is_pair;  // singleton ahead of pairs
        if (a.max_energy != b.max_energy) return a.max_energy < b.max_energy;
        return a.enum_order < b.enum_order;
    });

    BigNat residual = pow2(k);
    std::vector<Composition> compositions;
    std::vector<int> payloads;
    std::vector<std::optional<Composition>> twins;
    for (MpdmUnit& u : units) {
        if (residual == 0) break;
        int grant = std::min(u.grant_exponent, floor_log2(residual));
        if (u.is_pair) {
            if (grant < 1) continue;  // a pair cannot grant fewer than two sequences
            compositions.push_back(u.plus);
            payloads.push_back(grant - 1);
            twins.emplace_back(u.minus);
            compositions.push_back(u.minus);
            payloads.push_back(grant - 1);
            twins.emplace_back(u.plus);
        } else {
            compositions.push_back(u.plus);
            payloads.push_back(grant);
            twins.emplace_back(u.plus);  // T + T == 2T
        }
        residual -= pow2(grant);
    }
    if (residual != 0)
        throw RateInfeasibleError("build_mpdm: trim could not reach the dyadic total");

    std::vector<BitWord> prefixes = assign_canonical_prefixes(k, payloads);
    std::vector<CodebookEntry> entries(compositions.size());
    for (std::size_t i = 0; i < compositions.size(); ++i)
        entries[i] = {std::move(prefixes[i]), std::move(compositions[i]), payloads[i],
                      std::move(twins[i])};
    return ShaperCodebook(Scheme::Mpdm, Engine::Mr, alphabet, n, k, std::move(entries));
}

AmplitudeSequence shape(const ShaperCodebook& cb, const BitWord& bits, const CoefficientLUT* lut) {
    const CodebookEntry& entry = cb.match_prefix(bits);
    const BitWord payload = bits.slice(entry.prefix.length(), entry.payload_bits);
    if (cb.engine() == Engine::Mr) return mr_map(entry.composition, payload.value(), lut);
    // The granted space can be smaller than the transform's full budget;
    // left-padding with zeros embeds it injectively.
    const BitWord widened = payload.resized(pa_payload_bits(entry.composition));
    return pa_map(entry.composition, widened, lut);
}

BitWord deshape(const ShaperCodebook& cb, const AmplitudeSequence& s, const CoefficientLUT* lut) {
    if (static_cast<int>(s.size()) != cb.n())
        throw std::invalid_argument("deshape: sequence length must equal n");
    const CodebookEntry* entry =
        cb.find_composition(sequence_counts(s, static_cast<int>(cb.alphabet().size())));
    if (!entry) throw DecodeIntegrityError("deshape: composition not present in the codebook");

    BigNat rank = cb.engine() == Engine::Mr ? mr_demap(entry->composition, s, lut)
                                            : pa_demap(entry->composition, s, lut).value();
    if (entry->payload_bits == 0 ? rank != 0 : rank >= pow2(entry->payload_bits))
        throw DecodeIntegrityError("deshape: rank outside the entry's granted space");
    return entry->prefix.concat(BitWord(entry->payload_bits, std::move(rank)));
}

AveragePmf codebook_average_pmf(const ShaperCodebook& cb) {
    const std::size_t m = cb.alphabet().size();
    std::vector<BigNat> numerators(m, 0);
    for (const CodebookEntry& e : cb.entries()) {
        const BigNat weight = pow2(e.payload_bits);
        for (std::size_t i = 0; i < m; ++i) numerators[i] += weight * e.composition[i];
    }
    const BigNat denominator = BigNat(cb.n()) * pow2(cb.k());
    AveragePmf pmf;
    pmf.probabilities.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        pmf.probabilities[i] = BigRat(numerators[i], denominator).convert_to<double>();
    return pmf;
}

}  // namespace ampshape
