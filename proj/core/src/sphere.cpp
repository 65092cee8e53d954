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

#include "ampshape/sphere.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "ampshape/combinatorics.hpp"
#include "ampshape/errors.hpp"

namespace ampshape {

BigNat ShellSpectrum::total_sequences() const {
    BigNat total = 0;
    for (const Shell& shell : shells) total += shell.sequence_count;
    return total;
}

ShellSpectrum build_shell_spectrum(int n, const Alphabet& alphabet) {
    std::map<std::int64_t, Shell> by_energy;
    for (Composition& c : enumerate_compositions(n, alphabet)) {
        const std::int64_t energy = composition_energy(c, alphabet);
        Shell& shell = by_energy[energy];
        shell.energy = energy;
        shell.sequence_count += multinom(c);
        shell.compositions.push_back(std::move(c));
    }
    ShellSpectrum spectrum;
    spectrum.n = n;
    spectrum.alphabet = alphabet;
    spectrum.shells.reserve(by_energy.size());
    for (auto& [energy, shell] : by_energy) spectrum.shells.push_back(std::move(shell));
    return spectrum;
}

SphereUsage sphere_usage(ShellSpectrum spectrum, int k) {
    const BigNat target = pow2(k);
    if (target > spectrum.total_sequences())
        throw RateInfeasibleError("sphere_usage: 2^k exceeds the signal space");

    SphereUsage usage;
    usage.k = k;
    BigNat used = 0;
    for (const Shell& shell : spectrum.shells) {
        if (used + shell.sequence_count <= target) {
            used += shell.sequence_count;
            ++usage.full_shells;
            if (used == target) break;
        } else {
            usage.boundary_fraction = BigRat(target - used, shell.sequence_count);
            break;
        }
    }
    usage.spectrum = std::move(spectrum);
    return usage;
}

SphereMetrics sphere_metrics(const SphereUsage& usage) {
    const ShellSpectrum& spectrum = usage.spectrum;
    const std::size_t m = spectrum.alphabet.size();
    const BigNat target = pow2(usage.k);

    std::vector<BigNat> full_counts(m, 0);  // summed count-weighted occurrences
    BigNat full_energy = 0;
    for (int s = 0; s < usage.full_shells; ++s) {
        const Shell& shell = spectrum.shells[s];
        for (const Composition& c : shell.compositions) {
            const BigNat weight = multinom(c);
            for (std::size_t i = 0; i < m; ++i) full_counts[i] += weight * c[i];
        }
        full_energy += shell.sequence_count * shell.energy;
    }

    std::vector<BigRat> occurrence(m);
    for (std::size_t i = 0; i < m; ++i) occurrence[i] = BigRat(full_counts[i]);
    BigRat energy_sum(full_energy);
    if (usage.boundary_fraction != 0) {
        const Shell& boundary = spectrum.shells[usage.full_shells];
        for (const Composition& c : boundary.compositions) {
            const BigNat weight = multinom(c);
            for (std::size_t i = 0; i < m; ++i)
                occurrence[i] += usage.boundary_fraction * BigRat(weight * c[i]);
        }
        energy_sum += usage.boundary_fraction * BigRat(boundary.sequence_count * boundary.energy);
    }

    const BigRat denominator = BigRat(BigNat(spectrum.n) * target);
    SphereMetrics metrics;
    metrics.pmf.probabilities.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        metrics.pmf.probabilities[i] = BigRat(occurrence[i] / denominator).convert_to<double>();
    metrics.avg_energy = BigRat(energy_sum / denominator).convert_to<double>();
    for (double p : metrics.pmf.probabilities)
        if (p > 0.0) metrics.entropy -= p * std::log2(p);
    metrics.rate_loss = metrics.entropy - static_cast<double>(usage.k) / spectrum.n;
    return metrics;
}

void dump_spectrum_tsv(std::ostream& out, const ShellSpectrum& spectrum) {
    out << "energy\tcount\tnum_compositions\n";
    for (const Shell& shell : spectrum.shells)
        out << shell.energy << '\t' << shell.sequence_count << '\t' << shell.compositions.size()
            << '\n';
}

}  // namespace ampshape
