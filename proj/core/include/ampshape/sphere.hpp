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

#ifndef AMPSHAPE_SPHERE_HPP
#define AMPSHAPE_SPHERE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ampshape/alphabet.hpp"
#include "ampshape/bignat.hpp"
#include "ampshape/codebook.hpp"
#include "ampshape/composition.hpp"

namespace ampshape {

/// One fixed-energy shell: every length-n sequence whose total energy
/// equals `energy`. Grouping is by composition since all permutations of a
/// composition share its energy.
struct Shell {
    std::int64_t energy = 0;
    BigNat sequence_count;  // sum of multinomials over the shell's compositions
    std::vector<Composition> compositions;
};

/// Complete shell decomposition of the length-n signal space: energies
/// strictly increasing, counts summing to m^n.
struct ShellSpectrum {
    int n = 0;
    Alphabet alphabet;
    std::vector<Shell> shells;

    BigNat total_sequences() const;
};

/// Energy-optimal occupation of the sphere for 2^k sequences: all shells
/// below the boundary are full and the boundary shell is used fractionally,
/// in exact rational arithmetic, so the used count is exactly 2^k.
struct SphereUsage {
    ShellSpectrum spectrum;
    int k = 0;
    int full_shells = 0;          // shells used completely
    BigRat boundary_fraction = 0; // fraction of the next shell, 0 if none needed
};

/// Scalar summary of a usage: exact-by-construction per-symbol energy, the
/// sequence-weighted average PMF, and its rate loss.
struct SphereMetrics {
    double avg_energy = 0.0;
    AveragePmf pmf;
    double entropy = 0.0;
    double rate_loss = 0.0;
};

ShellSpectrum build_shell_spectrum(int n, const Alphabet& alphabet);

/// Throws RateInfeasibleError when 2^k exceeds the spectrum's m^n sequences.
SphereUsage sphere_usage(ShellSpectrum spectrum, int k);

/// Average energy is exact (every sequence inside one shell has the shell's
/// energy, so the fractional boundary contributes exactly). The boundary
/// shell's PMF contribution weights its compositions proportionally to
/// their permutation counts.
SphereMetrics sphere_metrics(const SphereUsage& usage);

/// One line per shell: energy<TAB>count<TAB>num_compositions.
void dump_spectrum_tsv(std::ostream& out, const ShellSpectrum& spectrum);

}  // namespace ampshape

#endif  // AMPSHAPE_SPHERE_HPP
