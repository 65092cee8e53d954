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

#ifndef AMPSHAPE_ANALYSIS_HPP
#define AMPSHAPE_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ampshape/codebook.hpp"
#include "ampshape/lut.hpp"
#include "ampshape/shapers.hpp"
#include "ampshape/sphere.hpp"

namespace ampshape {

/// Binary entropy of an amplitude PMF in bits, with 0 log 0 = 0.
double entropy(const AveragePmf& pmf);

/// Expected symbol energy: sum of p_i * amplitude_i^2.
double average_energy(const AveragePmf& pmf, const Alphabet& alphabet);

enum class SweepScheme { Ccdm, Mpdm, HcssMr, HcssSr, Sphere };

std::string to_string(SweepScheme scheme);

/// One comparison point. rate is k/n and rate_loss is entropy - rate, both
/// recomputed from the scheme's own average PMF. lut_bits is the size of
/// the coefficient table the scheme's engine would need at this block
/// length (0 for the sphere baseline).
struct SweepRow {
    SweepScheme scheme = SweepScheme::Ccdm;
    int n = 0;
    int k = 0;
    double rate = 0.0;
    double rate_loss = 0.0;
    double avg_energy = 0.0;
    double entropy = 0.0;
    std::int64_t num_compositions = 0;
    int tree_depth = 0;
    std::uint64_t lut_bits = 0;
};

/// Row for an already-built codebook.
SweepRow codebook_row(SweepScheme scheme, const ShaperCodebook& cb, std::uint64_t lut_bits);

/// Row for the sphere baseline at (n, k).
SweepRow sphere_row(int n, const Alphabet& alphabet, int k);

/// Rate-loss comparison across block lengths. For each n the pairwise
/// shaper fixes the operating rate: its k is reused for both sphere-shaper
/// variants and the baseline; the single-composition shaper runs at its own
/// capacity. Rows appear per n in the order the schemes were requested.
std::vector<SweepRow> rate_loss_sweep(const std::vector<SweepScheme>& schemes,
                                      const AveragePmf& pmf, const std::vector<int>& n_list,
                                      const Alphabet& alphabet = Alphabet());

/// Composition-pruning sweep at fixed (n, k): the sphere baseline first,
/// then one row per threshold exponent in input order. The energy delta
/// against the baseline is the difference of the avg_energy columns.
std::vector<SweepRow> pruning_sweep(int n, const Alphabet& alphabet, int k, Engine engine,
                                    const std::vector<int>& exponent_list);

/// Coefficient-table size as a function of maximum block length.
std::vector<std::pair<int, std::uint64_t>> lut_size_sweep(LutKind kind,
                                                          const std::vector<int>& n_list,
                                                          const Alphabet& alphabet = Alphabet());

/// Tab-separated output, header row included, floats printed with six
/// decimals. Byte-stable for identical inputs.
void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_lut_sweep_tsv(std::ostream& out, const std::vector<std::pair<int, std::uint64_t>>& rows);

}  // namespace ampshape

#endif  // AMPSHAPE_ANALYSIS_HPP
