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

#ifndef AMPSHAPE_RANKING_HPP
#define AMPSHAPE_RANKING_HPP

#include <vector>

#include "ampshape/bignat.hpp"
#include "ampshape/bitword.hpp"
#include "ampshape/composition.hpp"
#include "ampshape/lut.hpp"

namespace ampshape {

/// Shaped output block: amplitude indices 1..m referencing an Alphabet.
using AmplitudeSequence = std::vector<int>;

/// Which constant-composition engine maps payload bits to sequences.
enum class Engine { Mr, SrPa };

/// Occurrence counts of a sequence over an m-ary index alphabet.
std::vector<int> sequence_counts(const AmplitudeSequence& s, int m);

// ---------------------------------------------------------------------------
// Multiset ranking: the lexicographic index <-> multiset permutation
// bijection. Mapping walks the output positions left to right; at each
// position the cumulative relative ranks say how many sequences start with a
// smaller amplitude, and the largest amplitude whose relative rank does not
// exceed the remaining target rank is emitted.
// ---------------------------------------------------------------------------

/// Cumulative relative ranks for one mapping step: entry j (0-based) is the
/// number of remaining sequences whose next symbol is smaller than amplitude
/// j+1. Entry 0 is always zero and the vector is non-decreasing. The m-1
/// coefficient evaluations are independent of one another; only the
/// cumulative sum is sequential.
std::vector<BigNat> mr_relative_ranks(const std::vector<int>& remaining_counts,
                                      const CoeffSource& coeffs);

/// Sequence with lexicographic index `rank` (0-based, amplitude index 1
/// smallest) among all permutations of c. rank must be < multinom(c).
AmplitudeSequence mr_map(const Composition& c, const BigNat& rank,
                         const CoefficientLUT* lut = nullptr);

/// Exact inverse of mr_map. Throws std::invalid_argument if s is not a
/// permutation of c.
BigNat mr_demap(const Composition& c, const AmplitudeSequence& s,
                const CoefficientLUT* lut = nullptr);

// ---------------------------------------------------------------------------
// Subset ranking: the lexicographic index <-> fixed-weight binary sequence
// bijection. A binary sequence is represented by the set of positions
// (1-based, from the left) carrying the heavy symbol, and position sets are
// ordered lexicographically as sorted tuples.
// ---------------------------------------------------------------------------

/// Heavy-position set (sorted, 1-based) of the rank-th subset of size w
/// drawn from {1..n}. rank must be < binom(n, w).
std::vector<int> sr_unrank_positions(int n, int w, const BigNat& rank,
                                     const CoefficientLUT* lut = nullptr);

/// Rank of a heavy-position set (sorted, 1-based, w = positions.size()).
BigNat sr_rank_positions(int n, const std::vector<int>& positions,
                         const CoefficientLUT* lut = nullptr);

/// Binary sequence over indices {1,2} with exactly w heavy (index 2)
/// symbols whose heavy-position set is the rank-th in lexicographic order.
AmplitudeSequence sr_unrank(int n, int w, const BigNat& rank,
                            const CoefficientLUT* lut = nullptr);

/// Exact inverse of sr_unrank. Throws std::invalid_argument if the heavy
/// weight of s is not w.
BigNat sr_rank(int n, int w, const AmplitudeSequence& s,
               const CoefficientLUT* lut = nullptr);

// ---------------------------------------------------------------------------
// Parallel-amplitude transform: lets the binary subset engine serve
// nonbinary compositions. Level i (ascending amplitude order) runs a binary
// sub-DM over the positions still unassigned: its sub-word picks the
// heavy-class positions (amplitudes above i) and the rest receive amplitude
// i. Each level has its own floored bit budget, so the transform addresses
// fewer bits than multiset ranking in general.
// ---------------------------------------------------------------------------

/// Bit budget of level i (0-based) given the remaining length and count.
int pa_level_bits(int remaining_length, int count);

/// Total addressable bits: sum of the m-1 per-level floored budgets.
int pa_payload_bits(const Composition& c);

/// Maps a k_PA(c)-bit word to a sequence with composition c.
AmplitudeSequence pa_map(const Composition& c, const BitWord& bits,
                         const CoefficientLUT* lut = nullptr);

/// Exact inverse of pa_map. Throws std::invalid_argument on a composition
/// mismatch and DecodeIntegrityError if a recovered sub-rank falls outside
/// its level's bit budget (the sequence is unreachable by pa_map).
BitWord pa_demap(const Composition& c, const AmplitudeSequence& s,
                 const CoefficientLUT* lut = nullptr);

/// Payload capacity of a single-composition codec: floor(log2 multinom(c))
/// for multiset ranking, the summed floored level budgets for the
/// subset-ranking transform.
int ccdm_payload_bits(const Composition& c, Engine engine,
                      const CoefficientLUT* lut = nullptr);

}  // namespace ampshape

#endif  // AMPSHAPE_RANKING_HPP
