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

#ifndef AMPSHAPE_COMBINATORICS_HPP
#define AMPSHAPE_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "ampshape/alphabet.hpp"
#include "ampshape/bignat.hpp"
#include "ampshape/composition.hpp"

namespace ampshape {

/// Exact binomial coefficient (n choose w). Evaluated with the
/// multiplicative formula, dividing out each factor as it is multiplied in
/// so no factorial-sized intermediate ever exists.
/// Throws std::domain_error for negative arguments or w > n.
BigNat binom(int n, int w);

/// Exact multinomial coefficient of a composition: the number of distinct
/// permutations of its amplitude multiset. Evaluated as a product of
/// binomials over the count prefix sums.
BigNat multinom(const Composition& c);

/// Multinomial coefficient of a raw count vector. Any negative count makes
/// the vector unrealizable and yields 0; the all-zero vector yields 1 (the
/// empty sequence). This is the form the ranking recursions need when they
/// decrement counts.
BigNat multinom_counts(const std::vector<int>& counts);

/// All compositions of block length n over the alphabet, each exactly once,
/// in lexicographically descending count order (the first count runs from n
/// down to 0, recursively; the last index varies fastest). The order is the
/// deterministic tie-break key used by every energy sort in this library.
std::vector<Composition> enumerate_compositions(int n, const Alphabet& alphabet);

/// Total block energy: sum of count[i] * amplitude[i]^2. Per-symbol energy
/// is this divided by n.
std::int64_t composition_energy(const Composition& c, const Alphabet& alphabet);

}  // namespace ampshape

#endif  // AMPSHAPE_COMBINATORICS_HPP
