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

#ifndef AMPSHAPE_LUT_HPP
#define AMPSHAPE_LUT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "ampshape/alphabet.hpp"
#include "ampshape/bignat.hpp"

namespace ampshape {

enum class LutKind { SrBinomial, MrMultinomial };

/// Precomputed coefficient table for the ranking engines, with bit-exact
/// size accounting: total_bits() is the sum over entries of ceil(log2 value)
/// (an entry of value 1 costs 0 bits).
///
/// SR tables store binomials (i choose w) for i in [4, n_max] and
/// w in [2, floor(i/2)] only; smaller w are trivial (1 or i) and larger w
/// are the mirror of a stored key. MR tables store one multinomial per
/// sorted count-multiset of m parts with block length in [1, n-1];
/// permuting a composition does not change its coefficient, so only the
/// sorted key is kept.
///
/// A constructed table is immutable; concurrent reads need no locking.
class CoefficientLUT {
  public:
    /// Binomial table covering every subset-ranking run of length at most
    /// n_max. n_max < 4 yields an empty table of zero bits.
    static CoefficientLUT build_sr(int n_max);

    /// Multinomial table covering every decremented composition that a
    /// length-n multiset-ranking run over m amplitudes can ask for
    /// (block lengths 1..n-1). Requires n >= 2.
    static CoefficientLUT build_mr(int n, const Alphabet& alphabet);

    LutKind kind() const { return kind_; }
    int n_max() const { return n_max_; }
    int m() const { return m_; }
    std::uint64_t total_bits() const { return total_bits_; }
    /// Width of the widest stored entry, ceil(log2 value); 0 when empty.
    int max_entry_bits() const { return max_entry_bits_; }
    std::size_t entry_count() const;

    /// Raw lookup: the key must be stored exactly as covered (no symmetry
    /// normalization). Returns nullptr on a miss.
    const BigNat* find_sr(int i, int w) const;
    const BigNat* find_mr(const std::vector<int>& sorted_counts) const;

    /// Raw lookup that throws LutMissError instead of returning nullptr.
    const BigNat& at_sr(int i, int w) const;
    const BigNat& at_mr(const std::vector<int>& sorted_counts) const;

    void save(std::ostream& out) const;
    static CoefficientLUT load(std::istream& in);

  private:
    CoefficientLUT() = default;

    LutKind kind_ = LutKind::SrBinomial;
    int n_max_ = 0;  // SR: max i; MR: the shaping length n
    int m_ = 0;      // MR only
    std::uint64_t total_bits_ = 0;
    int max_entry_bits_ = 0;
    std::map<std::pair<int, int>, BigNat> sr_entries_;
    std::map<std::vector<int>, BigNat> mr_entries_;
};

/// Convenience builders matching the table kinds.
CoefficientLUT build_sr_lut(int n_max);
CoefficientLUT build_mr_lut(int n, const Alphabet& alphabet);

/// Coefficient source for the ranking engines: answers binomial and
/// multinomial queries from an optional table, normalizing symmetric
/// binomial keys and computing directly whenever the key falls outside the
/// table's coverage. With and without a table the returned values are
/// identical.
class CoeffSource {
  public:
    explicit CoeffSource(const CoefficientLUT* lut = nullptr);

    BigNat binomial(int n, int w) const;
    /// Multinomial of a raw count vector; negative counts yield 0.
    BigNat multinomial(const std::vector<int>& counts) const;

  private:
    const CoefficientLUT* lut_;
};

}  // namespace ampshape

#endif  // AMPSHAPE_LUT_HPP
