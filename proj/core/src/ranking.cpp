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

#include "ampshape/ranking.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "ampshape/combinatorics.hpp"
#include "ampshape/errors.hpp"

namespace ampshape {

std::vector<int> sequence_counts(const AmplitudeSequence& s, int m) {
    std::vector<int> counts(m, 0);
    for (int sym : s) {
        if (sym < 1 || sym > m)
            throw std::invalid_argument("sequence_counts: amplitude index out of range");
        ++counts[sym - 1];
    }
    return counts;
}

std::vector<BigNat> mr_relative_ranks(const std::vector<int>& remaining_counts,
                                      const CoeffSource& coeffs) {
    const int m = static_cast<int>(remaining_counts.size());
    std::vector<BigNat> rel(m);
    rel[0] = 0;  // nothing precedes the smallest amplitude
    std::vector<int> decremented = remaining_counts;
    for (int j = 1; j < m; ++j) {
        --decremented[j - 1];
        rel[j] = rel[j - 1] + coeffs.multinomial(decremented);
        ++decremented[j - 1];
    }
    return rel;
}

AmplitudeSequence mr_map(const Composition& c, const BigNat& rank, const CoefficientLUT* lut) {
    const CoeffSource coeffs(lut);
    const int m = static_cast<int>(c.size());
    const int n = c.n();
    if (rank < 0 || rank >= multinom(c))
        throw std::out_of_range("mr_map: rank out of range for composition");

    std::vector<int> remaining = c.counts();
    BigNat target = rank;
    AmplitudeSequence s(n);
    for (int i = 0; i < n; ++i) {
        const std::vector<BigNat> rel = mr_relative_ranks(remaining, coeffs);
        int pick = 0;
        for (int j = m - 1; j >= 0; --j) {
            if (rel[j] <= target) {
                pick = j;
                break;
            }
        }
        assert(remaining[pick] > 0);
        s[i] = pick + 1;
        --remaining[pick];
        target -= rel[pick];
    }
    return s;
}

BigNat mr_demap(const Composition& c, const AmplitudeSequence& s, const CoefficientLUT* lut) {
    const CoeffSource coeffs(lut);
    const int m = static_cast<int>(c.size());
    if (sequence_counts(s, m) != c.counts())
        throw std::invalid_argument("mr_demap: sequence is not a permutation of the composition");

    std::vector<int> remaining = c.counts();
    BigNat rank = 0;
    for (int sym : s) {
        const std::vector<BigNat> rel = mr_relative_ranks(remaining, coeffs);
        const int idx = sym - 1;
        rank += rel[idx];
        --remaining[idx];
    }
    return rank;
}

std::vector<int> sr_unrank_positions(int n, int w, const BigNat& rank, const CoefficientLUT* lut) {
    const CoeffSource coeffs(lut);
    if (n < 0 || w < 0 || w > n) throw std::domain_error("sr_unrank: require 0 <= w <= n");
    if (rank < 0 || rank >= coeffs.binomial(n, w))
        throw std::out_of_range("sr_unrank: rank out of range");

    std::vector<int> positions;
    positions.reserve(w);
    BigNat remaining_rank = rank;
    int candidate = 1;
    for (int slot = 0; slot < w; ++slot) {
        // Subsets whose next element is `candidate` number binom(n - candidate, left - 1).
        const int left = w - slot;
        for (;; ++candidate) {
            BigNat block = coeffs.binomial(n - candidate, left - 1);
            if (remaining_rank < block) break;
            remaining_rank -= block;
        }
        positions.push_back(candidate);
        ++candidate;
    }
    return positions;
}

BigNat sr_rank_positions(int n, const std::vector<int>& positions, const CoefficientLUT* lut) {
    const CoeffSource coeffs(lut);
    const int w = static_cast<int>(positions.size());
    BigNat rank = 0;
    int previous = 0;
    for (int slot = 0; slot < w; ++slot) {
        const int p = positions[slot];
        if (p <= previous || p > n)
            throw std::invalid_argument("sr_rank: positions must be strictly increasing in [1, n]");
        const int left = w - slot;
        for (int v = previous + 1; v < p; ++v) rank += coeffs.binomial(n - v, left - 1);
        previous = p;
    }
    return rank;
}

AmplitudeSequence sr_unrank(int n, int w, const BigNat& rank, const CoefficientLUT* lut) {
    AmplitudeSequence s(n, 1);
    for (int p : sr_unrank_positions(n, w, rank, lut)) s[p - 1] = 2;
    return s;
}

BigNat sr_rank(int n, int w, const AmplitudeSequence& s, const CoefficientLUT* lut) {
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("sr_rank: bad sequence length");
    std::vector<int> positions;
    for (int i = 0; i < n; ++i) {
        if (s[i] == 2) positions.push_back(i + 1);
        else if (s[i] != 1) throw std::invalid_argument("sr_rank: sequence must be binary (indices 1/2)");
    }
    if (static_cast<int>(positions.size()) != w)
        throw std::invalid_argument("sr_rank: heavy weight mismatch");
    return sr_rank_positions(n, positions, lut);
}

int pa_level_bits(int remaining_length, int count) {
    BigNat ways = binom(remaining_length, count);
    return ways == 1 ? 0 : floor_log2(ways);
}

int pa_payload_bits(const Composition& c) {
    int bits = 0;
    int remaining = c.n();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        bits += pa_level_bits(remaining, c[i]);
        remaining -= c[i];
    }
    return bits;
}

AmplitudeSequence pa_map(const Composition& c, const BitWord& bits, const CoefficientLUT* lut) {
    const int m = static_cast<int>(c.size());
    const int n = c.n();
    if (static_cast<int>(bits.length()) != pa_payload_bits(c))
        throw std::invalid_argument("pa_map: bit word length must equal the transform's bit budget");

    AmplitudeSequence s(n, 0);
    std::vector<int> unassigned(n);  // absolute positions, 1-based, ascending
    for (int i = 0; i < n; ++i) unassigned[i] = i + 1;

    std::size_t cursor = 0;
    for (int level = 0; level < m - 1; ++level) {
        const int len = static_cast<int>(unassigned.size());
        const int heavy = len - c[level];  // positions that stay for higher amplitudes
        const int budget = pa_level_bits(len, c[level]);
        const BitWord sub = bits.slice(cursor, budget);
        cursor += budget;

        const std::vector<int> heavy_rel = sr_unrank_positions(len, heavy, sub.value(), lut);
        std::vector<int> next_unassigned;
        next_unassigned.reserve(heavy);
        std::size_t h = 0;
        for (int rel = 1; rel <= len; ++rel) {
            const int absolute = unassigned[rel - 1];
            if (h < heavy_rel.size() && heavy_rel[h] == rel) {
                next_unassigned.push_back(absolute);
                ++h;
            } else {
                s[absolute - 1] = level + 1;
            }
        }
        unassigned = std::move(next_unassigned);
    }
    for (int absolute : unassigned) s[absolute - 1] = m;
    return s;
}

BitWord pa_demap(const Composition& c, const AmplitudeSequence& s, const CoefficientLUT* lut) {
    const int m = static_cast<int>(c.size());
    const int n = c.n();
    if (sequence_counts(s, m) != c.counts())
        throw std::invalid_argument("pa_demap: sequence is not a permutation of the composition");

    BitWord out;
    std::vector<int> unassigned(n);
    for (int i = 0; i < n; ++i) unassigned[i] = i + 1;

    for (int level = 0; level < m - 1; ++level) {
        const int len = static_cast<int>(unassigned.size());
        const int budget = pa_level_bits(len, c[level]);

        std::vector<int> heavy_rel;
        std::vector<int> next_unassigned;
        for (int rel = 1; rel <= len; ++rel) {
            const int absolute = unassigned[rel - 1];
            if (s[absolute - 1] != level + 1) {
                heavy_rel.push_back(rel);
                next_unassigned.push_back(absolute);
            }
        }
        BigNat rank = sr_rank_positions(len, heavy_rel, lut);
        if (budget == 0 ? rank != 0 : rank >= pow2(budget))
            throw DecodeIntegrityError("pa_demap: level " + std::to_string(level + 1) +
                                       " sub-rank outside the addressed space");
        out = out.concat(BitWord(budget, std::move(rank)));
        unassigned = std::move(next_unassigned);
    }
    return out;
}

int ccdm_payload_bits(const Composition& c, Engine engine, const CoefficientLUT* lut) {
    if (engine == Engine::Mr) {
        BigNat count = CoeffSource(lut).multinomial(c.counts());
        return count == 1 ? 0 : floor_log2(count);
    }
    return pa_payload_bits(c);
}

}  // namespace ampshape
