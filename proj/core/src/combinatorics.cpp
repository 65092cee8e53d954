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

#include "ampshape/combinatorics.hpp"

#include <stdexcept>

namespace ampshape {

BigNat binom(int n, int w) {
    if (n < 0 || w < 0 || w > n)
        throw std::domain_error("binom: require 0 <= w <= n");
    if (w > n - w) w = n - w;
    BigNat result = 1;
    for (int i = 1; i <= w; ++i) {
        result *= n - w + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigNat multinom(const Composition& c) {
    return multinom_counts(c.counts());
}

BigNat multinom_counts(const std::vector<int>& counts) {
    int prefix = 0;
    BigNat result = 1;
    for (int ci : counts) {
        if (ci < 0) return 0;
        prefix += ci;
        result *= binom(prefix, ci);
    }
    return result;
}

std::vector<Composition> enumerate_compositions(int n, const Alphabet& alphabet) {
    if (n < 1) throw std::domain_error("enumerate_compositions: n must be >= 1");
    const int m = static_cast<int>(alphabet.size());
    std::vector<Composition> out;
    std::vector<int> counts(m, 0);
    auto recurse = [&](auto&& self, int index, int remaining) -> void {
        if (index == m - 1) {
            counts[index] = remaining;
            out.emplace_back(counts);
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            counts[index] = c;
            self(self, index + 1, remaining - c);
        }
    };
    recurse(recurse, 0, n);
    return out;
}

std::int64_t composition_energy(const Composition& c, const Alphabet& alphabet) {
    if (c.size() != alphabet.size())
        throw std::invalid_argument("composition_energy: composition/alphabet size mismatch");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t a = alphabet[i];
        total += static_cast<std::int64_t>(c[i]) * a * a;
    }
    return total;
}

}  // namespace ampshape
