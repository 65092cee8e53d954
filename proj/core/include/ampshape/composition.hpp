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

#ifndef AMPSHAPE_COMPOSITION_HPP
#define AMPSHAPE_COMPOSITION_HPP

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ampshape {

/// Occurrence counts of each amplitude in one length-n block. The block
/// length is the sum of the counts; every shaped sequence governed by a
/// composition is a permutation of the same amplitude multiset.
class Composition {
  public:
    Composition() = default;

    explicit Composition(std::vector<int> counts) : counts_(std::move(counts)) { validate(); }

    Composition(std::initializer_list<int> counts) : counts_(counts) { validate(); }

    std::size_t size() const { return counts_.size(); }
    int operator[](std::size_t i) const { return counts_[i]; }
    const std::vector<int>& counts() const { return counts_; }

    /// Block length n.
    int n() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    bool operator==(const Composition& other) const = default;
    auto operator<=>(const Composition& other) const = default;

  private:
    void validate() const {
        if (counts_.empty()) throw std::invalid_argument("Composition: empty count vector");
        for (int c : counts_)
            if (c < 0) throw std::invalid_argument("Composition: counts must be non-negative");
        if (n() < 1) throw std::invalid_argument("Composition: block length must be positive");
    }

    std::vector<int> counts_;
};

}  // namespace ampshape

#endif  // AMPSHAPE_COMPOSITION_HPP
