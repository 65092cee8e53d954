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

#ifndef AMPSHAPE_ALPHABET_HPP
#define AMPSHAPE_ALPHABET_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ampshape {

/// Ordered set of ASK amplitude levels. Strictly increasing positive
/// integers, at least two of them. The default {1,3,5,7} is the one-sided
/// amplitude set of 64QAM.
class Alphabet {
  public:
    Alphabet() : amplitudes_{1, 3, 5, 7} {}

    explicit Alphabet(std::vector<int> amplitudes) : amplitudes_(std::move(amplitudes)) {
        validate();
    }

    Alphabet(std::initializer_list<int> amplitudes) : amplitudes_(amplitudes) { validate(); }

    std::size_t size() const { return amplitudes_.size(); }
    int operator[](std::size_t i) const { return amplitudes_[i]; }
    const std::vector<int>& amplitudes() const { return amplitudes_; }

    bool operator==(const Alphabet& other) const = default;

  private:
    void validate() const {
        if (amplitudes_.size() < 2)
            throw std::invalid_argument("Alphabet: need at least two amplitudes");
        int prev = 0;
        for (int a : amplitudes_) {
            if (a < 1) throw std::invalid_argument("Alphabet: amplitudes must be >= 1");
            if (a <= prev) throw std::invalid_argument("Alphabet: amplitudes must be strictly increasing");
            prev = a;
        }
    }

    std::vector<int> amplitudes_;
};

}  // namespace ampshape

#endif  // AMPSHAPE_ALPHABET_HPP
