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

#ifndef AMPSHAPE_BITWORD_HPP
#define AMPSHAPE_BITWORD_HPP

#include <cstddef>
#include <string>

#include "ampshape/bignat.hpp"

namespace ampshape {

/// Fixed-length bit string. The bits denote an unsigned integer, most
/// significant bit first; a word of length k holds values in [0, 2^k).
/// Length zero (the empty word, value 0) is valid.
class BitWord {
  public:
    BitWord() = default;

    BitWord(std::size_t length, BigNat value);

    static BitWord from_bits(const std::string& bits);          // "0"/"1" characters
    static BitWord from_hex(const std::string& hex);            // length = 4 * strlen
    static BitWord zeros(std::size_t length) { return BitWord(length, 0); }

    std::size_t length() const { return length_; }
    const BigNat& value() const { return value_; }
    bool empty() const { return length_ == 0; }

    /// Bit at position i, counting from 0 at the most significant end.
    int bit(std::size_t i) const;

    /// First `count` bits as a word.
    BitWord prefix(std::size_t count) const;

    /// Bits [pos, pos+count) as a word.
    BitWord slice(std::size_t pos, std::size_t count) const;

    /// This word followed by `tail`.
    BitWord concat(const BitWord& tail) const;

    /// Same value reinterpreted at a new length (must still fit).
    BitWord resized(std::size_t new_length) const;

    std::string to_bit_string() const;
    std::string to_hex() const;  // requires length % 4 == 0

    bool operator==(const BitWord& other) const = default;

  private:
    std::size_t length_ = 0;
    BigNat value_ = 0;
};

}  // namespace ampshape

#endif  // AMPSHAPE_BITWORD_HPP
