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

#include "ampshape/bitword.hpp"

#include <stdexcept>

namespace ampshape {

BitWord::BitWord(std::size_t length, BigNat value) : length_(length), value_(std::move(value)) {
    if (value_ < 0) throw std::invalid_argument("BitWord: negative value");
    if (value_ != 0 && static_cast<std::size_t>(floor_log2(value_)) >= length_)
        throw std::invalid_argument("BitWord: value does not fit in length");
}

BitWord BitWord::from_bits(const std::string& bits) {
    BigNat value = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("BitWord: bad bit character");
        value <<= 1;
        if (ch == '1') value |= 1;
    }
    return BitWord(bits.size(), std::move(value));
}

BitWord BitWord::from_hex(const std::string& hex) {
    BigNat value = 0;
    for (char ch : hex) {
        int digit;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        else throw std::invalid_argument("BitWord: bad hex character");
        value <<= 4;
        value |= digit;
    }
    return BitWord(4 * hex.size(), std::move(value));
}

int BitWord::bit(std::size_t i) const {
    if (i >= length_) throw std::out_of_range("BitWord::bit: index out of range");
    return boost::multiprecision::bit_test(value_, static_cast<unsigned>(length_ - 1 - i)) ? 1 : 0;
}

BitWord BitWord::prefix(std::size_t count) const {
    if (count > length_) throw std::out_of_range("BitWord::prefix: count exceeds length");
    return BitWord(count, value_ >> (length_ - count));
}

BitWord BitWord::slice(std::size_t pos, std::size_t count) const {
    if (pos + count > length_) throw std::out_of_range("BitWord::slice: range exceeds length");
    BigNat shifted = value_ >> (length_ - pos - count);
    if (count == 0) return BitWord();
    BigNat mask = (BigNat(1) << count) - 1;
    return BitWord(count, shifted & mask);
}

BitWord BitWord::concat(const BitWord& tail) const {
    BigNat value = (value_ << tail.length_) | tail.value_;
    return BitWord(length_ + tail.length_, std::move(value));
}

BitWord BitWord::resized(std::size_t new_length) const {
    return BitWord(new_length, value_);
}

std::string BitWord::to_bit_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

std::string BitWord::to_hex() const {
    if (length_ % 4 != 0) throw std::logic_error("BitWord::to_hex: length not a multiple of 4");
    static const char* digits = "0123456789abcdef";
    std::string out(length_ / 4, '0');
    BigNat v = value_;
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = digits[static_cast<unsigned>(v & 0xf)];
        v >>= 4;
    }
    return out;
}

}  // namespace ampshape
