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

#ifndef AMPSHAPE_BIGNAT_HPP
#define AMPSHAPE_BIGNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>

namespace ampshape {

/// Arbitrary-precision natural number. Counts, coefficients and ranks are
/// always exact; no operation in this library ever rounds one.
using BigNat = boost::multiprecision::cpp_int;

/// Exact rational, used where a partially occupied set must be accounted
/// for without rounding.
using BigRat = boost::multiprecision::cpp_rational;

/// floor(log2 v) for v >= 1.
inline int floor_log2(const BigNat& v) {
    if (v <= 0) throw std::domain_error("floor_log2: argument must be positive");
    return static_cast<int>(boost::multiprecision::msb(v));
}

/// ceil(log2 v) for v >= 1, with the convention ceil(log2 1) = 0.
inline int ceil_log2(const BigNat& v) {
    if (v <= 0) throw std::domain_error("ceil_log2: argument must be positive");
    if (v == 1) return 0;
    return static_cast<int>(boost::multiprecision::msb(v - 1)) + 1;
}

/// 2^e as a BigNat.
inline BigNat pow2(int e) {
    assert(e >= 0);
    return BigNat(1) << e;
}

}  // namespace ampshape

#endif  // AMPSHAPE_BIGNAT_HPP
