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

#ifndef AMPSHAPE_ERRORS_HPP
#define AMPSHAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ampshape {

/// Requested key is not stored in a coefficient table. Callers that query
/// keys outside the table's coverage are expected to fall back to direct
/// computation.
class LutMissError : public std::runtime_error {
  public:
    explicit LutMissError(const std::string& what) : std::runtime_error(what) {}
};

/// A received sequence cannot have been produced by the shaper (unknown
/// composition or a recovered rank outside the addressed payload space).
/// Signals an uncorrected channel error upstream.
class DecodeIntegrityError : public std::runtime_error {
  public:
    explicit DecodeIntegrityError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested rate cannot be realized with the available sequences.
class RateInfeasibleError : public std::runtime_error {
  public:
    explicit RateInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// The shaper would address zero input bits.
class DegenerateShaperError : public std::runtime_error {
  public:
    explicit DegenerateShaperError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ampshape

#endif  // AMPSHAPE_ERRORS_HPP
