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

#ifndef AMPSHAPE_SHAPERS_HPP
#define AMPSHAPE_SHAPERS_HPP

#include "ampshape/codebook.hpp"

namespace ampshape {

/// Deterministic quantization of a target PMF to integer counts:
/// floor(n * p_i) plus largest-remainder correction, remainder ties broken
/// toward the lower index.
Composition ccdm_composition_from_pmf(const AveragePmf& pmf, int n);

/// Single-composition shaper: one entry, empty prefix, k equal to the
/// engine's capacity for the quantized composition. Throws
/// DegenerateShaperError when that capacity is zero.
ShaperCodebook build_ccdm(const AveragePmf& pmf, int n, Engine engine,
                          const Alphabet& alphabet = Alphabet());

/// Sphere shaper on the composition prefix tree. Compositions whose usable
/// sequence count 2^payload is below 2^min_perm_exponent are dropped
/// (exponent 0 keeps everything); the rest are walked in ascending block
/// energy and each is granted the largest power of two not exceeding the
/// residual input space, until 2^k_target sequences are covered exactly.
/// Throws RateInfeasibleError when the eligible compositions cannot cover
/// the space.
ShaperCodebook build_hcss(int n, const Alphabet& alphabet, int k_target, Engine engine,
                          int min_perm_exponent = 0);

/// Pairwise-partition shaper: complement composition pairs (T+d, T-d)
/// around the quantized target T, each granted an equal power-of-two count
/// per member so every pair averages to T exactly, plus the singleton T.
/// k = floor(log2 of the summed grants); the final dyadic trim keeps pairs
/// balanced. Throws RateInfeasibleError when fewer than two sequences are
/// addressable.
ShaperCodebook build_mpdm(const AveragePmf& pmf, int n, const Alphabet& alphabet = Alphabet());

/// Maps one k-bit word: the matched prefix selects the entry, the payload
/// bits select the sequence within the entry's composition.
AmplitudeSequence shape(const ShaperCodebook& cb, const BitWord& bits,
                        const CoefficientLUT* lut = nullptr);

/// Inverse of shape. The received block is identified by its composition;
/// an unknown composition or a demapped rank outside the entry's granted
/// space throws DecodeIntegrityError.
BitWord deshape(const ShaperCodebook& cb, const AmplitudeSequence& s,
                const CoefficientLUT* lut = nullptr);

/// Sequence-count-weighted average PMF over all 2^k addressed sequences.
AveragePmf codebook_average_pmf(const ShaperCodebook& cb);

}  // namespace ampshape

#endif  // AMPSHAPE_SHAPERS_HPP
