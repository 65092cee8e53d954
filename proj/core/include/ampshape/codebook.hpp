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

#ifndef AMPSHAPE_CODEBOOK_HPP
#define AMPSHAPE_CODEBOOK_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ampshape/alphabet.hpp"
#include "ampshape/bitword.hpp"
#include "ampshape/composition.hpp"
#include "ampshape/ranking.hpp"

namespace ampshape {

enum class Scheme { Ccdm, Mpdm, Hcss };

std::string to_string(Scheme scheme);
std::string to_string(Engine engine);
Scheme scheme_from_string(const std::string& text);
Engine engine_from_string(const std::string& text);

/// Amplitude probability mass function: m probabilities summing to 1.
struct AveragePmf {
    std::vector<double> probabilities;

    /// Throws std::invalid_argument unless the entries are in [0,1] and sum
    /// to 1 within 1e-12.
    void validate() const;
};

/// One leaf of the shaper's prefix tree: the prefix selects this entry's
/// composition and the remaining payload_bits bits address one of its
/// 2^payload_bits granted sequences. Pairwise-partition entries carry their
/// complement composition so the pair averages to the target.
struct CodebookEntry {
    BitWord prefix;
    Composition composition;
    int payload_bits = 0;
    std::optional<Composition> mpdm_twin;
};

/// Ordered prefix-tree description of a block shaper. Invariants checked on
/// construction and load:
///   - sum over entries of 2^payload_bits == 2^k (Kraft equality),
///   - prefix_bits + payload_bits == k for every entry,
///   - prefixes form a prefix-free set,
///   - payload_bits <= the engine's capacity for the entry's composition,
///   - entry compositions are distinct (a received block is identified by
///     its composition alone),
///   - MPDM: composition + twin == 2 x target, element-wise.
/// Immutable after construction; shape/deshape are pure.
class ShaperCodebook {
  public:
    ShaperCodebook(Scheme scheme, Engine engine, Alphabet alphabet, int n, int k,
                   std::vector<CodebookEntry> entries);

    Scheme scheme() const { return scheme_; }
    Engine engine() const { return engine_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<CodebookEntry>& entries() const { return entries_; }

    /// Longest prefix length over the entries (the tree depth).
    int tree_depth() const;

    /// Entry whose prefix matches the first bits of `word` (word length k).
    const CodebookEntry& match_prefix(const BitWord& word) const;

    /// Entry whose composition equals `counts`, or nullptr.
    const CodebookEntry* find_composition(const std::vector<int>& counts) const;

    void save(std::ostream& out) const;
    static ShaperCodebook load(std::istream& in);

  private:
    void validate() const;
    void build_indices();

    Scheme scheme_;
    Engine engine_;
    Alphabet alphabet_;
    int n_;
    int k_;
    std::vector<CodebookEntry> entries_;
    std::map<std::pair<std::size_t, BigNat>, std::size_t> prefix_index_;  // (len, value) -> entry
    std::map<std::vector<int>, std::size_t> composition_index_;
};

/// Canonical prefix assignment for payload sizes satisfying Kraft equality:
/// codes are allocated in (prefix length ascending, input order) sequence,
/// so codewords within one length class increase in input order.
/// payload_bits[i] becomes a prefix of length k - payload_bits[i].
std::vector<BitWord> assign_canonical_prefixes(int k, const std::vector<int>& payload_bits);

}  // namespace ampshape

#endif  // AMPSHAPE_CODEBOOK_HPP
