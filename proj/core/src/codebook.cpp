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

#include "ampshape/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ampshape/errors.hpp"

namespace ampshape {

namespace {

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string format_csv_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Ccdm: return "CCDM";
        case Scheme::Mpdm: return "MPDM";
        case Scheme::Hcss: return "HCSS";
    }
    throw std::logic_error("to_string(Scheme): bad value");
}

std::string to_string(Engine engine) {
    return engine == Engine::Mr ? "MR" : "SR-PA";
}

Scheme scheme_from_string(const std::string& text) {
    if (text == "CCDM") return Scheme::Ccdm;
    if (text == "MPDM") return Scheme::Mpdm;
    if (text == "HCSS") return Scheme::Hcss;
    throw std::invalid_argument("unknown scheme: " + text);
}

Engine engine_from_string(const std::string& text) {
    if (text == "MR" || text == "mr") return Engine::Mr;
    if (text == "SR-PA" || text == "SR" || text == "sr") return Engine::SrPa;
    throw std::invalid_argument("unknown engine: " + text);
}

void AveragePmf::validate() const {
    if (probabilities.size() < 2) throw std::invalid_argument("pmf: need at least two entries");
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("pmf: probabilities must be in [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("pmf: probabilities must sum to 1");
}

ShaperCodebook::ShaperCodebook(Scheme scheme, Engine engine, Alphabet alphabet, int n, int k,
                               std::vector<CodebookEntry> entries)
    : scheme_(scheme),
      engine_(engine),
      alphabet_(std::move(alphabet)),
      n_(n),
      k_(k),
      entries_(std::move(entries)) {
    validate();
    build_indices();
}

void ShaperCodebook::validate() const {
    if (n_ < 1 || k_ < 0) throw std::invalid_argument("codebook: bad n or k");
    if (entries_.empty()) throw std::invalid_argument("codebook: no entries");
    BigNat covered = 0;
    for (const CodebookEntry& e : entries_) {
        if (e.composition.size() != alphabet_.size())
            throw std::invalid_argument("codebook: composition width mismatch");
        if (e.composition.n() != n_) throw std::invalid_argument("codebook: composition length mismatch");
        if (e.payload_bits < 0 || e.payload_bits > k_)
            throw std::invalid_argument("codebook: payload bits out of range");
        if (static_cast<int>(e.prefix.length()) + e.payload_bits != k_)
            throw std::invalid_argument("codebook: prefix + payload must equal k");
        if (e.payload_bits > ccdm_payload_bits(e.composition, engine_))
            throw std::invalid_argument("codebook: payload exceeds engine capacity");
        if (scheme_ == Scheme::Mpdm) {
            if (!e.mpdm_twin) throw std::invalid_argument("codebook: MPDM entry missing twin");
            if (e.mpdm_twin->size() != e.composition.size())
                throw std::invalid_argument("codebook: twin width mismatch");
        }
        covered += pow2(e.payload_bits);
    }
    if (covered != pow2(k_))
        throw std::invalid_argument("codebook: entries do not cover the input space exactly");

    // Prefix-freeness: each prefix owns the k-bit value interval
    // [value << payload, (value + 1) << payload). With Kraft equality the set
    // is prefix-free exactly when those intervals tile [0, 2^k) seamlessly.
    std::vector<std::pair<BigNat, BigNat>> blocks;  // (start, size)
    blocks.reserve(entries_.size());
    for (const CodebookEntry& e : entries_)
        blocks.emplace_back(e.prefix.value() << e.payload_bits, pow2(e.payload_bits));
    std::sort(blocks.begin(), blocks.end());
    BigNat expected_start = 0;
    for (const auto& [start, size] : blocks) {
        if (start != expected_start)
            throw std::invalid_argument("codebook: prefixes are not a prefix-free cover");
        expected_start = start + size;
    }
}

void ShaperCodebook::build_indices() {
    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
        const CodebookEntry& e = entries_[idx];
        auto [it, inserted] =
            prefix_index_.emplace(std::make_pair(e.prefix.length(), e.prefix.value()), idx);
        if (!inserted) throw std::invalid_argument("codebook: duplicate prefix");
        auto [cit, cinserted] = composition_index_.emplace(e.composition.counts(), idx);
        if (!cinserted) throw std::invalid_argument("codebook: duplicate composition");
    }
    // Any ancestor/descendant pair among prefixes would double-cover input
    // words, contradicting the exact Kraft partition checked above.
}

int ShaperCodebook::tree_depth() const {
    int depth = 0;
    for (const CodebookEntry& e : entries_) depth = std::max(depth, static_cast<int>(e.prefix.length()));
    return depth;
}

const CodebookEntry& ShaperCodebook::match_prefix(const BitWord& word) const {
    if (static_cast<int>(word.length()) != k_)
        throw std::invalid_argument("codebook: input word length must equal k");
    // one probe per distinct prefix length
    auto it = prefix_index_.begin();
    while (it != prefix_index_.end()) {
        const std::size_t len = it->first.first;
        auto probe = prefix_index_.find({len, word.prefix(len).value()});
        if (probe != prefix_index_.end()) return entries_[probe->second];
        it = prefix_index_.lower_bound({len + 1, BigNat(0)});
    }
    throw std::logic_error("codebook: no prefix matched a full-cover code");
}

const CodebookEntry* ShaperCodebook::find_composition(const std::vector<int>& counts) const {
    auto it = composition_index_.find(counts);
    return it == composition_index_.end() ? nullptr : &entries_[it->second];
}

void ShaperCodebook::save(std::ostream& out) const {
    out << "CODEBOOK scheme=" << to_string(scheme_) << " engine=" << to_string(engine_)
        << " n=" << n_ << " k=" << k_ << " amps=" << format_csv_ints(alphabet_.amplitudes()) << '\n';
    for (const CodebookEntry& e : entries_) {
        const std::string bits = e.prefix.to_bit_string();
        out << (bits.empty() ? "-" : bits) << ' ' << format_csv_ints(e.composition.counts()) << ' '
            << e.payload_bits;
        if (e.mpdm_twin) out << " twin=" << format_csv_ints(e.mpdm_twin->counts());
        out << '\n';
    }
}

ShaperCodebook ShaperCodebook::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("CODEBOOK ", 0) != 0)
        throw std::runtime_error("codebook load: missing CODEBOOK header");

    std::optional<Scheme> scheme;
    std::optional<Engine> engine;
    int n = -1, k = -1;
    std::vector<int> amps;
    {
        std::stringstream ss(line.substr(9));
        std::string tok;
        while (ss >> tok) {
            if (tok.rfind("scheme=", 0) == 0) scheme = scheme_from_string(tok.substr(7));
            else if (tok.rfind("engine=", 0) == 0) engine = engine_from_string(tok.substr(7));
            else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
            else if (tok.rfind("k=", 0) == 0) k = std::stoi(tok.substr(2));
            else if (tok.rfind("amps=", 0) == 0) amps = parse_csv_ints(tok.substr(5));
            else throw std::runtime_error("codebook load: bad header token: " + tok);
        }
    }
    if (!scheme || !engine || n < 0 || k < 0 || amps.empty())
        throw std::runtime_error("codebook load: incomplete header");

    std::vector<CodebookEntry> entries;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string prefix_text, counts_text;
        int payload = 0;
        if (!(ss >> prefix_text >> counts_text >> payload))
            throw std::runtime_error("codebook load: bad entry line: " + line);
        CodebookEntry e;
        e.prefix = prefix_text == "-" ? BitWord() : BitWord::from_bits(prefix_text);
        e.composition = Composition(parse_csv_ints(counts_text));
        e.payload_bits = payload;
        std::string extra;
        if (ss >> extra) {
            if (extra.rfind("twin=", 0) != 0)
                throw std::runtime_error("codebook load: bad entry suffix: " + extra);
            e.mpdm_twin = Composition(parse_csv_ints(extra.substr(5)));
        }
        entries.push_back(std::move(e));
    }
    return ShaperCodebook(*scheme, *engine, Alphabet(amps), n, k, std::move(entries));
}

std::vector<BitWord> assign_canonical_prefixes(int k, const std::vector<int>& payload_bits) {
    std::vector<std::size_t> order(payload_bits.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return payload_bits[a] > payload_bits[b];  // shortest prefix first
    });

    std::vector<BitWord> prefixes(payload_bits.size());
    BigNat code = 0;
    int previous_length = -1;
    for (std::size_t idx : order) {
        const int length = k - payload_bits[idx];
        if (previous_length >= 0) {
            code += 1;
            code <<= (length - previous_length);
        }
        prefixes[idx] = BitWord(static_cast<std::size_t>(length), code);
        previous_length = length;
    }
    if (previous_length >= 0 && code + 1 != pow2(previous_length))
        throw std::logic_error("assign_canonical_prefixes: sizes do not satisfy Kraft equality");
    return prefixes;
}

}  // namespace ampshape
