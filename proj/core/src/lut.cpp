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

#include "ampshape/lut.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ampshape/combinatorics.hpp"
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

CoefficientLUT CoefficientLUT::build_sr(int n_max) {
    CoefficientLUT lut;
    lut.kind_ = LutKind::SrBinomial;
    lut.n_max_ = n_max;
    for (int i = 4; i <= n_max; ++i) {
        for (int w = 2; w <= i / 2; ++w) {
            BigNat value = binom(i, w);
            const int width = ceil_log2(value);
            lut.total_bits_ += static_cast<std::uint64_t>(width);
            lut.max_entry_bits_ = std::max(lut.max_entry_bits_, width);
            lut.sr_entries_.emplace(std::make_pair(i, w), std::move(value));
        }
    }
    return lut;
}

CoefficientLUT CoefficientLUT::build_mr(int n, const Alphabet& alphabet) {
    if (n < 2) throw std::domain_error("build_mr_lut: n must be >= 2");
    CoefficientLUT lut;
    lut.kind_ = LutKind::MrMultinomial;
    lut.n_max_ = n;
    lut.m_ = static_cast<int>(alphabet.size());
    for (int i = 1; i <= n - 1; ++i) {
        for (const Composition& c : enumerate_compositions(i, alphabet)) {
            std::vector<int> key = c.counts();
            std::sort(key.begin(), key.end(), std::greater<int>());
            if (lut.mr_entries_.count(key)) continue;
            BigNat value = multinom_counts(key);
            const int width = ceil_log2(value);
            lut.total_bits_ += static_cast<std::uint64_t>(width);
            lut.max_entry_bits_ = std::max(lut.max_entry_bits_, width);
            lut.mr_entries_.emplace(std::move(key), std::move(value));
        }
    }
    return lut;
}

std::size_t CoefficientLUT::entry_count() const {
    return kind_ == LutKind::SrBinomial ? sr_entries_.size() : mr_entries_.size();
}

const BigNat* CoefficientLUT::find_sr(int i, int w) const {
    auto it = sr_entries_.find({i, w});
    return it == sr_entries_.end() ? nullptr : &it->second;
}

const BigNat* CoefficientLUT::find_mr(const std::vector<int>& sorted_counts) const {
    auto it = mr_entries_.find(sorted_counts);
    return it == mr_entries_.end() ? nullptr : &it->second;
}

const BigNat& CoefficientLUT::at_sr(int i, int w) const {
    const BigNat* v = find_sr(i, w);
    if (!v)
        throw LutMissError("SR LUT miss for key (" + std::to_string(i) + "," + std::to_string(w) + ")");
    return *v;
}

const BigNat& CoefficientLUT::at_mr(const std::vector<int>& sorted_counts) const {
    const BigNat* v = find_mr(sorted_counts);
    if (!v) throw LutMissError("MR LUT miss for key (" + format_csv_ints(sorted_counts) + ")");
    return *v;
}

void CoefficientLUT::save(std::ostream& out) const {
    if (kind_ == LutKind::SrBinomial) {
        out << "SRLUT n_max=" << n_max_ << '\n';
        for (const auto& [key, value] : sr_entries_)
            out << key.first << ',' << key.second << ' ' << value << '\n';
    } else {
        out << "MRLUT n=" << n_max_ << " m=" << m_ << '\n';
        for (const auto& [key, value] : mr_entries_)
            out << format_csv_ints(key) << ' ' << value << '\n';
    }
    out << "TOTAL_BITS " << total_bits_ << '\n';
}

CoefficientLUT CoefficientLUT::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("LUT load: empty input");

    CoefficientLUT lut;
    std::uint64_t declared_bits = 0;
    bool saw_total = false;

    if (line.rfind("SRLUT ", 0) == 0) {
        lut.kind_ = LutKind::SrBinomial;
        if (line.rfind("SRLUT n_max=", 0) != 0) throw std::runtime_error("LUT load: bad SRLUT header");
        lut.n_max_ = std::stoi(line.substr(12));
    } else if (line.rfind("MRLUT ", 0) == 0) {
        lut.kind_ = LutKind::MrMultinomial;
        std::stringstream ss(line.substr(6));
        std::string tok;
        while (ss >> tok) {
            if (tok.rfind("n=", 0) == 0) lut.n_max_ = std::stoi(tok.substr(2));
            else if (tok.rfind("m=", 0) == 0) lut.m_ = std::stoi(tok.substr(2));
            else throw std::runtime_error("LUT load: bad MRLUT header token: " + tok);
        }
    } else {
        throw std::runtime_error("LUT load: unknown header: " + line);
    }

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("TOTAL_BITS ", 0) == 0) {
            declared_bits = std::stoull(line.substr(11));
            saw_total = true;
            break;
        }
        auto space = line.find(' ');
        if (space == std::string::npos) throw std::runtime_error("LUT load: bad entry line: " + line);
        BigNat value(line.substr(space + 1));
        const int width = ceil_log2(value);
        lut.total_bits_ += static_cast<std::uint64_t>(width);
        lut.max_entry_bits_ = std::max(lut.max_entry_bits_, width);
        if (lut.kind_ == LutKind::SrBinomial) {
            std::vector<int> key = parse_csv_ints(line.substr(0, space));
            if (key.size() != 2) throw std::runtime_error("LUT load: SR key must be i,w");
            lut.sr_entries_.emplace(std::make_pair(key[0], key[1]), std::move(value));
        } else {
            lut.mr_entries_.emplace(parse_csv_ints(line.substr(0, space)), std::move(value));
        }
    }
    if (!saw_total) throw std::runtime_error("LUT load: missing TOTAL_BITS trailer");
    if (declared_bits != lut.total_bits_)
        throw std::runtime_error("LUT load: TOTAL_BITS mismatch with entries");
    return lut;
}

CoefficientLUT build_sr_lut(int n_max) { return CoefficientLUT::build_sr(n_max); }

CoefficientLUT build_mr_lut(int n, const Alphabet& alphabet) {
    return CoefficientLUT::build_mr(n, alphabet);
}

CoeffSource::CoeffSource(const CoefficientLUT* lut) : lut_(lut) {}

BigNat CoeffSource::binomial(int n, int w) const {
    if (n < 0 || w < 0 || w > n) throw std::domain_error("CoeffSource::binomial: bad arguments");
    int wn = std::min(w, n - w);  // stored keys only cover the left half
    if (lut_ && lut_->kind() == LutKind::SrBinomial) {
        if (const BigNat* v = lut_->find_sr(n, wn)) return *v;
    }
    return binom(n, wn);
}

BigNat CoeffSource::multinomial(const std::vector<int>& counts) const {
    for (int c : counts)
        if (c < 0) return 0;
    if (lut_ && lut_->kind() == LutKind::MrMultinomial) {
        std::vector<int> key = counts;
        std::sort(key.begin(), key.end(), std::greater<int>());
        if (const BigNat* v = lut_->find_mr(key)) return *v;
    }
    return multinom_counts(counts);
}

}  // namespace ampshape
