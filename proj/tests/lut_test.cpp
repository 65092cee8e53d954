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

#include <sstream>

#include "doctest.h"

#include "ampshape/combinatorics.hpp"
#include "ampshape/errors.hpp"
#include "ampshape/lut.hpp"

using namespace ampshape;

TEST_CASE("sr lut coverage and sizes") {
    const CoefficientLUT lut = build_sr_lut(50);
    CHECK(lut.kind() == LutKind::SrBinomial);
    CHECK(lut.total_bits() == 14293);  // 14.3 kbit
    CHECK(lut.entry_count() == 576);

    // independent term-by-term evaluation of the size formula
    std::uint64_t expect = 0;
    std::size_t entries = 0;
    for (int i = 4; i <= 50; ++i) {
        for (int w = 2; w <= i / 2; ++w) {
            expect += static_cast<std::uint64_t>(ceil_log2(binom(i, w)));
            ++entries;
        }
    }
    CHECK(lut.total_bits() == expect);
    CHECK(lut.entry_count() == entries);

    CHECK(build_sr_lut(20).total_bits() == 860);  // fits in 1 kbit
    CHECK(build_sr_lut(3).total_bits() == 0);     // below the first stored length
    CHECK(build_sr_lut(3).entry_count() == 0);
}

TEST_CASE("sr lut lookup and symmetry") {
    const CoefficientLUT lut = build_sr_lut(12);
    CHECK(lut.at_sr(10, 4) == 210);
    CHECK(lut.find_sr(10, 6) == nullptr);  // stored under (10,4) only
    CHECK_THROWS_AS(lut.at_sr(10, 6), LutMissError);
    CHECK(lut.find_sr(10, 1) == nullptr);  // trivial, never stored
    CHECK(lut.find_sr(3, 2) == nullptr);   // below the first stored length

    // every covered key matches direct computation
    for (int i = 4; i <= 12; ++i)
        for (int w = 2; w <= i / 2; ++w) CHECK(lut.at_sr(i, w) == binom(i, w));

    // the normalizing source resolves mirrored and trivial keys
    const CoeffSource with(&lut);
    const CoeffSource without(nullptr);
    for (int n = 0; n <= 12; ++n)
        for (int w = 0; w <= n; ++w) CHECK(with.binomial(n, w) == without.binomial(n, w));
    CHECK(with.binomial(10, 6) == 210);
}

TEST_CASE("mr lut stores sorted multisets once") {
    const Alphabet quad{1, 3, 5, 7};
    const CoefficientLUT lut = build_mr_lut(20, quad);
    CHECK(lut.total_bits() == 10258);
    CHECK(lut.entry_count() == 608);
    CHECK(lut.at_mr({2, 1, 1, 0}) == 12);
    CHECK(lut.find_mr({1, 2, 1, 0}) == nullptr);  // unsorted spelling is not a key

    const CoeffSource with(&lut);
    CHECK(with.multinomial({1, 2, 1, 0}) == 12);
    CHECK(with.multinomial({0, 1, 1, 2}) == 12);
    CHECK(with.multinomial({1, -1, 2, 0}) == 0);

    // smallest case: only the length-1 multiset, one entry worth 0 bits
    const CoefficientLUT tiny = build_mr_lut(2, Alphabet{1, 3});
    CHECK(tiny.entry_count() == 1);
    CHECK(tiny.at_mr({1, 0}) == 1);
    CHECK(tiny.total_bits() == 0);
}

TEST_CASE("mr lut size is non-decreasing in n") {
    const Alphabet quad{1, 3, 5, 7};
    std::uint64_t previous = 0;
    for (int n = 2; n <= 16; ++n) {
        const std::uint64_t bits = build_mr_lut(n, quad).total_bits();
        CHECK(bits >= previous);
        previous = bits;
    }
}

TEST_CASE("lut save/load round trip") {
    std::stringstream sr_stream;
    build_sr_lut(10).save(sr_stream);
    const CoefficientLUT sr = CoefficientLUT::load(sr_stream);
    CHECK(sr.kind() == LutKind::SrBinomial);
    CHECK(sr.n_max() == 10);
    CHECK(sr.total_bits() == build_sr_lut(10).total_bits());
    CHECK(sr.at_sr(10, 4) == 210);

    std::stringstream mr_stream;
    build_mr_lut(6, Alphabet{1, 3, 5}).save(mr_stream);
    const std::string text = mr_stream.str();
    CHECK(text.rfind("MRLUT n=6 m=3", 0) == 0);
    std::stringstream reread(text);
    const CoefficientLUT mr = CoefficientLUT::load(reread);
    CHECK(mr.entry_count() == build_mr_lut(6, Alphabet{1, 3, 5}).entry_count());

    // a second save is byte-identical
    std::stringstream again;
    mr.save(again);
    CHECK(again.str() == text);
}

TEST_CASE("lut load rejects corrupted totals") {
    std::stringstream stream;
    build_sr_lut(8).save(stream);
    std::string text = stream.str();
    const auto pos = text.find("TOTAL_BITS");
    text = text.substr(0, pos) + "TOTAL_BITS 1\n";
    std::stringstream bad(text);
    CHECK_THROWS_AS(CoefficientLUT::load(bad), std::runtime_error);
}
