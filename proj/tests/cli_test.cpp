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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Invocation result;
    result.code = ampshape::cli::run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / fs::path("ampshape-cli-test");
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli builds, analyzes and roundtrips a shaper") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");

    auto built = invoke({"build", "hcss", "--n", "10", "--k", "12", "--engine", "mr", "-o", cb});
    REQUIRE(built.code == 0);
    CHECK(built.out.empty());

    auto analyzed = invoke({"analyze", cb});
    REQUIRE(analyzed.code == 0);
    CHECK(contains(analyzed.out, "scheme: HCSS"));
    CHECK(contains(analyzed.out, "k: 12"));
    CHECK(contains(analyzed.out, "rate: 1.200000"));

    const std::string symbols = dir.file("symbols.txt");
    auto shaped = invoke({"shape", "--codebook", cb, "--in-hex", "abc123", "-o", symbols});
    REQUIRE(shaped.code == 0);
    const std::string blocks = slurp(symbols);
    CHECK(std::count(blocks.begin(), blocks.end(), '\n') == 2);  // 24 bits = two blocks

    auto deshaped = invoke({"deshape", "--codebook", cb, "--in", symbols});
    REQUIRE(deshaped.code == 0);
    CHECK(deshaped.out == "abc123\n");
}

TEST_CASE("cli shape consumes raw binary files most significant bit first") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");
    REQUIRE(invoke({"build", "hcss", "--n", "8", "--k", "8", "--engine", "sr", "-o", cb}).code == 0);

    const std::string raw = dir.file("payload.bin");
    {
        std::ofstream file(raw, std::ios::binary);
        const unsigned char bytes[] = {0xde, 0xad, 0xbe, 0xef};
        file.write(reinterpret_cast<const char*>(bytes), sizeof bytes);
    }
    const std::string symbols = dir.file("symbols.txt");
    REQUIRE(invoke({"shape", "--codebook", cb, "--in", raw, "-o", symbols}).code == 0);
    auto back = invoke({"deshape", "--codebook", cb, "--in", symbols});
    REQUIRE(back.code == 0);
    CHECK(back.out == "deadbeef\n");
}

TEST_CASE("cli is referentially transparent") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");
    REQUIRE(invoke({"build", "mpdm", "--pmf", "0.4,0.3,0.2,0.1", "--n", "12", "-o", cb}).code == 0);
    auto first = invoke({"analyze", cb});
    auto second = invoke({"analyze", cb});
    CHECK(first.out == second.out);

    auto sweep1 = invoke({"sweep", "pruning", "--n", "12", "--k", "16", "--engine", "mr",
                          "--exp-list", "0,2,4"});
    auto sweep2 = invoke({"sweep", "pruning", "--n", "12", "--k", "16", "--engine", "mr",
                          "--exp-list", "0,2,4"});
    CHECK(sweep1.code == 0);
    CHECK(sweep1.out == sweep2.out);
}

TEST_CASE("cli rejects block-length violations with exit 1") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");
    REQUIRE(invoke({"build", "hcss", "--n", "10", "--k", "12", "-o", cb}).code == 0);

    auto bad_bits = invoke({"shape", "--codebook", cb, "--in-hex", "ab"});
    CHECK(bad_bits.code == 1);
    CHECK(contains(bad_bits.err, "not a multiple of k"));

    const std::string symbols = dir.file("short.txt");
    std::ofstream(symbols) << "1,1,1\n";
    auto bad_block = invoke({"deshape", "--codebook", cb, "--in", symbols});
    CHECK(bad_block.code == 1);
    CHECK(contains(bad_block.err, "expected n"));
}

TEST_CASE("cli error taxonomy") {
    CHECK(invoke({"bogus"}).code == 1);                      // unknown subcommand
    CHECK(invoke({"build", "hcss", "--n", "10"}).code == 1); // missing --k/--rate
    CHECK(invoke({"build", "hcss", "--n", "10", "--k", "5", "--rate", "1.5"}).code == 1);
    CHECK(invoke({"build", "ccdm", "--n", "10", "--pmf", "0.9,0.2"}).code == 1);  // bad pmf
    CHECK(invoke({"analyze", "/no/such/file"}).code == 2);
    // degenerate shaper: data-level failure
    CHECK(invoke({"build", "ccdm", "--n", "6", "--amps", "1,3", "--pmf", "1.0,0.0"}).code == 2);
    // infeasible rate: data-level failure
    CHECK(invoke({"build", "hcss", "--n", "4", "--amps", "1,3", "--k", "10"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli deshape reports integrity errors with exit 2") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");
    REQUIRE(invoke({"build", "hcss", "--n", "10", "--k", "12", "-o", cb}).code == 0);
    const std::string symbols = dir.file("symbols.txt");
    std::ofstream(symbols) << "4,4,4,4,4,4,4,4,4,4\n";  // far outside the sphere
    auto result = invoke({"deshape", "--codebook", cb, "--in", symbols});
    CHECK(result.code == 2);
    CHECK(contains(result.err, "composition"));
}

TEST_CASE("cli rate flag derives k") {
    TempDir dir;
    const std::string cb = dir.file("cb.txt");
    REQUIRE(invoke({"build", "hcss", "--n", "20", "--rate", "1.5", "-o", cb}).code == 0);
    auto analyzed = invoke({"analyze", cb});
    CHECK(contains(analyzed.out, "k: 30"));
}

TEST_CASE("cli lut report and file output") {
    auto report = invoke({"lut", "sr", "--n-max", "50", "--report"});
    REQUIRE(report.code == 0);
    CHECK(contains(report.out, "total_bits: 14293"));
    CHECK(contains(report.out, "max_entry_bits: 47"));

    TempDir dir;
    const std::string path = dir.file("lut.txt");
    REQUIRE(invoke({"lut", "mr", "--n", "8", "--amps", "1,3,5", "-o", path}).code == 0);
    const std::string text = slurp(path);
    CHECK(contains(text, "MRLUT n=8 m=3"));
    CHECK(contains(text, "TOTAL_BITS"));
}

TEST_CASE("cli sweeps emit TSV") {
    auto lutsize = invoke({"sweep", "lutsize", "--engine", "sr", "--n-list", "20,50"});
    REQUIRE(lutsize.code == 0);
    CHECK(lutsize.out == "n\tbits\n20\t860\n50\t14293\n");

    auto rateloss = invoke({"sweep", "rateloss", "--pmf", "0.4,0.3,0.2,0.1", "--n-list", "10",
                            "--schemes", "mpdm,sphere"});
    REQUIRE(rateloss.code == 0);
    CHECK(contains(rateloss.out, "mpdm\t10\t"));
    CHECK(contains(rateloss.out, "sphere\t10\t"));
}

TEST_CASE("cli baseline metrics and spectrum dump") {
    auto metrics = invoke({"baseline", "--n", "20", "--k", "30"});
    REQUIRE(metrics.code == 0);
    CHECK(contains(metrics.out, "avg_energy: 8.416135"));

    auto spectrum = invoke({"baseline", "--n", "2", "--amps", "1,3", "--k", "1", "--spectrum"});
    REQUIRE(spectrum.code == 0);
    CHECK(spectrum.out == "energy\tcount\tnum_compositions\n2\t1\t1\n10\t2\t1\n18\t1\t1\n");
}
