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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ampshape/analysis.hpp"
#include "ampshape/errors.hpp"
#include "ampshape/shapers.hpp"
#include "ampshape/sphere.hpp"

namespace ampshape::cli {

namespace {

/// Flag-level problem: maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(flag + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(flag + ": bad number '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

Alphabet parse_alphabet(const std::string& text) {
    try {
        return Alphabet(parse_int_list(text, "--amps"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--amps: ") + e.what());
    }
}

AveragePmf parse_pmf(const std::string& text, const Alphabet& alphabet) {
    AveragePmf pmf{parse_double_list(text, "--pmf")};
    try {
        pmf.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--pmf: ") + e.what());
    }
    if (pmf.probabilities.size() != alphabet.size())
        throw UsageError("--pmf: entry count must match --amps");
    return pmf;
}

Engine parse_engine(const std::string& text) {
    try {
        return engine_from_string(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--engine: expected mr or sr");
    }
}

int resolve_k(int n, int k, double rate) {
    if (k > 0 && rate > 0.0) throw UsageError("--k and --rate are mutually exclusive");
    if (k > 0) return k;
    if (rate > 0.0) return static_cast<int>(std::ceil(rate * n - 1e-9));
    throw UsageError("one of --k or --rate is required");
}

std::string format_fixed(double value) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(6) << value;
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + output_path);
    file << text;
}

ShaperCodebook load_codebook(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open codebook " + path);
    return ShaperCodebook::load(in);
}

/// Input bit stream for shape: hex from the command line or a raw file read
/// most significant bit first.
BitWord gather_input_bits(const std::string& hex, const std::string& path) {
    if (!hex.empty() && !path.empty()) throw UsageError("--in-hex and --in are mutually exclusive");
    if (!hex.empty()) {
        try {
            return BitWord::from_hex(hex);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--in-hex: ") + e.what());
        }
    }
    if (path.empty()) throw UsageError("one of --in-hex or --in is required");
    const std::string bytes = read_file(path);
    BigNat value = 0;
    for (unsigned char byte : bytes) {
        value <<= 8;
        value |= byte;
    }
    return BitWord(8 * bytes.size(), std::move(value));
}

std::string describe_codebook(const ShaperCodebook& cb) {
    const AveragePmf pmf = codebook_average_pmf(cb);
    const double h = entropy(pmf);
    const double rate = static_cast<double>(cb.k()) / cb.n();
    std::ostringstream ss;
    ss << "scheme: " << to_string(cb.scheme()) << '\n'
       << "engine: " << to_string(cb.engine()) << '\n'
       << "n: " << cb.n() << '\n'
       << "k: " << cb.k() << '\n'
       << "rate: " << format_fixed(rate) << '\n'
       << "compositions: " << cb.entries().size() << '\n'
       << "tree_depth: " << cb.tree_depth() << '\n'
       << "entropy: " << format_fixed(h) << '\n'
       << "rate_loss: " << format_fixed(h - rate) << '\n'
       << "avg_energy: " << format_fixed(average_energy(pmf, cb.alphabet())) << '\n';
    return ss.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fixed-to-fixed-length amplitude shaping toolkit"};
    app.require_subcommand(1);

    std::string amps_text = "1,3,5,7";
    std::string pmf_text, engine_text = "mr", output_path, codebook_path;
    std::string in_hex, in_path, n_list_text, exp_list_text, schemes_text;
    int n = 0, k = 0, n_max = 0, min_perm_exp = 0;
    double rate = 0.0;
    bool report = false, spectrum = false;

    // build {ccdm|mpdm|hcss}
    CLI::App* build = app.add_subcommand("build", "construct a shaper codebook");
    build->require_subcommand(1);
    CLI::App* build_ccdm_cmd = build->add_subcommand("ccdm", "single-composition shaper");
    CLI::App* build_mpdm_cmd = build->add_subcommand("mpdm", "pairwise-partition shaper");
    CLI::App* build_hcss_cmd = build->add_subcommand("hcss", "sphere shaper on a prefix tree");
    for (CLI::App* sub : {build_ccdm_cmd, build_mpdm_cmd, build_hcss_cmd}) {
        sub->add_option("--n", n, "block length")->required();
        sub->add_option("--amps", amps_text, "amplitude levels");
        sub->add_option("-o,--output", output_path, "write the codebook here");
    }
    build_ccdm_cmd->add_option("--pmf", pmf_text, "target amplitude PMF")->required();
    build_ccdm_cmd->add_option("--engine", engine_text, "mr or sr");
    build_mpdm_cmd->add_option("--pmf", pmf_text, "target amplitude PMF")->required();
    build_hcss_cmd->add_option("--k", k, "input bits per block");
    build_hcss_cmd->add_option("--rate", rate, "bits per amplitude symbol");
    build_hcss_cmd->add_option("--engine", engine_text, "mr or sr");
    build_hcss_cmd->add_option("--min-perm-exp", min_perm_exp,
                               "drop compositions holding fewer than 2^E usable sequences");

    CLI::App* shape_cmd = app.add_subcommand("shape", "map input bits to amplitude blocks");
    shape_cmd->add_option("--codebook", codebook_path, "codebook file")->required();
    shape_cmd->add_option("--in-hex", in_hex, "input bits as a hex string");
    shape_cmd->add_option("--in", in_path, "input bits as a raw binary file");
    shape_cmd->add_option("-o,--output", output_path, "write symbol lines here");

    CLI::App* deshape_cmd = app.add_subcommand("deshape", "recover input bits from amplitude blocks");
    deshape_cmd->add_option("--codebook", codebook_path, "codebook file")->required();
    deshape_cmd->add_option("--in", in_path, "symbol lines, one block per line")->required();
    deshape_cmd->add_option("-o,--output", output_path, "write recovered bits here");

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "report codebook metrics");
    analyze_cmd->add_option("codebook", codebook_path, "codebook file")->required();

    CLI::App* lut = app.add_subcommand("lut", "build coefficient tables");
    lut->require_subcommand(1);
    CLI::App* lut_sr_cmd = lut->add_subcommand("sr", "binomial table");
    lut_sr_cmd->add_option("--n-max", n_max, "largest covered length")->required();
    CLI::App* lut_mr_cmd = lut->add_subcommand("mr", "multinomial table");
    lut_mr_cmd->add_option("--n", n, "shaping length")->required();
    lut_mr_cmd->add_option("--amps", amps_text, "amplitude levels");
    for (CLI::App* sub : {lut_sr_cmd, lut_mr_cmd}) {
        sub->add_flag("--report", report, "print size summary instead of entries");
        sub->add_option("-o,--output", output_path, "write the table here");
    }

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate comparisons as TSV");
    sweep->require_subcommand(1);
    CLI::App* sweep_rateloss_cmd = sweep->add_subcommand("rateloss", "rate loss versus block length");
    sweep_rateloss_cmd->add_option("--pmf", pmf_text, "target amplitude PMF")->required();
    sweep_rateloss_cmd->add_option("--n-list", n_list_text, "block lengths")->required();
    sweep_rateloss_cmd->add_option("--amps", amps_text, "amplitude levels");
    sweep_rateloss_cmd->add_option("--schemes", schemes_text,
                                   "subset of ccdm,mpdm,hcss-mr,hcss-sr,sphere");
    CLI::App* sweep_pruning_cmd = sweep->add_subcommand("pruning", "composition pruning at fixed rate");
    sweep_pruning_cmd->add_option("--n", n, "block length")->required();
    sweep_pruning_cmd->add_option("--amps", amps_text, "amplitude levels");
    sweep_pruning_cmd->add_option("--k", k, "input bits per block");
    sweep_pruning_cmd->add_option("--rate", rate, "bits per amplitude symbol");
    sweep_pruning_cmd->add_option("--engine", engine_text, "mr or sr");
    sweep_pruning_cmd->add_option("--exp-list", exp_list_text, "threshold exponents")->required();
    CLI::App* sweep_lutsize_cmd = sweep->add_subcommand("lutsize", "table size versus block length");
    sweep_lutsize_cmd->add_option("--engine", engine_text, "mr or sr");
    sweep_lutsize_cmd->add_option("--n-list", n_list_text, "block lengths")->required();
    sweep_lutsize_cmd->add_option("--amps", amps_text, "amplitude levels");
    for (CLI::App* sub : {sweep_rateloss_cmd, sweep_pruning_cmd, sweep_lutsize_cmd})
        sub->add_option("-o,--output", output_path, "write the TSV here");

    CLI::App* baseline_cmd = app.add_subcommand("baseline", "sphere-shaping reference metrics");
    baseline_cmd->add_option("--n", n, "block length")->required();
    baseline_cmd->add_option("--amps", amps_text, "amplitude levels");
    baseline_cmd->add_option("--k", k, "input bits per block");
    baseline_cmd->add_option("--rate", rate, "bits per amplitude symbol");
    baseline_cmd->add_flag("--spectrum", spectrum, "dump the shell spectrum as TSV");
    baseline_cmd->add_option("-o,--output", output_path, "write the report here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    const Alphabet alphabet = parse_alphabet(amps_text);

    if (build_ccdm_cmd->parsed()) {
        const ShaperCodebook cb =
            build_ccdm(parse_pmf(pmf_text, alphabet), n, parse_engine(engine_text), alphabet);
        std::ostringstream ss;
        cb.save(ss);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (build_mpdm_cmd->parsed()) {
        const ShaperCodebook cb = build_mpdm(parse_pmf(pmf_text, alphabet), n, alphabet);
        std::ostringstream ss;
        cb.save(ss);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (build_hcss_cmd->parsed()) {
        const ShaperCodebook cb = ampshape::build_hcss(n, alphabet, resolve_k(n, k, rate),
                                                       parse_engine(engine_text), min_perm_exp);
        std::ostringstream ss;
        cb.save(ss);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (shape_cmd->parsed()) {
        const ShaperCodebook cb = load_codebook(codebook_path);
        const BitWord stream = gather_input_bits(in_hex, in_path);
        if (stream.length() % cb.k() != 0)
            throw UsageError("input length " + std::to_string(stream.length()) +
                             " bits is not a multiple of k = " + std::to_string(cb.k()));
        std::ostringstream ss;
        for (std::size_t pos = 0; pos < stream.length(); pos += cb.k()) {
            const AmplitudeSequence s = shape(cb, stream.slice(pos, cb.k()));
            for (std::size_t i = 0; i < s.size(); ++i) ss << (i ? "," : "") << s[i];
            ss << '\n';
        }
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (deshape_cmd->parsed()) {
        const ShaperCodebook cb = load_codebook(codebook_path);
        std::istringstream lines(read_file(in_path));
        BitWord stream;
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            const std::vector<int> symbols = parse_int_list(line, "symbol line");
            if (static_cast<int>(symbols.size()) != cb.n())
                throw UsageError("block holds " + std::to_string(symbols.size()) +
                                 " symbols, expected n = " + std::to_string(cb.n()));
            stream = stream.concat(deshape(cb, symbols));
        }
        std::string text = stream.length() % 4 == 0 ? stream.to_hex() : stream.to_bit_string();
        emit(text + '\n', output_path, out);
        return 0;
    }
    if (analyze_cmd->parsed()) {
        emit(describe_codebook(load_codebook(codebook_path)), output_path, out);
        return 0;
    }
    if (lut_sr_cmd->parsed() || lut_mr_cmd->parsed()) {
        const CoefficientLUT table =
            lut_sr_cmd->parsed() ? build_sr_lut(n_max) : build_mr_lut(n, alphabet);
        std::ostringstream ss;
        if (report) {
            if (table.kind() == LutKind::SrBinomial)
                ss << "kind: SR\nn_max: " << table.n_max() << '\n';
            else
                ss << "kind: MR\nn: " << table.n_max() << "\nm: " << table.m() << '\n';
            ss << "entries: " << table.entry_count() << '\n'
               << "total_bits: " << table.total_bits() << '\n'
               << "max_entry_bits: " << table.max_entry_bits() << '\n';
        } else {
            table.save(ss);
        }
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (sweep_rateloss_cmd->parsed()) {
        std::vector<SweepScheme> schemes{SweepScheme::Ccdm, SweepScheme::Mpdm, SweepScheme::HcssMr,
                                         SweepScheme::HcssSr, SweepScheme::Sphere};
        if (!schemes_text.empty()) {
            schemes.clear();
            std::stringstream ss(schemes_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok == "ccdm") schemes.push_back(SweepScheme::Ccdm);
                else if (tok == "mpdm") schemes.push_back(SweepScheme::Mpdm);
                else if (tok == "hcss-mr") schemes.push_back(SweepScheme::HcssMr);
                else if (tok == "hcss-sr") schemes.push_back(SweepScheme::HcssSr);
                else if (tok == "sphere") schemes.push_back(SweepScheme::Sphere);
                else throw UsageError("--schemes: unknown scheme '" + tok + "'");
            }
            if (schemes.empty()) throw UsageError("--schemes: empty list");
        }
        const auto rows = rate_loss_sweep(schemes, parse_pmf(pmf_text, alphabet),
                                          parse_int_list(n_list_text, "--n-list"), alphabet);
        std::ostringstream ss;
        write_sweep_tsv(ss, rows);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (sweep_pruning_cmd->parsed()) {
        const auto rows = pruning_sweep(n, alphabet, resolve_k(n, k, rate),
                                        parse_engine(engine_text),
                                        parse_int_list(exp_list_text, "--exp-list"));
        std::ostringstream ss;
        write_sweep_tsv(ss, rows);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (sweep_lutsize_cmd->parsed()) {
        const LutKind kind =
            parse_engine(engine_text) == Engine::Mr ? LutKind::MrMultinomial : LutKind::SrBinomial;
        const auto rows = lut_size_sweep(kind, parse_int_list(n_list_text, "--n-list"), alphabet);
        std::ostringstream ss;
        write_lut_sweep_tsv(ss, rows);
        emit(ss.str(), output_path, out);
        return 0;
    }
    if (baseline_cmd->parsed()) {
        const int kk = resolve_k(n, k, rate);
        if (spectrum) {
            std::ostringstream ss;
            dump_spectrum_tsv(ss, build_shell_spectrum(n, alphabet));
            emit(ss.str(), output_path, out);
            return 0;
        }
        const SphereUsage usage = sphere_usage(build_shell_spectrum(n, alphabet), kk);
        const SphereMetrics metrics = sphere_metrics(usage);
        std::ostringstream ss;
        ss << "n: " << n << '\n'
           << "k: " << kk << '\n'
           << "rate: " << format_fixed(static_cast<double>(kk) / n) << '\n'
           << "avg_energy: " << format_fixed(metrics.avg_energy) << '\n'
           << "entropy: " << format_fixed(metrics.entropy) << '\n'
           << "rate_loss: " << format_fixed(metrics.rate_loss) << '\n'
           << "full_shells: " << usage.full_shells << '\n'
           << "boundary_fraction: " << usage.boundary_fraction << '\n'
           << "pmf:";
        for (std::size_t i = 0; i < metrics.pmf.probabilities.size(); ++i)
            ss << (i ? "," : " ") << format_fixed(metrics.pmf.probabilities[i]);
        ss << '\n';
        emit(ss.str(), output_path, out);
        return 0;
    }
    err << "usage error: no subcommand\n";
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace ampshape::cli
