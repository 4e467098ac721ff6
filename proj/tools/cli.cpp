// Copyright 2026 The NBL Reference Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbl/json_io.hpp"
#include "nbl/nbl.hpp"

namespace nbl::cli {
namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Writes `text` to `path`, or to `out` when the path is empty or "-".
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot write file '" + path + "'");
    }
    file << text;
}

void check_bits(std::size_t n) {
    if (n < 1 || n > kMaxSignalBits) {
        throw ConfigError("--n must be in [1, " + std::to_string(kMaxSignalBits) + "], got " + std::to_string(n));
    }
}

struct CompileArgs {
    std::string circuit;
    std::optional<std::size_t> n;
    std::string out;
};

struct SimulateArgs {
    std::size_t n = 0;
    std::uint64_t seed = kDefaultSeed;
    bool entropy = false;
    std::uint64_t ticks = 0;
    std::string superposition;
    std::string circuit;
    std::string out;
    std::string format = "csv";
};

struct VerifyArgs {
    std::string suite = "figures";
    std::size_t trials = 100;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t ticks = 1024;
    bool json = false;
    std::string out;
};

struct StatsArgs {
    std::size_t n = 2;
    std::uint64_t ticks = 1000000;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    std::string out;
};

struct ConjectureArgs {
    std::size_t gates = 3;
    std::size_t bits = 4;
    std::size_t samples = 1000;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    std::string out;
};

int cmd_compile(const CompileArgs &a, std::ostream &out) {
    const GateCircuit circ = parse_circuit(read_file(a.circuit), a.n);
    emit(a.out, to_json(compile_circuit(circ)).dump(2) + "\n", out);
    return kExitOk;
}

int cmd_simulate(SimulateArgs a, std::ostream &out, std::ostream &err) {
    check_bits(a.n);
    if (a.ticks == 0) {
        throw ConfigError("--ticks must be at least 1");
    }
    if (a.entropy) {
        std::random_device rd;
        a.seed = (std::uint64_t{rd()} << 32) ^ rd();
        err << "seed: " << a.seed << "\n";
    }
    const Superposition y = parse_superposition(a.superposition, a.n);
    InsertionProgram prog(a.n);
    if (!a.circuit.empty()) {
        prog = compile_circuit(parse_circuit(read_file(a.circuit), a.n));
    }
    const ReferenceSystem sys(a.n, a.seed);
    SignalEvaluator eval(sys, prog, y);

    std::ostringstream text;
    if (a.format == "csv") {
        text << "tick,signal\n";
        for (ClockTick t = 0; t < a.ticks; ++t) {
            text << t << "," << eval.at(t) << "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["n_bits"] = a.n;
        j["seed"] = a.seed;
        j["superposition"] = y.str();
        j["program"] = to_json(prog);
        auto trace = nlohmann::ordered_json::array();
        for (ClockTick t = 0; t < a.ticks; ++t) {
            trace.push_back({{"tick", t}, {"signal", eval.at(t)}});
        }
        j["trace"] = std::move(trace);
        text << j.dump(2) << "\n";
    }
    emit(a.out, text.str(), out);
    return kExitOk;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    bool pass = false;
    std::string text;
    if (a.suite == "figures") {
        const FigureReport report = figure_suite(a.seed, a.ticks);
        pass = report.all_pass();
        text = a.json ? to_json(report).dump(2) + "\n" : report.str();
    } else {
        const RandomSuiteReport report = random_suite(a.trials, a.seed, a.ticks);
        pass = report.all_pass();
        text = a.json ? to_json(report).dump(2) + "\n" : report.str();
    }
    emit(a.out, text, out);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_stats(const StatsArgs &a, std::ostream &out) {
    check_bits(a.n);
    if (a.ticks == 0) {
        throw ConfigError("--ticks must be at least 1");
    }
    const ReferenceSystem sys(a.n, a.seed);
    StatReport report = orthogonality_report(sys, a.ticks);
    report += zero_fraction(sys, Superposition::universe(a.n), a.ticks);
    emit(a.out, a.json ? to_json(report).dump(2) + "\n" : report.str(), out);
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_conjecture(const ConjectureArgs &a, std::ostream &out) {
    const ConjectureReport report = conjecture_scan(a.gates, a.bits, a.samples, a.seed);
    emit(a.out, a.json ? to_json(report).dump(2) + "\n" : report.str(), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noise-based logic reference-wire gate compiler and simulator", "nbl"};
    app.require_subcommand(1);

    CompileArgs compile_args;
    auto *compile = app.add_subcommand("compile", "Compile a NOT/CNOT circuit into a reference-wire insertion program");
    compile->add_option("--circuit", compile_args.circuit, "Circuit file")->required();
    compile->add_option("--n", compile_args.n, "Number of noise-bits (default: 1 + largest index)");
    compile->add_option("--out", compile_args.out, "Output file (default: stdout)");

    SimulateArgs sim_args;
    auto *simulate = app.add_subcommand("simulate", "Write the per-tick signal of a superposition");
    simulate->add_option("--n", sim_args.n, "Number of noise-bits")->required();
    simulate->add_option("--seed", sim_args.seed, "Reference system seed");
    simulate->add_flag("--entropy", sim_args.entropy, "Seed from std::random_device (printed to stderr)");
    simulate->add_option("--ticks", sim_args.ticks, "Number of clock ticks")->required();
    simulate->add_option("--superposition", sim_args.superposition, "universe | pattern over 0,1,* | s1;c*s2;...")
        ->required();
    simulate->add_option("--circuit", sim_args.circuit, "Circuit applied through the reference wires");
    simulate->add_option("--out", sim_args.out, "Output file (default: stdout)");
    simulate->add_option("--format", sim_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check compiled programs against the bit-level oracle");
    verify->add_option("--suite", verify_args.suite, "figures or random")->check(CLI::IsMember({"figures", "random"}));
    verify->add_option("--trials", verify_args.trials, "Random trials");
    verify->add_option("--seed", verify_args.seed, "Seed");
    verify->add_option("--ticks", verify_args.ticks, "Ticks per check")->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_args.json, "JSON report");
    verify->add_option("--out", verify_args.out, "Output file (default: stdout)");

    StatsArgs stats_args;
    auto *stats = app.add_subcommand("stats", "Zero-mean, orthogonality and zero-fraction statistics");
    stats->add_option("--n", stats_args.n, "Number of noise-bits");
    stats->add_option("--ticks", stats_args.ticks, "Number of clock ticks");
    stats->add_option("--seed", stats_args.seed, "Seed");
    stats->add_flag("--json", stats_args.json, "JSON report");
    stats->add_option("--out", stats_args.out, "Output file (default: stdout)");

    ConjectureArgs conj_args;
    auto *conjecture = app.add_subcommand("conjecture", "Hardware-count scan over random CNOT cascades");
    conjecture->add_option("--gates", conj_args.gates, "Cascade length L")->required();
    conjecture->add_option("--bits", conj_args.bits, "Number of bits")->required();
    conjecture->add_option("--samples", conj_args.samples, "Number of random cascades");
    conjecture->add_option("--seed", conj_args.seed, "Seed");
    conjecture->add_flag("--json", conj_args.json, "JSON report");
    conjecture->add_option("--out", conj_args.out, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compile->parsed()) {
            return cmd_compile(compile_args, out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(sim_args, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_args, out);
        }
        if (stats->parsed()) {
            return cmd_stats(stats_args, out);
        }
        if (conjecture->parsed()) {
            return cmd_conjecture(conj_args, out);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError &e) {
        err << "resource error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nbl::cli
