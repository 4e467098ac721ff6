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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "nbl/json_io.hpp"

using namespace nbl;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string sample(const std::string &name) {
    return std::string(NBL_SAMPLES_DIR) + "/" + name;
}

std::string read(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::pair<long, long>> parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "tick,signal");
    std::vector<std::pair<long, long>> rows;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        rows.emplace_back(std::stol(line.substr(0, comma)), std::stol(line.substr(comma + 1)));
    }
    return rows;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("nbl_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(CliCompile, single_cnot_program_json) {
    auto r = run({"compile", "--circuit", sample("fig4_cnot.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["n_bits"], 3);
    ASSERT_EQ(j["M"], 1);
    ASSERT_EQ(j["insertions"].size(), 1u);
    ASSERT_EQ(j["insertions"][0]["host_bit"], 1);
    ASSERT_EQ(j["insertions"][0]["host_value"], 1);
    ASSERT_EQ(j["insertions"][0]["target"], 2);
    // Key order is part of the format.
    ASSERT_LT(r.out.find("\"n_bits\""), r.out.find("\"insertions\""));
    ASSERT_LT(r.out.find("\"insertions\""), r.out.find("\"M\""));
}

TEST(CliCompile, insertions_sorted_and_round_trip) {
    auto r = run({"compile", "--circuit", sample("fig8_cascade.txt"), "--n", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["n_bits"], 5);
    ASSERT_EQ(j["M"], 6);
    auto prog = program_from_json(j);
    ASSERT_EQ(prog, compile_circuit(chained_cascade(3, true).then(GateCircuit(5, {}))));
    std::vector<std::tuple<int, int, int>> keys;
    for (const auto &e : j["insertions"]) {
        keys.emplace_back(e["host_bit"], e["host_value"], e["target"]);
    }
    ASSERT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(CliCompile, empty_file_and_output_file) {
    auto r = run({"compile", "--circuit", sample("empty.txt")});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["M"], 0);
    ASSERT_TRUE(j["insertions"].empty());

    auto path = temp_path("fig6.json");
    auto w = run({"compile", "--circuit", sample("fig6_cascade.txt"), "--out", path.string()});
    ASSERT_EQ(w.code, 0);
    ASSERT_TRUE(w.out.empty());
    ASSERT_EQ(nlohmann::json::parse(read(path))["M"], 3);
    std::filesystem::remove(path);
}

TEST(CliCompile, parse_error_exit_code) {
    auto r = run({"compile", "--circuit", sample("bad_self_control.txt")});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find("line 1"), std::string::npos) << r.err;
    ASSERT_EQ(run({"compile", "--circuit", "/nonexistent/circuit.txt"}).code, 2);
    ASSERT_EQ(run({"compile"}).code, 2);
    ASSERT_EQ(run({"frobnicate"}).code, 2);
    ASSERT_EQ(run({"--help"}).code, 0);
}

TEST(CliSimulate, universe_trace) {
    auto r = run({"simulate", "--n", "4", "--seed", "9", "--ticks", "16", "--superposition", "universe"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 16u);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        ASSERT_EQ(rows[k].first, static_cast<long>(k));
        ASSERT_TRUE(rows[k].second == 0 || rows[k].second == 16 || rows[k].second == -16);
    }
}

TEST(CliSimulate, singleton_and_determinism) {
    auto a = temp_path("a.csv");
    auto b = temp_path("b.csv");
    const std::vector<std::string> base{
        "simulate", "--n", "3", "--ticks", "200", "--superposition", "101", "--circuit", sample("fig4_cnot.txt")};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", b.string()});
    ASSERT_EQ(run(args_a).code, 0);
    ASSERT_EQ(run(args_b).code, 0);
    const auto text = read(a);
    ASSERT_EQ(text, read(b));
    for (const auto &[tick, signal] : parse_csv(text)) {
        ASSERT_TRUE(signal == 1 || signal == -1);
    }
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(CliSimulate, json_matches_library) {
    auto r = run(
        {"simulate", "--n", "3", "--seed", "4", "--ticks", "50", "--superposition", "110;2*011;", "--circuit",
         sample("fig6_cascade.txt"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["trace"].size(), 50u);
    ReferenceSystem sys(3, 4);
    const auto prog = compile_circuit(parse_circuit("CNOT 0 1\nCNOT 1 2\n", 3));
    const auto y = parse_superposition("110;2*011;");
    for (std::size_t t = 0; t < 50; ++t) {
        ASSERT_EQ(j["trace"][t]["signal"].get<long>(), superposition_sample(sys, prog, y, t));
    }
}

TEST(CliSimulate, config_errors) {
    ASSERT_EQ(run({"simulate", "--n", "33", "--ticks", "4", "--superposition", "universe"}).code, 2);
    ASSERT_EQ(run({"simulate", "--n", "3", "--ticks", "0", "--superposition", "universe"}).code, 2);
    ASSERT_EQ(run({"simulate", "--n", "3", "--ticks", "4", "--superposition", "10"}).code, 2);
    ASSERT_EQ(run({"simulate", "--n", "3", "--ticks", "4", "--superposition", "universe", "--format", "xml"}).code, 2);
    auto entropy = run({"simulate", "--n", "2", "--ticks", "4", "--superposition", "universe", "--entropy"});
    ASSERT_EQ(entropy.code, 0);
    ASSERT_NE(entropy.err.find("seed: "), std::string::npos);
}

TEST(CliVerify, figure_suite_passes) {
    auto r = run({"verify", "--suite", "figures", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.out;
    ASSERT_EQ(r.out.find("FAIL"), std::string::npos);
    auto j = run({"verify", "--json"});
    ASSERT_EQ(j.code, 0);
    auto parsed = nlohmann::json::parse(j.out);
    ASSERT_TRUE(parsed["pass"].get<bool>());
    ASSERT_EQ(parsed["cases"].size(), 6u);
}

TEST(CliVerify, random_suite_passes) {
    auto r = run({"verify", "--suite", "random", "--trials", "20", "--seed", "5", "--json"});
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["trials"], 20);
    ASSERT_TRUE(j["failures"].empty());
}

TEST(CliStats, two_bits_million_ticks) {
    auto r = run({"stats", "--n", "2", "--ticks", "1000000", "--seed", "11", "--json"});
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(j["entries"].size(), 4u + 4u + 6u + 12u + 1u);
}

TEST(CliConjecture, small_scan) {
    auto r = run({"conjecture", "--gates", "3", "--bits", "4", "--samples", "1000", "--seed", "2", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["unexplained_violations"], 0);
    if (j["min_M"].get<int>() < 3) {
        ASSERT_FALSE(j["violations"].empty());
        for (const auto &v : j["violations"]) {
            ASSERT_TRUE(v["cancelling"].get<bool>());
            ASSERT_FALSE(v["circuit"].get<std::string>().empty());
        }
    }
    ASSERT_LE(j["max_M"].get<int>(), 6);
    ASSERT_EQ(run({"conjecture", "--gates", "3", "--bits", "1"}).code, 2);
}

TEST(CliBinary, exit_codes_through_the_executable) {
    const std::string tool = NBL_TOOL_PATH;
    const auto quiet = " > /dev/null 2>&1";
    auto status = [&](const std::string &args) {
        int s = std::system((tool + " " + args + quiet).c_str());
        return WEXITSTATUS(s);
    };
    ASSERT_EQ(status("compile --circuit " + sample("fig4_cnot.txt")), 0);
    ASSERT_EQ(status("compile --circuit " + sample("bad_self_control.txt")), 2);
    ASSERT_EQ(status("verify --suite figures"), 0);
}
