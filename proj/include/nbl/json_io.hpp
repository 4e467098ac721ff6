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

#pragma once

#include <string>

#include "json.hpp"

#include "nbl/gate_compiler.hpp"
#include "nbl/insertion_program.hpp"
#include "nbl/stat_report.hpp"
#include "nbl/verifier.hpp"

namespace nbl {

/// {"n_bits": N, "insertions": [{"host_bit", "host_value", "target"}...], "M": M},
/// insertions sorted by (host_bit, host_value, target).
inline nlohmann::ordered_json to_json(const InsertionProgram &prog) {
    nlohmann::ordered_json out;
    out["n_bits"] = prog.n_bits();
    auto list = nlohmann::ordered_json::array();
    for (const auto &ins : prog.insertions()) {
        list.push_back(
            {{"host_bit", ins.host.bit_index}, {"host_value", ins.host.bit_value}, {"target", ins.target}});
    }
    out["insertions"] = std::move(list);
    out["M"] = hardware_count(prog);
    return out;
}

inline InsertionProgram program_from_json(const nlohmann::json &j) {
    InsertionProgram prog(j.at("n_bits").get<std::size_t>());
    for (const auto &e : j.at("insertions")) {
        prog.toggle(Insertion{
            WireId{e.at("host_bit").get<std::size_t>(), e.at("host_value").get<int>()},
            e.at("target").get<std::size_t>()});
    }
    if (j.contains("M") && j.at("M").get<std::size_t>() != prog.size()) {
        throw InputError("program JSON has M inconsistent with its insertion list");
    }
    return prog;
}

inline nlohmann::ordered_json to_json(const StatReport &report) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto &e : report.entries) {
        entries.push_back(
            {{"name", e.name},
             {"estimate", e.estimate},
             {"expected", e.expected},
             {"tolerance", e.tolerance},
             {"sample_count", e.sample_count},
             {"pass", e.pass()}});
    }
    return {{"pass", report.all_pass()}, {"entries", std::move(entries)}};
}

inline nlohmann::ordered_json to_json(const EquivalenceResult &r) {
    nlohmann::ordered_json out{{"pass", r.pass()}, {"ticks_checked", r.ticks_checked}};
    if (r.first_mismatch) {
        out["first_mismatch"] = {
            {"tick", r.first_mismatch->tick},
            {"signal_a", r.first_mismatch->signal_a},
            {"signal_b", r.first_mismatch->signal_b}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

inline nlohmann::ordered_json to_json(const FigureReport &report) {
    auto cases = nlohmann::ordered_json::array();
    for (const auto &c : report.cases) {
        cases.push_back(
            {{"name", c.name},
             {"circuit", c.circuit.inline_str()},
             {"pass", c.pass()},
             {"program_matches", c.program_matches()},
             {"program", to_json(c.program)},
             {"expected_program", to_json(c.expected_program)},
             {"equivalence", to_json(c.equivalence)}});
    }
    return {
        {"suite", "figures"},
        {"seed", report.seed},
        {"ticks", report.ticks},
        {"pass", report.all_pass()},
        {"cases", std::move(cases)}};
}

inline nlohmann::ordered_json to_json(const RandomSuiteReport &report) {
    auto failures = nlohmann::ordered_json::array();
    for (const auto &t : report.trials) {
        if (!t.result.pass()) {
            failures.push_back(
                {{"n_bits", t.n_bits},
                 {"circuit", t.circuit.inline_str()},
                 {"superposition", t.superposition.str()},
                 {"equivalence", to_json(t.result)}});
        }
    }
    return {
        {"suite", "random"},
        {"seed", report.seed},
        {"ticks", report.ticks},
        {"trials", report.trials.size()},
        {"pass", report.all_pass()},
        {"failures", std::move(failures)}};
}

inline nlohmann::ordered_json to_json(const ConjectureReport &report) {
    auto histogram = nlohmann::ordered_json::object();
    for (const auto &[m, count] : report.histogram) {
        histogram[std::to_string(m)] = count;
    }
    auto violations = nlohmann::ordered_json::array();
    for (const auto &v : report.violations) {
        violations.push_back(
            {{"bound", v.bound == ConjectureViolation::Bound::Lower ? "lower" : "upper"},
             {"M", v.m},
             {"cancelling", v.cancelling},
             {"circuit", v.circuit.inline_str()}});
    }
    return {
        {"n_gates", report.n_gates},
        {"n_bits", report.n_bits},
        {"samples", report.samples},
        {"seed", report.seed},
        {"lower_bound", report.lower_bound},
        {"upper_bound", report.upper_bound},
        {"min_M", report.min_m},
        {"max_M", report.max_m},
        {"cancelling", report.cancelling},
        {"histogram", std::move(histogram)},
        {"violations", std::move(violations)},
        {"unexplained_violations", report.unexplained_violations()}};
}

}  // namespace nbl
