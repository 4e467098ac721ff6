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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nbl/affine_gf2.hpp"
#include "nbl/gate_compiler.hpp"
#include "nbl/hyperspace.hpp"
#include "nbl/insertion_program.hpp"
#include "nbl/rtw_reference.hpp"

namespace nbl {

struct Mismatch {
    ClockTick tick = 0;
    SignalValue signal_a = 0;
    SignalValue signal_b = 0;
};

struct EquivalenceResult {
    std::uint64_t ticks_checked = 0;
    std::optional<Mismatch> first_mismatch;

    bool pass() const noexcept {
        return !first_mismatch.has_value();
    }

    std::string str() const {
        if (pass()) {
            return "equal at all " + std::to_string(ticks_checked) + " ticks";
        }
        return "mismatch at tick " + std::to_string(first_mismatch->tick) + ": " +
               std::to_string(first_mismatch->signal_a) + " vs " + std::to_string(first_mismatch->signal_b);
    }
};

namespace detail {

/// Compares two evaluators tick by tick over [0, T); stops at the first difference.
inline EquivalenceResult compare_signals(SignalEvaluator &a, SignalEvaluator &b, std::uint64_t ticks) {
    EquivalenceResult result;
    for (ClockTick t = 0; t < ticks; ++t) {
        const SignalValue va = a.at(t);
        const SignalValue vb = b.at(t);
        ++result.ticks_checked;
        if (va != vb) {
            result.first_mismatch = Mismatch{t, va, vb};
            break;
        }
    }
    return result;
}

}  // namespace detail

/// Signal of Y through the compiled program versus the untransformed signal of the
/// oracle-transformed Y, exact at every tick in [0, T).
inline EquivalenceResult signal_equivalence_check(
    const ReferenceSystem &sys, const GateCircuit &circ, const Superposition &y, std::uint64_t ticks) {
    if (circ.n_bits != sys.n_bits()) {
        throw InputError("circuit and reference system have different bit counts");
    }
    const AffineMapGF2 map = circuit_to_affine(circ);
    const InsertionProgram prog = compile_to_insertions(map);
    const Superposition transformed = oracle_apply(map, y);
    SignalEvaluator gated(sys, prog, y);
    SignalEvaluator oracle(sys, InsertionProgram(sys.n_bits()), transformed);
    return detail::compare_signals(gated, oracle, ticks);
}

/// For a pure-CNOT cascade the universe maps onto itself, so its factorized signal
/// must not change when the compiled program is applied. No expansion: O(N + M) per tick.
inline EquivalenceResult universe_invariance_check(
    const ReferenceSystem &sys, const GateCircuit &circ, std::uint64_t ticks) {
    if (circ.has_not()) {
        throw InputError("universe invariance check is stated for pure-CNOT cascades");
    }
    if (circ.n_bits != sys.n_bits()) {
        throw InputError("circuit and reference system have different bit counts");
    }
    const InsertionProgram prog = compile_circuit(circ);
    const Superposition universe = Superposition::universe(sys.n_bits());
    SignalEvaluator gated(sys, prog, universe);
    SignalEvaluator plain(sys, InsertionProgram(sys.n_bits()), universe);
    return detail::compare_signals(gated, plain, ticks);
}

/// One reproduced circuit from the figure set.
struct FigureCase {
    std::string name;
    GateCircuit circuit;
    InsertionProgram expected_program;
    InsertionProgram program;
    EquivalenceResult equivalence;

    bool program_matches() const {
        return program == expected_program;
    }

    bool pass() const {
        return program_matches() && equivalence.pass();
    }
};

struct FigureReport {
    std::uint64_t seed = 0;
    std::uint64_t ticks = 0;
    std::vector<FigureCase> cases;

    bool all_pass() const {
        for (const auto &c : cases) {
            if (!c.pass()) {
                return false;
            }
        }
        return true;
    }

    std::string str() const {
        std::ostringstream out;
        for (const auto &c : cases) {
            out << (c.pass() ? "PASS " : "FAIL ") << c.name << ": M=" << hardware_count(c.program) << " "
                << c.program.str();
            if (!c.program_matches()) {
                out << " expected " << c.expected_program.str();
            }
            out << "; " << c.equivalence.str() << "\n";
        }
        return out.str();
    }
};

/// The NOT and CNOT circuits of the reference-wire construction, 0-based, on 4 bits:
///   fig3 NOT 2                      fig4 CNOT 1 2
///   fig5 CNOT 1 2; CNOT 0 1         fig6 CNOT 0 1; CNOT 1 2
///   fig7 CNOT 2 3; CNOT 1 2; CNOT 0 1
///   fig8 CNOT 0 1; CNOT 1 2; CNOT 2 3
/// each with its expected insertion set.
inline std::vector<FigureCase> figure_cases() {
    constexpr std::size_t n = 4;
    auto ins = [](std::size_t bit, int value, std::size_t target) { return Insertion{WireId{bit, value}, target}; };
    auto cnot = Gate::make_cnot;
    std::vector<FigureCase> cases;
    cases.push_back({"fig3 NOT", GateCircuit(n, {Gate::make_not(2)}), InsertionProgram(n, {ins(2, 0, 2), ins(2, 1, 2)}), {}, {}});
    cases.push_back({"fig4 CNOT", GateCircuit(n, {cnot(1, 2)}), InsertionProgram(n, {ins(1, 1, 2)}), {}, {}});
    cases.push_back(
        {"fig5 non-interacting cascade",
         GateCircuit(n, {cnot(1, 2), cnot(0, 1)}),
         InsertionProgram(n, {ins(0, 1, 1), ins(1, 1, 2)}),
         {},
         {}});
    cases.push_back(
        {"fig6 interacting cascade",
         GateCircuit(n, {cnot(0, 1), cnot(1, 2)}),
         InsertionProgram(n, {ins(0, 1, 1), ins(1, 1, 2), ins(0, 1, 2)}),
         {},
         {}});
    cases.push_back(
        {"fig7 non-interacting cascade",
         GateCircuit(n, {cnot(2, 3), cnot(1, 2), cnot(0, 1)}),
         InsertionProgram(n, {ins(0, 1, 1), ins(1, 1, 2), ins(2, 1, 3)}),
         {},
         {}});
    cases.push_back(
        {"fig8 interacting cascade",
         GateCircuit(n, {cnot(0, 1), cnot(1, 2), cnot(2, 3)}),
         InsertionProgram(n, {ins(0, 1, 1), ins(0, 1, 2), ins(1, 1, 2), ins(0, 1, 3), ins(1, 1, 3), ins(2, 1, 3)}),
         {},
         {}});
    return cases;
}

/// Compiles every figure circuit, compares against its expected insertion set, and
/// checks signal equivalence on all 16 strings of 4 bits with distinct coefficients.
inline FigureReport figure_suite(std::uint64_t seed = 1, std::uint64_t ticks = 1024) {
    FigureReport report;
    report.seed = seed;
    report.ticks = ticks;
    const ReferenceSystem sys(4, seed);
    Superposition y = Superposition::explicit_terms(4);
    for (std::uint64_t v = 0; v < 16; ++v) {
        y.add(BitString::from_integer(4, v), static_cast<std::int64_t>(v) + 1);
    }
    for (auto c : figure_cases()) {
        c.program = compile_circuit(c.circuit);
        c.equivalence = signal_equivalence_check(sys, c.circuit, y, ticks);
        report.cases.push_back(std::move(c));
    }
    return report;
}

/// Random NOT/CNOT circuit of up to `max_gates` gates on `n_bits` bits.
inline GateCircuit random_circuit(std::size_t n_bits, std::size_t max_gates, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick_len(0, max_gates);
    std::uniform_int_distribution<std::size_t> pick_bit(0, n_bits - 1);
    std::uniform_int_distribution<std::size_t> pick_offset(1, n_bits > 1 ? n_bits - 1 : 1);
    std::bernoulli_distribution pick_not(n_bits > 1 ? 0.25 : 1.0);
    GateCircuit circ;
    circ.n_bits = n_bits;
    const std::size_t len = pick_len(rng);
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t a = pick_bit(rng);
        if (pick_not(rng)) {
            circ.gates.push_back(Gate::make_not(a));
        } else {
            circ.gates.push_back(Gate::make_cnot(a, (a + pick_offset(rng)) % n_bits));
        }
    }
    return circ;
}

/// Explicit superposition of 1..max_terms distinct strings with coefficients in [-3, 3] \ {0}.
inline Superposition random_superposition(std::size_t n_bits, std::size_t max_terms, std::mt19937_64 &rng) {
    const std::uint64_t space = std::uint64_t{1} << n_bits;
    const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(max_terms, space));
    std::uniform_int_distribution<std::size_t> pick_count(1, cap);
    std::uniform_int_distribution<std::uint64_t> pick_string(0, space - 1);
    std::uniform_int_distribution<int> pick_coeff(-3, 2);
    Superposition y = Superposition::explicit_terms(n_bits);
    const std::size_t count = pick_count(rng);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < count) {
        chosen.insert(pick_string(rng));
    }
    for (auto v : chosen) {
        int coeff = pick_coeff(rng);
        y.add(BitString::from_integer(n_bits, v), coeff >= 0 ? coeff + 1 : coeff);
    }
    return y;
}

struct RandomTrial {
    std::size_t n_bits = 0;
    GateCircuit circuit;
    Superposition superposition = Superposition::explicit_terms(0);
    EquivalenceResult result;
};

struct RandomSuiteReport {
    std::uint64_t seed = 0;
    std::uint64_t ticks = 0;
    std::vector<RandomTrial> trials;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto &t : trials) {
            n += !t.result.pass();
        }
        return n;
    }

    bool all_pass() const {
        return failures() == 0;
    }

    std::string str() const {
        std::ostringstream out;
        out << "random suite: seed=" << seed << " trials=" << trials.size() << " ticks=" << ticks
            << " failures=" << failures() << "\n";
        for (const auto &t : trials) {
            if (!t.result.pass()) {
                out << "FAIL N=" << t.n_bits << " circuit [" << t.circuit.inline_str() << "] Y=" << t.superposition.str()
                    << ": " << t.result.str() << "\n";
            }
        }
        return out.str();
    }
};

/// `trials` random (circuit, superposition) pairs: N in [1, max_bits], up to `max_gates`
/// gates, up to `max_terms` strings; each checked by signal_equivalence_check.
inline RandomSuiteReport random_suite(
    std::size_t trials,
    std::uint64_t seed,
    std::uint64_t ticks = 1024,
    std::size_t max_bits = 8,
    std::size_t max_gates = 12,
    std::size_t max_terms = 32) {
    RandomSuiteReport report;
    report.seed = seed;
    report.ticks = ticks;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_bits(1, max_bits);
    for (std::size_t k = 0; k < trials; ++k) {
        RandomTrial trial;
        trial.n_bits = pick_bits(rng);
        trial.circuit = random_circuit(trial.n_bits, max_gates, rng);
        trial.superposition = random_superposition(trial.n_bits, max_terms, rng);
        const ReferenceSystem sys(trial.n_bits, seed ^ (0x5851f42d4c957f2dULL * (k + 1)));
        trial.result = signal_equivalence_check(sys, trial.circuit, trial.superposition, ticks);
        report.trials.push_back(std::move(trial));
    }
    return report;
}

}  // namespace nbl
