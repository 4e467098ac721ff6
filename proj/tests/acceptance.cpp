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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nbl/nbl.hpp"

using namespace nbl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Superposition all_strings(std::size_t n) {
    Superposition y = Superposition::explicit_terms(n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        y.add(BitString::from_integer(n, v), static_cast<std::int64_t>(v) + 1);
    }
    return y;
}

Outcome figures() {
    const auto start = Clock::now();
    const auto report = figure_suite(1, 1024);
    const double elapsed = seconds_since(start);
    const std::vector<std::size_t> expected_m{2, 1, 2, 3, 3, 6};
    bool ok = report.all_pass() && report.cases.size() == expected_m.size();
    std::ostringstream d;
    for (std::size_t k = 0; k < report.cases.size() && k < expected_m.size(); ++k) {
        const auto m = hardware_count(report.cases[k].program);
        ok = ok && m == expected_m[k];
        d << report.cases[k].name << " M=" << m << " ";
    }
    ok = ok && elapsed < 1.0;
    d << "time=" << elapsed << "s";
    return {ok, d.str()};
}

Outcome soundness() {
    const auto start = Clock::now();
    std::size_t trials = 0;
    std::size_t failures = 0;
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        const auto report = random_suite(100, seed, 1024, 8, 12, 32);
        trials += report.trials.size();
        failures += report.failures();
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "pairs=" << trials << " mismatching=" << failures << " T=1024 time=" << elapsed << "s";
    return {failures == 0 && trials == 300 && elapsed < 60.0, d.str()};
}

Outcome universe_scale() {
    const ReferenceSystem sys(20, 2018);
    const GateCircuit circ = chained_cascade(19, true);
    const auto start = Clock::now();
    const auto result = universe_invariance_check(sys, circ, 4096);
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "N=20 gates=" << circ.gates.size() << " M=" << hardware_count(compile_circuit(circ))
      << " ticks=" << result.ticks_checked << " time=" << elapsed << "s";
    return {result.pass() && result.ticks_checked == 4096 && elapsed < 10.0, d.str()};
}

Outcome orthogonality() {
    bool ok = true;
    std::size_t entries = 0;
    double worst = 0;
    for (std::uint64_t seed : {42ULL, 7ULL, 2018ULL}) {
        const ReferenceSystem sys(3, seed);
        const auto report = orthogonality_report(sys, 1000000);
        ok = ok && report.all_pass();
        for (const auto &e : report.entries) {
            ++entries;
            if (e.name.rfind("square", 0) == 0) {
                ok = ok && e.estimate == 1.0;
            } else {
                ok = ok && std::abs(e.tolerance - 0.005) < 1e-12;
                worst = std::max(worst, std::abs(e.estimate - e.expected));
            }
        }
    }
    std::ostringstream d;
    d << "N=3 seeds=3 T=1e6 entries=" << entries << " max|dev|=" << worst << " tol=0.005";
    return {ok, d.str()};
}

Outcome zero_problem() {
    const ReferenceSystem sys(10, 99);
    const auto report = zero_fraction(sys, Superposition::universe(10), 1000000);
    const auto &e = report.entries.front();
    std::ostringstream d;
    d << "N=10 T=1e6 estimate=" << e.estimate << " expected=" << e.expected << " tol=" << e.tolerance;
    return {report.all_pass() && std::abs(e.expected - (1.0 - 1.0 / 1024.0)) < 1e-15, d.str()};
}

Outcome membership() {
    const std::size_t n = 6;
    const ReferenceSystem sys(n, 5);
    std::mt19937_64 rng(5);
    Superposition y = Superposition::explicit_terms(n);
    std::vector<BitString> members;
    while (members.size() < 8) {
        const auto s = BitString::from_integer(n, rng() % 64);
        if (y.coefficient(s) == 0) {
            y.add(s, 1);
            members.push_back(s);
        }
    }
    std::vector<BitString> outsiders;
    for (std::uint64_t v = 0; outsiders.size() < 8; ++v) {
        const auto s = BitString::from_integer(n, v);
        if (y.coefficient(s) == 0) {
            outsiders.push_back(s);
        }
    }
    const double tol = 5.0 * std::sqrt(8.0 / 1e6);
    bool ok = true;
    double worst = 0;
    const InsertionProgram empty(n);
    for (const auto *group : {&members, &outsiders}) {
        for (const auto &probe : *group) {
            const auto report = membership_estimate(sys, empty, y, probe, 1000000);
            const auto &e = report.entries.front();
            const double want = group == &members ? 1.0 : 0.0;
            ok = ok && report.all_pass() && e.expected == want && std::abs(e.tolerance - tol) < 1e-12;
            worst = std::max(worst, std::abs(e.estimate - want));
        }
    }
    std::ostringstream d;
    d << "|Y|=8 probes=16 T=1e6 max|dev|=" << worst << " tol=" << tol;
    return {ok, d.str()};
}

Outcome conjecture() {
    bool ok = true;
    std::ostringstream d;
    for (std::size_t len = 1; len <= 10; ++len) {
        const auto low = hardware_count(compile_circuit(chained_cascade(len, false)));
        const auto high = hardware_count(compile_circuit(chained_cascade(len, true)));
        ok = ok && low == len && high == len * (len + 1) / 2;
    }
    std::size_t violations = 0;
    std::size_t unexplained = 0;
    for (std::size_t gates = 2; gates <= 8; ++gates) {
        const auto report = conjecture_scan(gates, 6, 2000, 1000 + gates);
        violations += report.violations.size();
        unexplained += report.unexplained_violations();
        for (const auto &v : report.violations) {
            ok = ok && !v.circuit.gates.empty();
        }
    }
    ok = ok && unexplained == 0;
    d << "chained L=1..10 attain M=L and M=L(L+1)/2; random scans violations=" << violations
      << " (all cancelling: " << (unexplained == 0 ? "yes" : "no") << ")";
    return {ok, d.str()};
}

Outcome properties() {
    bool ok = true;
    std::size_t checks = 0;
    std::mt19937_64 rng(8);
    for (std::size_t n = 1; n <= 6; ++n) {
        const ReferenceSystem sys(n, 100 + n);
        const auto full = all_strings(n);
        Superposition even = Superposition::explicit_terms(n);
        Superposition odd = Superposition::explicit_terms(n);
        for (const auto &[s, c] : full.terms()) {
            (s.to_integer() % 2 == 0 ? even : odd).add(s, c);
        }
        std::vector<Gate> gates;
        for (std::size_t t = 0; t < n; ++t) {
            gates.push_back(Gate::make_not(t));
            for (std::size_t c = 0; c < n; ++c) {
                if (c != t) {
                    gates.push_back(Gate::make_cnot(c, t));
                }
            }
        }
        for (const auto &g : gates) {
            const GateCircuit twice(n, {g, g});
            ok = ok && compile_circuit(twice).empty();
            ok = ok && circuit_to_affine(twice) == AffineMapGF2::identity(n);
            ok = ok && signal_equivalence_check(sys, twice, full, 256).pass();

            const GateCircuit once(n, {g});
            const auto prog = compile_circuit(once);
            const auto map = circuit_to_affine(once);
            ok = ok && oracle_apply(map, even + odd) == oracle_apply(map, even) + oracle_apply(map, odd);
            const auto extra = random_superposition(n, 8, rng);
            SignalEvaluator a(sys, prog, even);
            SignalEvaluator b(sys, prog, extra);
            SignalEvaluator ab(sys, prog, even + extra);
            for (ClockTick t = 0; t < 256; ++t) {
                ok = ok && ab.at(t) == a.at(t) + b.at(t);
            }
            ok = ok && signal_equivalence_check(sys, once, full, 256).pass();
            checks += 1;
        }
    }
    std::ostringstream d;
    d << "N=1..6 gates=" << checks << " NOT^2=id CNOT^2=id linearity over sums";
    return {ok, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 figure reproduction", figures},
        {"2 compilation soundness", soundness},
        {"3 universe invariance N=20", universe_scale},
        {"4 orthogonality statistics", orthogonality},
        {"5 zero-problem fraction", zero_problem},
        {"6 membership measurement", membership},
        {"7 hardware-count bounds", conjecture},
        {"8 involution and linearity", properties},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
        failed += !outcome.pass;
    }
    return failed == 0 ? 0 : 1;
}
