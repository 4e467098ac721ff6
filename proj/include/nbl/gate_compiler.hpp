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
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nbl/affine_gf2.hpp"
#include "nbl/errors.hpp"
#include "nbl/insertion_program.hpp"

namespace nbl {

enum class GateKind { Not, Cnot };

struct Gate {
    GateKind kind = GateKind::Not;
    std::size_t target = 0;
    std::size_t control = 0;  // CNOT only

    static Gate make_not(std::size_t target) {
        return Gate{GateKind::Not, target, 0};
    }

    static Gate make_cnot(std::size_t control, std::size_t target) {
        if (control == target) {
            throw InputError("CNOT control and target must differ (both " + std::to_string(target) + ")");
        }
        return Gate{GateKind::Cnot, target, control};
    }

    std::string str() const {
        return kind == GateKind::Not ? "NOT " + std::to_string(target)
                                     : "CNOT " + std::to_string(control) + " " + std::to_string(target);
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// A NOT/CNOT cascade. Gates apply in listed order: gates[0] acts on the input first.
///
/// The operator product CNOT_{2,3} CNOT_{1,2} is written here as the list
/// [CNOT 1 2, CNOT 0 1] (0-based, leftmost factor first).
struct GateCircuit {
    std::size_t n_bits = 0;
    std::vector<Gate> gates;

    GateCircuit() = default;

    GateCircuit(std::size_t n, std::vector<Gate> g) : n_bits(n), gates(std::move(g)) {
        validate();
    }

    void validate() const {
        for (const auto &g : gates) {
            if (g.target >= n_bits || (g.kind == GateKind::Cnot && g.control >= n_bits)) {
                throw InputError("gate '" + g.str() + "' out of range for " + std::to_string(n_bits) + " bits");
            }
            if (g.kind == GateKind::Cnot && g.control == g.target) {
                throw InputError("gate '" + g.str() + "' has control equal to target");
            }
        }
    }

    bool has_not() const {
        return std::any_of(gates.begin(), gates.end(), [](const Gate &g) { return g.kind == GateKind::Not; });
    }

    GateCircuit then(const GateCircuit &next) const {
        GateCircuit out(std::max(n_bits, next.n_bits), gates);
        out.gates.insert(out.gates.end(), next.gates.begin(), next.gates.end());
        return out;
    }

    /// Circuit file text, one gate per line.
    std::string str() const {
        std::string out;
        for (const auto &g : gates) {
            out += g.str() + "\n";
        }
        return out;
    }

    /// Single-line form "CNOT 0 1; CNOT 1 2" for reports.
    std::string inline_str() const {
        std::string out;
        for (const auto &g : gates) {
            if (!out.empty()) {
                out += "; ";
            }
            out += g.str();
        }
        return out;
    }

    friend bool operator==(const GateCircuit &, const GateCircuit &) = default;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line_no) {
    if (!tok.empty() && tok[0] == '-') {
        throw ParseError(line_no, "negative bit index '" + std::string(tok) + "'");
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "bad bit index '" + std::string(tok) + "'");
    }
    return value;
}

inline std::string upper(std::string_view s) {
    std::string out(s);
    for (auto &ch : out) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return out;
}

}  // namespace detail

/// Parses the circuit file format: `NOT <t>` or `CNOT <c> <t>` per line, 0-based indices,
/// `#` comments, blank lines ignored. n_bits is 1 + the largest index unless `n_bits`
/// is given, in which case every index must be below it.
inline GateCircuit parse_circuit(std::string_view text, std::optional<std::size_t> n_bits = std::nullopt) {
    GateCircuit circ;
    std::size_t max_index_plus_one = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = detail::split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string op = detail::upper(tokens[0]);
        Gate gate;
        if (op == "NOT") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, "expected 'NOT <target>'");
            }
            gate = Gate::make_not(detail::parse_index(tokens[1], line_no));
        } else if (op == "CNOT") {
            if (tokens.size() != 3) {
                throw ParseError(line_no, "expected 'CNOT <control> <target>'");
            }
            auto control = detail::parse_index(tokens[1], line_no);
            auto target = detail::parse_index(tokens[2], line_no);
            if (control == target) {
                throw ParseError(line_no, "CNOT control equals target (" + std::to_string(target) + ")");
            }
            gate = Gate::make_cnot(control, target);
        } else {
            throw ParseError(line_no, "unknown gate '" + std::string(tokens[0]) + "'");
        }
        max_index_plus_one = std::max({max_index_plus_one, gate.target + 1, gate.control + 1});
        if (n_bits && (gate.target >= *n_bits || gate.control >= *n_bits)) {
            throw ParseError(line_no, "gate '" + gate.str() + "' exceeds n_bits=" + std::to_string(*n_bits));
        }
        circ.gates.push_back(gate);
    }
    circ.n_bits = n_bits.value_or(max_index_plus_one);
    return circ;
}

/// Exact semantics of the cascade as an affine map over GF(2).
///
/// Tracks every current bit as an affine function of the input bits: NOT t flips the
/// constant of row t; CNOT c,t adds row c (and its constant) into row t.
inline AffineMapGF2 circuit_to_affine(const GateCircuit &circ) {
    circ.validate();
    AffineMapGF2 map = AffineMapGF2::identity(circ.n_bits);
    for (const auto &g : circ.gates) {
        if (g.kind == GateKind::Not) {
            map.constant().flip(g.target);
        } else {
            map.row(g.target) ^= map.row(g.control);
            if (map.constant()[g.control]) {
                map.constant().flip(g.target);
            }
        }
    }
    return map;
}

/// The canonical insertion program realizing `map` on the reference wires.
///
/// Output bit t must be flipped by f_t(s) = (row_t xor e_t).s xor c_t. A NOT_t on wire
/// (i,1) flips t exactly when s_i = 1, one on (i,0) exactly when s_i = 0, and a pair on
/// (t,0),(t,1) always. So with S the support of the linear part:
///   c_t = 0          -> t on (i,1) for every i in S
///   c_t = 1, S != {} -> t on (min S, 0), and on (i,1) for the rest of S
///   c_t = 1, S == {} -> t on (t,0) and (t,1)
inline InsertionProgram compile_to_insertions(const AffineMapGF2 &map) {
    if (!map.is_invertible()) {
        throw InputError("cannot compile a non-invertible affine map");
    }
    const std::size_t n = map.n_bits();
    InsertionProgram prog(n);
    for (std::size_t t = 0; t < n; ++t) {
        BitVector flip = map.row(t);
        flip.flip(t);
        const auto support = flip.support();
        const bool constant = map.constant()[t];
        if (support.empty()) {
            if (constant) {
                prog.toggle(Insertion{WireId{t, 0}, t});
                prog.toggle(Insertion{WireId{t, 1}, t});
            }
            continue;
        }
        for (std::size_t k = 0; k < support.size(); ++k) {
            const int host_value = (constant && k == 0) ? 0 : 1;
            prog.toggle(Insertion{WireId{support[k], host_value}, t});
        }
    }
    return prog;
}

inline InsertionProgram compile_circuit(const GateCircuit &circ) {
    return compile_to_insertions(circuit_to_affine(circ));
}

/// M: number of NOT hardware elements.
inline std::size_t hardware_count(const InsertionProgram &prog) noexcept {
    return prog.size();
}

/// Result of building a program gate by gate, adding the NOT operators each gate needs
/// given what earlier gates already did to its control bit.
struct IncrementalBuild {
    InsertionProgram program;
    /// Insertions that annihilated an identical earlier insertion.
    std::size_t cancellations = 0;
    /// Insertions placed by each gate, in gate order.
    std::vector<std::vector<Insertion>> per_gate;
};

/// Step-by-step construction: a CNOT c,t places NOT_t on the value-1 wire of every
/// input bit the current control value depends on, plus an always-on pair when that
/// value carries a constant; NOT t places the always-on pair.
inline IncrementalBuild incremental_insertions(const GateCircuit &circ) {
    circ.validate();
    IncrementalBuild build{InsertionProgram(circ.n_bits), 0, {}};
    AffineMapGF2 current = AffineMapGF2::identity(circ.n_bits);
    auto place = [&](Insertion ins, std::vector<Insertion> &placed) {
        placed.push_back(ins);
        if (!build.program.toggle(ins)) {
            ++build.cancellations;
        }
    };
    for (const auto &g : circ.gates) {
        std::vector<Insertion> placed;
        const std::size_t t = g.target;
        const bool always = g.kind == GateKind::Not || current.constant()[g.control];
        if (g.kind == GateKind::Cnot) {
            for (auto i : current.row(g.control).support()) {
                place(Insertion{WireId{i, 1}, t}, placed);
            }
        }
        if (always) {
            place(Insertion{WireId{t, 0}, t}, placed);
            place(Insertion{WireId{t, 1}, t}, placed);
        }
        if (g.kind == GateKind::Not) {
            current.constant().flip(t);
        } else {
            current.row(t) ^= current.row(g.control);
            if (current.constant()[g.control]) {
                current.constant().flip(t);
            }
        }
        build.per_gate.push_back(std::move(placed));
    }
    return build;
}

/// CNOT_{0,1} CNOT_{1,2} ... (ascending = true, each gate feeds the next gate's control)
/// or CNOT_{L-1,L} ... CNOT_{0,1} (ascending = false, no gate reads an earlier target).
/// Uses length + 1 bits.
inline GateCircuit chained_cascade(std::size_t length, bool ascending) {
    GateCircuit circ;
    circ.n_bits = length + 1;
    for (std::size_t k = 0; k < length; ++k) {
        const std::size_t c = ascending ? k : length - 1 - k;
        circ.gates.push_back(Gate::make_cnot(c, c + 1));
    }
    return circ;
}

inline GateCircuit random_cnot_cascade(std::size_t n_gates, std::size_t n_bits, std::mt19937_64 &rng) {
    if (n_bits < 2) {
        throw InputError("a CNOT needs at least 2 bits");
    }
    std::uniform_int_distribution<std::size_t> pick_control(0, n_bits - 1);
    std::uniform_int_distribution<std::size_t> pick_offset(1, n_bits - 1);
    GateCircuit circ;
    circ.n_bits = n_bits;
    for (std::size_t k = 0; k < n_gates; ++k) {
        const std::size_t c = pick_control(rng);
        const std::size_t t = (c + pick_offset(rng)) % n_bits;
        circ.gates.push_back(Gate::make_cnot(c, t));
    }
    return circ;
}

struct ConjectureViolation {
    enum class Bound { Lower, Upper };
    Bound bound = Bound::Lower;
    std::size_t m = 0;
    bool cancelling = false;
    GateCircuit circuit;
};

/// Hardware-count statistics for random CNOT cascades against L <= M <= L(L+1)/2.
struct ConjectureReport {
    std::size_t n_gates = 0;
    std::size_t n_bits = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t lower_bound = 0;
    std::size_t upper_bound = 0;
    std::size_t min_m = 0;
    std::size_t max_m = 0;
    std::map<std::size_t, std::size_t> histogram;
    /// Cascades whose incremental build cancelled at least one insertion.
    std::size_t cancelling = 0;
    std::vector<ConjectureViolation> violations;

    /// Violations by cascades with no cancellation; the bound predicts there are none.
    std::size_t unexplained_violations() const {
        return static_cast<std::size_t>(std::count_if(
            violations.begin(), violations.end(), [](const ConjectureViolation &v) { return !v.cancelling; }));
    }

    std::string str() const {
        std::ostringstream out;
        out << "conjecture scan: gates=" << n_gates << " bits=" << n_bits << " samples=" << samples
            << " seed=" << seed << "\n";
        out << "bounds: " << lower_bound << " <= M <= " << upper_bound << "\n";
        out << "observed: min M=" << min_m << " max M=" << max_m << "\n";
        out << "cancelling cascades: " << cancelling << "\n";
        out << "histogram:";
        for (const auto &[m, count] : histogram) {
            out << " " << m << ":" << count;
        }
        out << "\n";
        out << "violations: " << violations.size() << " (outside cancelling cascades: " << unexplained_violations()
            << ")\n";
        for (const auto &v : violations) {
            out << "  WARNING " << (v.bound == ConjectureViolation::Bound::Lower ? "M < L" : "M > L(L+1)/2")
                << " M=" << v.m << (v.cancelling ? " [cancelling]" : "") << ": " << v.circuit.inline_str()
                << "\n";
        }
        return out.str();
    }
};

/// Classifies one cascade against the bound and folds it into `report`.
inline void record_cascade(ConjectureReport &report, const GateCircuit &circ) {
    const std::size_t m = hardware_count(compile_circuit(circ));
    const bool cancelling = incremental_insertions(circ).cancellations > 0;
    const std::size_t len = circ.gates.size();
    const std::size_t lo = len;
    const std::size_t hi = len * (len + 1) / 2;
    if (report.histogram.empty()) {
        report.min_m = report.max_m = m;
    }
    report.min_m = std::min(report.min_m, m);
    report.max_m = std::max(report.max_m, m);
    ++report.histogram[m];
    if (cancelling) {
        ++report.cancelling;
    }
    if (m < lo) {
        report.violations.push_back({ConjectureViolation::Bound::Lower, m, cancelling, circ});
    } else if (m > hi) {
        report.violations.push_back({ConjectureViolation::Bound::Upper, m, cancelling, circ});
    }
}

/// Draws `samples` random CNOT cascades of `n_gates` gates on `n_bits` bits and records
/// M for each. Bound violations are findings, not errors.
inline ConjectureReport conjecture_scan(
    std::size_t n_gates, std::size_t n_bits, std::size_t samples, std::uint64_t seed) {
    if (n_gates == 0) {
        throw InputError("conjecture scan needs at least one gate");
    }
    if (n_bits < 2) {
        throw InputError("conjecture scan needs at least 2 bits (no CNOT on fewer)");
    }
    ConjectureReport report;
    report.n_gates = n_gates;
    report.n_bits = n_bits;
    report.samples = samples;
    report.seed = seed;
    report.lower_bound = n_gates;
    report.upper_bound = n_gates * (n_gates + 1) / 2;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        record_cascade(report, random_cnot_cascade(n_gates, n_bits, rng));
    }
    return report;
}

}  // namespace nbl
