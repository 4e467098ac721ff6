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

// Independent brute-force routes used as test oracles. Nothing here calls the
// compiler, the affine composition, the factorized evaluator or the pattern expander.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nbl/nbl.hpp"

namespace nbl::oracle {

/// Applies the gates one at a time to a plain bit array.
inline std::vector<int> simulate_gates(const GateCircuit &circ, std::vector<int> bits) {
    for (const auto &g : circ.gates) {
        if (g.kind == GateKind::Not) {
            bits[g.target] ^= 1;
        } else if (bits[g.control]) {
            bits[g.target] ^= 1;
        }
    }
    return bits;
}

inline std::vector<int> to_bits(std::size_t n, std::uint64_t value) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<int>((value >> i) & 1);
    }
    return bits;
}

inline std::uint64_t from_bits(const std::vector<int> &bits) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        v |= static_cast<std::uint64_t>(bits[i]) << i;
    }
    return v;
}

/// Truth table of the circuit: entry v is the output for input v.
inline std::vector<std::uint64_t> truth_table(const GateCircuit &circ) {
    std::vector<std::uint64_t> table(std::size_t{1} << circ.n_bits);
    for (std::uint64_t v = 0; v < table.size(); ++v) {
        table[v] = from_bits(simulate_gates(circ, to_bits(circ.n_bits, v)));
    }
    return table;
}

/// Base signal of one product string straight from the reference wires.
inline std::int64_t base_string_signal(const ReferenceSystem &sys, std::uint64_t s, ClockTick t) {
    std::int64_t x = 1;
    for (std::size_t i = 0; i < sys.n_bits(); ++i) {
        x *= sys.sample(WireId{i, static_cast<int>((s >> i) & 1)}, t);
    }
    return x;
}

/// String -> coefficient, strings as integers (bit i = bit i of the label).
using IntTerms = std::map<std::uint64_t, std::int64_t>;

/// Every string admitted by the pattern, found by scanning all 2^N labels.
inline IntTerms enumerate_pattern(const std::vector<PatternBit> &bits) {
    IntTerms out;
    const std::size_t n = bits.size();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const int b = static_cast<int>((v >> i) & 1);
            ok = bits[i] == PatternBit::Both || (bits[i] == PatternBit::One) == (b == 1);
        }
        if (ok) {
            out[v] = 1;
        }
    }
    return out;
}

inline IntTerms to_int_terms(const Superposition &y) {
    if (y.is_pattern()) {
        return enumerate_pattern(y.pattern_bits());
    }
    IntTerms out;
    for (const auto &[s, coeff] : y.terms()) {
        out[s.to_integer()] = coeff;
    }
    return out;
}

/// Sum of coefficient * base product-string signal.
inline std::int64_t base_signal(const ReferenceSystem &sys, const IntTerms &terms, ClockTick t) {
    std::int64_t total = 0;
    for (const auto &[s, coeff] : terms) {
        total += coeff * base_string_signal(sys, s, t);
    }
    return total;
}

/// Terms moved through the truth table, coefficients of coinciding images added.
inline IntTerms permute(const IntTerms &terms, const std::vector<std::uint64_t> &table) {
    IntTerms out;
    for (const auto &[s, coeff] : terms) {
        out[table[s]] += coeff;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

inline std::vector<PatternBit> random_pattern(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<PatternBit> bits(n);
    for (auto &b : bits) {
        b = static_cast<PatternBit>(pick(rng));
    }
    return bits;
}

}  // namespace nbl::oracle
