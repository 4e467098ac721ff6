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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nbl/errors.hpp"
#include "nbl/insertion_program.hpp"
#include "nbl/keyed_rng.hpp"
#include "nbl/stat_report.hpp"

namespace nbl {

/// Index of a clock period. Every wire holds a single value for the whole period.
using ClockTick = std::uint64_t;

/// Value of a random telegraph wave during one tick: -1 or +1.
using RtwSample = int;

/// The bank of 2N clocked random-telegraph-wave sources W_{i,j}(t).
///
/// Wire (i, j) at tick t is a fair +/-1 coin flip determined only by
/// (seed, i, j, t). Ticks are grouped in blocks of 64: one keyed 64-bit word per
/// (wire, block) whose bit (t mod 64) is set when the sample is -1.
class ReferenceSystem {
   public:
    ReferenceSystem(std::size_t n_bits, std::uint64_t seed) : n_bits_(n_bits), rng_(seed) {
        if (n_bits == 0) {
            throw InputError("reference system needs at least one noise-bit");
        }
    }

    std::size_t n_bits() const noexcept {
        return n_bits_;
    }

    std::size_t n_wires() const noexcept {
        return 2 * n_bits_;
    }

    std::uint64_t seed() const noexcept {
        return rng_.seed();
    }

    void check_wire(const WireId &wire) const {
        if (wire.bit_index >= n_bits_ || (wire.bit_value != 0 && wire.bit_value != 1)) {
            throw InputError(
                "wire " + to_string(wire) + " out of range for " + std::to_string(n_bits_) + " noise-bits");
        }
    }

    /// Sign bits of ticks [64*block, 64*block + 64) on the wire with dense code `wire_code`.
    std::uint64_t negative_mask(std::size_t wire_code, std::uint64_t block) const noexcept {
        return rng_.word(wire_code, block);
    }

    RtwSample sample(const WireId &wire, ClockTick tick) const {
        check_wire(wire);
        return sample_unchecked(wire.code(), tick);
    }

    RtwSample sample_unchecked(std::size_t wire_code, ClockTick tick) const noexcept {
        return ((negative_mask(wire_code, tick >> 6) >> (tick & 63)) & 1) ? -1 : +1;
    }

   private:
    std::size_t n_bits_;
    KeyedRng rng_;
};

inline RtwSample sample_wire(const ReferenceSystem &sys, const WireId &wire, ClockTick tick) {
    return sys.sample(wire, tick);
}

/// NOT_bit(t) = W_{bit,0}(t) * W_{bit,1}(t). Multiplying a product string by it swaps
/// the string's factor for `bit` to the other value.
inline RtwSample not_operator_sample(const ReferenceSystem &sys, std::size_t bit, ClockTick tick) {
    if (bit >= sys.n_bits()) {
        throw InputError("NOT operator bit " + std::to_string(bit) + " out of range");
    }
    return sys.sample_unchecked(2 * bit, tick) * sys.sample_unchecked(2 * bit + 1, tick);
}

inline void check_program_matches(const ReferenceSystem &sys, const InsertionProgram &prog) {
    if (prog.n_bits() != sys.n_bits()) {
        throw InputError(
            "insertion program is for " + std::to_string(prog.n_bits()) + " bits, reference system has " +
            std::to_string(sys.n_bits()));
    }
}

/// Wire signal after the program's NOT operators are multiplied onto it.
inline RtwSample effective_wire_sample(
    const ReferenceSystem &sys, const InsertionProgram &prog, const WireId &wire, ClockTick tick) {
    check_program_matches(sys, prog);
    RtwSample value = sys.sample(wire, tick);
    for (auto target : prog.targets_on(wire)) {
        value *= not_operator_sample(sys, target, tick);
    }
    return value;
}

/// Evaluates all 2N effective wires of one (system, program) pair tick by tick.
///
/// The program is flattened once into per-wire target lists; each tick then costs
/// 2N keyed samples plus one multiply per insertion.
class EffectiveWires {
   public:
    EffectiveWires(const ReferenceSystem &sys, const InsertionProgram &prog)
        : sys_(&sys), targets_(sys.n_wires()), values_(sys.n_wires(), 1), base_(sys.n_wires(), 1) {
        check_program_matches(sys, prog);
        for (const auto &ins : prog.insertions()) {
            targets_[ins.host.code()].push_back(ins.target);
        }
    }

    const ReferenceSystem &system() const noexcept {
        return *sys_;
    }

    /// Effective wire values at `tick`, indexed by WireId::code(). Valid until the next call.
    const std::vector<RtwSample> &at(ClockTick tick) {
        const std::size_t n_wires = sys_->n_wires();
        for (std::size_t w = 0; w < n_wires; ++w) {
            base_[w] = sys_->sample_unchecked(w, tick);
        }
        for (std::size_t w = 0; w < n_wires; ++w) {
            RtwSample v = base_[w];
            for (auto target : targets_[w]) {
                v *= base_[2 * target] * base_[2 * target + 1];
            }
            values_[w] = v;
        }
        return values_;
    }

    /// Untransformed wire values from the most recent at() call.
    const std::vector<RtwSample> &base() const noexcept {
        return base_;
    }

   private:
    const ReferenceSystem *sys_;
    std::vector<std::vector<std::size_t>> targets_;
    std::vector<RtwSample> values_;
    std::vector<RtwSample> base_;
};

namespace detail {

/// Sum of +/-1 samples over ticks [0, T) given a function producing the 64-tick negative masks.
template <typename MaskFn>
std::int64_t signed_sum(std::uint64_t ticks, MaskFn &&mask_of_block) {
    std::int64_t total = 0;
    const std::uint64_t full_blocks = ticks / 64;
    for (std::uint64_t b = 0; b < full_blocks; ++b) {
        total += 64 - 2 * std::popcount(mask_of_block(b));
    }
    if (const std::uint64_t rest = ticks % 64; rest != 0) {
        const std::uint64_t keep = (std::uint64_t{1} << rest) - 1;
        total += static_cast<std::int64_t>(rest) - 2 * std::popcount(mask_of_block(full_blocks) & keep);
    }
    return total;
}

inline std::string wire_name(std::size_t code) {
    const auto w = WireId::from_code(code);
    return "W" + to_string(w);
}

}  // namespace detail

/// Empirical zero-mean and orthogonality statistics of the reference wires over ticks [0, T).
///
/// Entries:
///   mean W(i,j)                      expected 0
///   square W(i,j)                    expected 1 (exact)
///   mean W(i,j)*W(m,n)               expected 0, all distinct pairs
///   corr (W(i,j)*W(m,n))*W(i,j)      expected 0, product wave against each factor
/// Mean estimators carry the 5/sqrt(T) band.
inline StatReport orthogonality_report(const ReferenceSystem &sys, std::uint64_t ticks) {
    if (ticks == 0) {
        throw InputError("orthogonality_report needs at least one tick");
    }
    const std::size_t n_wires = sys.n_wires();
    const double tol = five_sigma(1.0, ticks);
    const auto mean = [ticks](std::int64_t sum) { return static_cast<double>(sum) / static_cast<double>(ticks); };
    StatReport report;

    for (std::size_t a = 0; a < n_wires; ++a) {
        auto wa = [&](std::uint64_t b) { return sys.negative_mask(a, b); };
        report.add("mean " + detail::wire_name(a), mean(detail::signed_sum(ticks, wa)), 0.0, tol, ticks);
    }
    for (std::size_t a = 0; a < n_wires; ++a) {
        // A sample times itself is never negative.
        auto square = [&](std::uint64_t b) { return sys.negative_mask(a, b) ^ sys.negative_mask(a, b); };
        report.add("square " + detail::wire_name(a), mean(detail::signed_sum(ticks, square)), 1.0, 0.0, ticks);
    }
    for (std::size_t a = 0; a < n_wires; ++a) {
        for (std::size_t c = a + 1; c < n_wires; ++c) {
            auto product = [&](std::uint64_t b) { return sys.negative_mask(a, b) ^ sys.negative_mask(c, b); };
            report.add(
                "mean " + detail::wire_name(a) + "*" + detail::wire_name(c),
                mean(detail::signed_sum(ticks, product)),
                0.0,
                tol,
                ticks);
        }
    }
    for (std::size_t a = 0; a < n_wires; ++a) {
        for (std::size_t c = a + 1; c < n_wires; ++c) {
            const std::string pair = "(" + detail::wire_name(a) + "*" + detail::wire_name(c) + ")";
            for (std::size_t factor : {a, c}) {
                auto corr = [&](std::uint64_t b) {
                    return (sys.negative_mask(a, b) ^ sys.negative_mask(c, b)) ^ sys.negative_mask(factor, b);
                };
                report.add(
                    "corr " + pair + "*" + detail::wire_name(factor),
                    mean(detail::signed_sum(ticks, corr)),
                    0.0,
                    tol,
                    ticks);
            }
        }
    }
    return report;
}

}  // namespace nbl
