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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nbl/affine_gf2.hpp"
#include "nbl/bit_vector.hpp"
#include "nbl/errors.hpp"
#include "nbl/insertion_program.hpp"
#include "nbl/rtw_reference.hpp"
#include "nbl/stat_report.hpp"

namespace nbl {

/// Exact integer amplitude of a superposition at one tick.
using SignalValue = std::int64_t;

/// Largest number of strings a Pattern may expand into.
inline constexpr std::size_t kExpansionBudget = std::size_t{1} << 20;

/// Largest bit count whose factorized signals are evaluated (|signal| <= 2^32).
inline constexpr std::size_t kMaxSignalBits = 32;

enum class PatternBit : std::uint8_t { Zero, One, Both };

/// Sum of product strings with integer coefficients.
///
/// Either an explicit string -> coefficient table (no zero coefficients stored), or a
/// per-bit pattern denoting the coefficient-1 sum over all strings it admits. The
/// all-Both pattern is the universe.
class Superposition {
   public:
    using Terms = std::map<BitString, std::int64_t>;

    static Superposition explicit_terms(std::size_t n_bits, const Terms &terms = {}) {
        Superposition y(n_bits, Terms{});
        for (const auto &[s, coeff] : terms) {
            y.add(s, coeff);
        }
        return y;
    }

    static Superposition singleton(const BitString &s, std::int64_t coeff = 1) {
        return explicit_terms(s.size(), {{s, coeff}});
    }

    static Superposition pattern(std::vector<PatternBit> bits) {
        const std::size_t n = bits.size();
        return Superposition(n, std::move(bits));
    }

    static Superposition universe(std::size_t n_bits) {
        return pattern(std::vector<PatternBit>(n_bits, PatternBit::Both));
    }

    std::size_t n_bits() const noexcept {
        return n_bits_;
    }

    bool is_pattern() const noexcept {
        return std::holds_alternative<std::vector<PatternBit>>(body_);
    }

    const Terms &terms() const {
        if (is_pattern()) {
            throw InputError("superposition is a pattern, not an explicit term list");
        }
        return std::get<Terms>(body_);
    }

    const std::vector<PatternBit> &pattern_bits() const {
        if (!is_pattern()) {
            throw InputError("superposition is an explicit term list, not a pattern");
        }
        return std::get<std::vector<PatternBit>>(body_);
    }

    /// Number of bits allowed both values (k); the pattern holds 2^k strings.
    std::size_t free_bits() const {
        std::size_t k = 0;
        for (auto b : pattern_bits()) {
            k += b == PatternBit::Both;
        }
        return k;
    }

    /// Number of strings with nonzero coefficient.
    std::size_t term_count() const {
        if (!is_pattern()) {
            return terms().size();
        }
        const std::size_t k = free_bits();
        return k >= 63 ? std::numeric_limits<std::size_t>::max() : std::size_t{1} << k;
    }

    /// Adds `coeff` to the coefficient of `s`; a resulting zero coefficient is removed.
    void add(const BitString &s, std::int64_t coeff) {
        auto &terms = std::get<Terms>(body_mutable_explicit());
        if (s.size() != n_bits_) {
            throw InputError(
                "bit string '" + s.str() + "' has length " + std::to_string(s.size()) + ", expected " +
                std::to_string(n_bits_));
        }
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms.emplace(s, coeff);
        if (!inserted) {
            if (__builtin_add_overflow(it->second, coeff, &it->second)) {
                throw ConfigError("coefficient overflow for string " + s.str());
            }
            if (it->second == 0) {
                terms.erase(it);
            }
        }
    }

    /// Coefficient of `s` (0 when absent). Patterns answer by membership.
    std::int64_t coefficient(const BitString &s) const {
        if (s.size() != n_bits_) {
            throw InputError("probe length does not match superposition");
        }
        if (is_pattern()) {
            const auto &bits = pattern_bits();
            for (std::size_t i = 0; i < n_bits_; ++i) {
                if (bits[i] != PatternBit::Both && (bits[i] == PatternBit::One) != s[i]) {
                    return 0;
                }
            }
            return 1;
        }
        auto it = terms().find(s);
        return it == terms().end() ? 0 : it->second;
    }

    /// Text form accepted by parse_superposition.
    std::string str() const {
        if (is_pattern()) {
            std::string out;
            for (auto b : pattern_bits()) {
                out += b == PatternBit::Zero ? '0' : b == PatternBit::One ? '1' : '*';
            }
            return out;
        }
        std::string out;
        for (const auto &[s, coeff] : terms()) {
            if (!out.empty()) {
                out += ";";
            }
            if (coeff != 1) {
                out += std::to_string(coeff) + "*";
            }
            out += s.str();
        }
        return out + ";";
    }

    friend bool operator==(const Superposition &, const Superposition &) = default;

   private:
    Superposition(std::size_t n, Terms terms) : n_bits_(n), body_(std::move(terms)) {
    }

    Superposition(std::size_t n, std::vector<PatternBit> bits) : n_bits_(n), body_(std::move(bits)) {
    }

    std::variant<Terms, std::vector<PatternBit>> &body_mutable_explicit() {
        if (is_pattern()) {
            throw InputError("cannot add terms to a pattern superposition; expand it first");
        }
        return body_;
    }

    std::size_t n_bits_ = 0;
    std::variant<Terms, std::vector<PatternBit>> body_;
};

/// Explicit equivalent of `y`. Throws ResourceError when a pattern admits more than `budget` strings.
inline Superposition expand(const Superposition &y, std::size_t budget = kExpansionBudget) {
    if (!y.is_pattern()) {
        return y;
    }
    const auto &bits = y.pattern_bits();
    const std::size_t k = y.free_bits();
    if (k >= 63 || (std::size_t{1} << k) > budget) {
        throw ResourceError(
            "pattern with " + std::to_string(k) + " free bits exceeds the expansion budget of " +
            std::to_string(budget) + " strings");
    }
    std::vector<std::size_t> free;
    BitString fixed(y.n_bits());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == PatternBit::Both) {
            free.push_back(i);
        } else if (bits[i] == PatternBit::One) {
            fixed.set(i, true);
        }
    }
    Superposition out = Superposition::explicit_terms(y.n_bits());
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << k); ++combo) {
        BitString s = fixed;
        for (std::size_t f = 0; f < k; ++f) {
            if ((combo >> f) & 1) {
                s.set(free[f], true);
            }
        }
        out.add(s, 1);
    }
    return out;
}

/// Coefficient-wise sum. Patterns are expanded first.
inline Superposition operator+(const Superposition &a, const Superposition &b) {
    if (a.n_bits() != b.n_bits()) {
        throw InputError("cannot add superpositions over different bit counts");
    }
    Superposition out = expand(a);
    const Superposition rhs = expand(b);
    for (const auto &[s, coeff] : rhs.terms()) {
        out.add(s, coeff);
    }
    return out;
}

/// Parses the superposition text format:
///   `universe`                  every string (needs n_bits)
///   pattern over {0,1,*}        e.g. `0*1*`, '*' admits both values
///   `101;2*110;-1*011`          explicit list, optional `coeff*` prefix
/// Bit 0 is the leftmost character. Text containing ';' or any character outside
/// {0,1,*} is a list, so a single coefficient-prefixed string is written `3*101;`.
inline Superposition parse_superposition(std::string_view text, std::optional<std::size_t> n_bits = std::nullopt) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto check_length = [&](std::size_t len) {
        if (n_bits && len != *n_bits) {
            throw ParseError(
                0, "superposition has " + std::to_string(len) + " bits, expected " + std::to_string(*n_bits));
        }
    };
    text = trim(text);
    if (text == "universe") {
        if (!n_bits) {
            throw ParseError(0, "'universe' needs an explicit bit count");
        }
        return Superposition::universe(*n_bits);
    }
    if (text.empty()) {
        throw ParseError(0, "empty superposition");
    }
    const bool is_list = text.find_first_not_of("01*") != std::string_view::npos;
    if (!is_list) {
        check_length(text.size());
        std::vector<PatternBit> bits;
        for (char ch : text) {
            bits.push_back(ch == '0' ? PatternBit::Zero : ch == '1' ? PatternBit::One : PatternBit::Both);
        }
        return Superposition::pattern(std::move(bits));
    }

    std::optional<Superposition> out;
    std::size_t pos = 0;
    std::size_t item_no = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++item_no;
        if (item.empty()) {
            continue;
        }
        std::int64_t coeff = 1;
        if (auto star = item.find('*'); star != std::string_view::npos) {
            std::string_view num = trim(item.substr(0, star));
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), coeff);
            if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
                throw ParseError(0, "bad coefficient '" + std::string(num) + "' in item " + std::to_string(item_no));
            }
            item = trim(item.substr(star + 1));
        }
        if (item.empty() || item.find_first_not_of("01") != std::string_view::npos) {
            throw ParseError(0, "item " + std::to_string(item_no) + " is not a bit string: '" + std::string(item) + "'");
        }
        check_length(item.size());
        if (!out) {
            out = Superposition::explicit_terms(item.size());
        } else if (out->n_bits() != item.size()) {
            throw ParseError(0, "item " + std::to_string(item_no) + " has a different length");
        }
        out->add(BitString::from_string(item), coeff);
    }
    if (!out) {
        throw ParseError(0, "superposition list has no strings");
    }
    return *out;
}

/// X_s(t): product over bits i of effective wire (i, s_i).
inline RtwSample product_string_sample(
    const ReferenceSystem &sys, const InsertionProgram &prog, const BitString &s, ClockTick tick) {
    if (s.size() != sys.n_bits()) {
        throw InputError(
            "product string '" + s.str() + "' has " + std::to_string(s.size()) + " bits, reference system has " +
            std::to_string(sys.n_bits()));
    }
    RtwSample value = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        value *= effective_wire_sample(sys, prog, WireId{i, s[i] ? 1 : 0}, tick);
    }
    return value;
}

/// Evaluates one superposition's signal tick by tick against a (system, program) pair.
///
/// Explicit superpositions sum their coefficient-weighted product strings. Patterns are
/// evaluated in factorized form, product over bits of the sum of the allowed wires,
/// which costs O(N) per tick however many strings the pattern holds.
class SignalEvaluator {
   public:
    SignalEvaluator(const ReferenceSystem &sys, const InsertionProgram &prog, const Superposition &y)
        : wires_(sys, prog), pattern_(y.is_pattern()) {
        if (y.n_bits() != sys.n_bits()) {
            throw InputError(
                "superposition has " + std::to_string(y.n_bits()) + " bits, reference system has " +
                std::to_string(sys.n_bits()));
        }
        if (pattern_) {
            if (y.n_bits() > kMaxSignalBits) {
                throw ConfigError(
                    "factorized signals are exact only up to " + std::to_string(kMaxSignalBits) + " bits");
            }
            bits_ = y.pattern_bits();
            return;
        }
        std::int64_t total = 0;
        for (const auto &[s, coeff] : y.terms()) {
            std::vector<std::uint32_t> codes(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                codes[i] = static_cast<std::uint32_t>(2 * i + (s[i] ? 1 : 0));
            }
            const std::int64_t magnitude = coeff < 0 ? -coeff : coeff;
            if (coeff == std::numeric_limits<std::int64_t>::min() || __builtin_add_overflow(total, magnitude, &total)) {
                throw ConfigError("sum of absolute coefficients overflows a 64-bit signal");
            }
            terms_.emplace_back(std::move(codes), coeff);
        }
    }

    SignalValue at(ClockTick tick) {
        const auto &w = wires_.at(tick);
        if (pattern_) {
            SignalValue value = 1;
            for (std::size_t i = 0; i < bits_.size(); ++i) {
                switch (bits_[i]) {
                    case PatternBit::Zero:
                        value *= w[2 * i];
                        break;
                    case PatternBit::One:
                        value *= w[2 * i + 1];
                        break;
                    case PatternBit::Both:
                        value *= w[2 * i] + w[2 * i + 1];
                        break;
                }
                if (value == 0) {
                    break;
                }
            }
            return value;
        }
        SignalValue value = 0;
        for (const auto &[codes, coeff] : terms_) {
            RtwSample x = 1;
            for (auto c : codes) {
                x *= w[c];
            }
            value += x * coeff;
        }
        return value;
    }

    /// Base (untransformed) wire values at the tick of the last at() call.
    const std::vector<RtwSample> &base_wires() const noexcept {
        return wires_.base();
    }

   private:
    EffectiveWires wires_;
    bool pattern_;
    std::vector<PatternBit> bits_;
    std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> terms_;
};

/// Y(t) with the program's NOT operators applied to the reference wires.
inline SignalValue superposition_sample(
    const ReferenceSystem &sys, const InsertionProgram &prog, const Superposition &y, ClockTick tick) {
    return SignalEvaluator(sys, prog, y).at(tick);
}

/// Bit-level semantics: every string s becomes map(s); coefficients of strings that
/// land together add.
inline Superposition oracle_apply(
    const AffineMapGF2 &map, const Superposition &y, std::size_t budget = kExpansionBudget) {
    if (map.n_bits() != y.n_bits()) {
        throw InputError("affine map and superposition have different bit counts");
    }
    const Superposition input = expand(y, budget);
    Superposition out = Superposition::explicit_terms(y.n_bits());
    for (const auto &[s, coeff] : input.terms()) {
        out.add(map.apply(s), coeff);
    }
    return out;
}

/// Fraction of ticks in [0, T) at which a pattern's untransformed signal is exactly 0.
///
/// A Both-factor W_{i,0} + W_{i,1} vanishes when the two coins differ, so with k free
/// bits the expected fraction is 1 - 2^-k.
inline StatReport zero_fraction(const ReferenceSystem &sys, const Superposition &y, std::uint64_t ticks) {
    if (!y.is_pattern()) {
        throw InputError("zero_fraction is defined for pattern superpositions only");
    }
    if (ticks == 0) {
        throw InputError("zero_fraction needs at least one tick");
    }
    SignalEvaluator eval(sys, InsertionProgram(sys.n_bits()), y);
    std::uint64_t zeros = 0;
    for (ClockTick t = 0; t < ticks; ++t) {
        zeros += eval.at(t) == 0;
    }
    const double p = 1.0 - std::ldexp(1.0, -static_cast<int>(y.free_bits()));
    StatReport report;
    report.add(
        "zero fraction " + y.str(),
        static_cast<double>(zeros) / static_cast<double>(ticks),
        p,
        five_sigma(p * (1.0 - p), ticks),
        ticks);
    return report;
}

/// Time-averaged correlation of Y (through `prog`) with the base product string `probe`.
///
/// By orthogonality the mean tends to the coefficient of `probe` in the transformed
/// superposition; the expected value is read off the oracle applied to the map the
/// program realizes. Tolerance 5*sqrt(A/T), A the sum of squared coefficients.
inline StatReport membership_estimate(
    const ReferenceSystem &sys,
    const InsertionProgram &prog,
    const Superposition &y,
    const BitString &probe,
    std::uint64_t ticks) {
    if (ticks == 0) {
        throw InputError("membership_estimate needs at least one tick");
    }
    if (probe.size() != sys.n_bits()) {
        throw InputError("probe length does not match the reference system");
    }
    double expected = 0;
    double sum_sq = 0;
    if (y.is_pattern() && prog.empty()) {
        expected = static_cast<double>(y.coefficient(probe));
        sum_sq = std::ldexp(1.0, static_cast<int>(y.free_bits()));
    } else {
        const Superposition transformed = oracle_apply(program_to_affine(prog), y);
        expected = static_cast<double>(transformed.coefficient(probe));
        for (const auto &[s, coeff] : transformed.terms()) {
            sum_sq += static_cast<double>(coeff) * static_cast<double>(coeff);
        }
    }

    std::vector<std::uint32_t> probe_codes(probe.size());
    for (std::size_t i = 0; i < probe.size(); ++i) {
        probe_codes[i] = static_cast<std::uint32_t>(2 * i + (probe[i] ? 1 : 0));
    }
    SignalEvaluator eval(sys, prog, y);
    std::int64_t acc = 0;
    for (ClockTick t = 0; t < ticks; ++t) {
        const SignalValue value = eval.at(t);
        RtwSample x = 1;
        for (auto c : probe_codes) {
            x *= eval.base_wires()[c];
        }
        acc += value * x;
    }
    StatReport report;
    report.add(
        "membership " + probe.str(),
        static_cast<double>(acc) / static_cast<double>(ticks),
        expected,
        five_sigma(sum_sq, ticks),
        ticks);
    return report;
}

}  // namespace nbl
