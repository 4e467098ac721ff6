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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "nbl/affine_gf2.hpp"
#include "nbl/errors.hpp"

namespace nbl {

/// Reference wire W_{bit_index, bit_value}.
struct WireId {
    std::size_t bit_index = 0;
    int bit_value = 0;

    /// Dense index 2*bit_index + bit_value.
    constexpr std::size_t code() const noexcept {
        return 2 * bit_index + static_cast<std::size_t>(bit_value);
    }

    static constexpr WireId from_code(std::size_t code) noexcept {
        return WireId{code / 2, static_cast<int>(code % 2)};
    }

    friend constexpr auto operator<=>(const WireId &, const WireId &) = default;
};

inline std::string to_string(const WireId &w) {
    return "(" + std::to_string(w.bit_index) + "," + std::to_string(w.bit_value) + ")";
}

/// The NOT operator of bit `target`, multiplied onto reference wire `host`.
struct Insertion {
    WireId host;
    std::size_t target = 0;

    friend constexpr auto operator<=>(const Insertion &, const Insertion &) = default;
};

inline std::string to_string(const Insertion &ins) {
    return "t" + std::to_string(ins.target) + "@" + to_string(ins.host);
}

/// A set of NOT-operator insertions on the reference wires.
///
/// Two insertions of the same target on the same wire multiply to +1 and vanish, so
/// the set is kept canonical: adding an existing insertion removes it.
class InsertionProgram {
   public:
    InsertionProgram() = default;

    explicit InsertionProgram(std::size_t n_bits) : n_bits_(n_bits) {
    }

    InsertionProgram(std::size_t n_bits, std::initializer_list<Insertion> insertions) : n_bits_(n_bits) {
        for (const auto &ins : insertions) {
            toggle(ins);
        }
    }

    std::size_t n_bits() const noexcept {
        return n_bits_;
    }

    /// Adds `ins`, or removes it if already present. Returns true if it is present afterwards.
    bool toggle(const Insertion &ins) {
        validate(ins);
        auto [it, inserted] = insertions_.insert(ins);
        if (!inserted) {
            insertions_.erase(it);
        }
        return inserted;
    }

    bool contains(const Insertion &ins) const {
        return insertions_.count(ins) != 0;
    }

    /// Sorted by (host bit, host value, target).
    const std::set<Insertion> &insertions() const noexcept {
        return insertions_;
    }

    bool empty() const noexcept {
        return insertions_.empty();
    }

    /// M, the number of NOT hardware elements.
    std::size_t size() const noexcept {
        return insertions_.size();
    }

    std::vector<std::size_t> targets_on(const WireId &wire) const {
        std::vector<std::size_t> out;
        for (auto it = insertions_.lower_bound(Insertion{wire, 0});
             it != insertions_.end() && it->host == wire;
             ++it) {
            out.push_back(it->target);
        }
        return out;
    }

    /// Symmetric difference: the program realizing both sets of flips.
    InsertionProgram &operator^=(const InsertionProgram &other) {
        if (other.n_bits_ != n_bits_) {
            throw InputError("cannot merge insertion programs over different bit counts");
        }
        for (const auto &ins : other.insertions_) {
            toggle(ins);
        }
        return *this;
    }

    friend bool operator==(const InsertionProgram &, const InsertionProgram &) = default;

    std::string str() const {
        std::string out = "{";
        for (const auto &ins : insertions_) {
            if (out.size() > 1) {
                out += ", ";
            }
            out += to_string(ins);
        }
        return out + "}";
    }

   private:
    void validate(const Insertion &ins) const {
        if (ins.host.bit_index >= n_bits_ || ins.target >= n_bits_) {
            throw InputError(
                "insertion " + to_string(ins) + " out of range for " + std::to_string(n_bits_) + " bits");
        }
        if (ins.host.bit_value != 0 && ins.host.bit_value != 1) {
            throw InputError("wire bit value must be 0 or 1");
        }
    }

    std::size_t n_bits_ = 0;
    std::set<Insertion> insertions_;
};

/// Reads back the affine map an insertion program applies to product-string labels.
inline AffineMapGF2 program_to_affine(const InsertionProgram &prog) {
    AffineMapGF2 map = AffineMapGF2::identity(prog.n_bits());
    for (const auto &ins : prog.insertions()) {
        map.row(ins.target).flip(ins.host.bit_index);
        if (ins.host.bit_value == 0) {
            map.constant().flip(ins.target);
        }
    }
    return map;
}

}  // namespace nbl
