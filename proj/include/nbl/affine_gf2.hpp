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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nbl/bit_vector.hpp"
#include "nbl/errors.hpp"

namespace nbl {

/// s -> L*s xor c over GF(2). Row t of L (together with c[t]) gives output bit t as
/// an affine function of the input bits.
class AffineMapGF2 {
   public:
    AffineMapGF2() = default;

    static AffineMapGF2 identity(std::size_t n) {
        AffineMapGF2 m;
        m.n_ = n;
        m.constant_ = BitVector(n);
        m.rows_.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            m.rows_.push_back(BitVector::unit(n, k));
        }
        return m;
    }

    AffineMapGF2(std::vector<BitVector> rows, BitVector constant) : n_(rows.size()), rows_(std::move(rows)), constant_(std::move(constant)) {
        if (constant_.size() != n_) {
            throw InputError("affine constant length does not match the number of rows");
        }
        for (const auto &r : rows_) {
            if (r.size() != n_) {
                throw InputError("affine map rows must have length " + std::to_string(n_));
            }
        }
    }

    std::size_t n_bits() const noexcept {
        return n_;
    }

    const BitVector &row(std::size_t t) const {
        return rows_.at(t);
    }

    BitVector &row(std::size_t t) {
        return rows_.at(t);
    }

    const std::vector<BitVector> &rows() const noexcept {
        return rows_;
    }

    const BitVector &constant() const noexcept {
        return constant_;
    }

    BitVector &constant() noexcept {
        return constant_;
    }

    bool linear_entry(std::size_t row, std::size_t col) const {
        return rows_.at(row).get(col);
    }

    BitVector apply(const BitVector &s) const {
        if (s.size() != n_) {
            throw InputError(
                "bit string of length " + std::to_string(s.size()) + " applied to a " + std::to_string(n_) +
                "-bit map");
        }
        BitVector out(n_);
        for (std::size_t t = 0; t < n_; ++t) {
            if (rows_[t].dot(s) != constant_[t]) {
                out.set(t, true);
            }
        }
        return out;
    }

    /// The map x -> this(first(x)).
    AffineMapGF2 after(const AffineMapGF2 &first) const {
        if (first.n_ != n_) {
            throw InputError("cannot compose affine maps of different sizes");
        }
        AffineMapGF2 out;
        out.n_ = n_;
        out.constant_ = constant_;
        out.rows_.assign(n_, BitVector(n_));
        for (std::size_t t = 0; t < n_; ++t) {
            for (auto k : rows_[t].support()) {
                out.rows_[t] ^= first.rows_[k];
                if (first.constant_[k]) {
                    out.constant_.flip(t);
                }
            }
        }
        return out;
    }

    std::size_t rank() const {
        std::vector<BitVector> m = rows_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
            std::size_t pivot = rank;
            while (pivot < n_ && !m[pivot][col]) {
                ++pivot;
            }
            if (pivot == n_) {
                continue;
            }
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = 0; r < n_; ++r) {
                if (r != rank && m[r][col]) {
                    m[r] ^= m[rank];
                }
            }
            ++rank;
        }
        return rank;
    }

    bool is_invertible() const {
        return rank() == n_;
    }

    bool is_linear() const noexcept {
        return constant_.none();
    }

    friend bool operator==(const AffineMapGF2 &, const AffineMapGF2 &) = default;

    /// One line per output bit, e.g. "b2' = b0 ^ b1 ^ b2 ^ 1".
    std::string str() const {
        std::string out;
        for (std::size_t t = 0; t < n_; ++t) {
            out += "b" + std::to_string(t) + "' =";
            bool first = true;
            for (auto k : rows_[t].support()) {
                out += (first ? " b" : " ^ b") + std::to_string(k);
                first = false;
            }
            if (constant_[t]) {
                out += first ? " 1" : " ^ 1";
            } else if (first) {
                out += " 0";
            }
            out += "\n";
        }
        return out;
    }

   private:
    std::size_t n_ = 0;
    std::vector<BitVector> rows_;
    BitVector constant_;
};

}  // namespace nbl
