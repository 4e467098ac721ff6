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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nbl/errors.hpp"

namespace nbl {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Serves both as an N-bit product-string label (bit i is the value selected for
/// noise-bit i) and as a row of a GF(2) matrix. Text form lists bit 0 first.
class BitVector {
   public:
    BitVector() = default;

    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
    }

    static BitVector unit(std::size_t n, std::size_t k) {
        BitVector v(n);
        v.set(k, true);
        return v;
    }

    /// Bit i of `value` becomes bit i of the vector. Requires n <= 64.
    static BitVector from_integer(std::size_t n, std::uint64_t value) {
        if (n > 64) {
            throw InputError("BitVector::from_integer supports at most 64 bits");
        }
        BitVector v(n);
        if (n > 0) {
            v.words_[0] = n == 64 ? value : value & ((std::uint64_t{1} << n) - 1);
        }
        return v;
    }

    /// Parses a string over {0,1}; character k is bit k.
    static BitVector from_string(std::string_view text) {
        BitVector v(text.size());
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (text[k] == '1') {
                v.set(k, true);
            } else if (text[k] != '0') {
                throw InputError("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
            }
        }
        return v;
    }

    std::size_t size() const noexcept {
        return n_;
    }

    bool operator[](std::size_t k) const noexcept {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    bool get(std::size_t k) const {
        check_index(k);
        return (*this)[k];
    }

    void set(std::size_t k, bool value) {
        check_index(k);
        std::uint64_t mask = std::uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }

    void flip(std::size_t k) {
        check_index(k);
        words_[k >> 6] ^= std::uint64_t{1} << (k & 63);
    }

    BitVector &operator^=(const BitVector &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }

    /// Inner product over GF(2).
    bool dot(const BitVector &other) const {
        check_same_size(other);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    std::size_t weight() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Indices of set bits, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            }
        }
        return out;
    }

    /// Integer whose bit i is bit i of the vector. Requires size() <= 64.
    std::uint64_t to_integer() const {
        if (n_ > 64) {
            throw InputError("BitVector::to_integer supports at most 64 bits");
        }
        return words_.empty() ? 0 : words_[0];
    }

    std::string str() const {
        std::string out(n_, '0');
        for (std::size_t k = 0; k < n_; ++k) {
            if ((*this)[k]) {
                out[k] = '1';
            }
        }
        return out;
    }

    friend bool operator==(const BitVector &, const BitVector &) = default;

    /// Orders by length, then lexicographically by bit 0, 1, ... (matches str() ordering).
    friend std::strong_ordering operator<=>(const BitVector &a, const BitVector &b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a[k] != b[k]) {
                return a[k] ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

   private:
    void check_index(std::size_t k) const {
        if (k >= n_) {
            throw InputError("bit index " + std::to_string(k) + " out of range for length " + std::to_string(n_));
        }
    }

    void check_same_size(const BitVector &other) const {
        if (other.n_ != n_) {
            throw InputError(
                "bit vector length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// An N-bit product-string label; bit i selects wire (i, bits[i]).
using BitString = BitVector;

}  // namespace nbl
