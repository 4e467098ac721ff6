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

#include "nbl/bit_vector.hpp"

#include <random>

#include "gtest/gtest.h"
#include "nbl/affine_gf2.hpp"

using namespace nbl;

TEST(BitVector, string_round_trip_and_indexing) {
    auto v = BitVector::from_string("0110");
    ASSERT_EQ(v.size(), 4u);
    ASSERT_FALSE(v[0]);
    ASSERT_TRUE(v[1]);
    ASSERT_TRUE(v[2]);
    ASSERT_FALSE(v[3]);
    ASSERT_EQ(v.str(), "0110");
    ASSERT_EQ(v.to_integer(), 0b0110u);
    ASSERT_EQ(BitVector::from_integer(4, 0b0110), v);
    ASSERT_THROW(BitVector::from_string("012"), InputError);
    ASSERT_THROW(v.get(4), InputError);
}

TEST(BitVector, gf2_arithmetic) {
    auto a = BitVector::from_string("1101");
    auto b = BitVector::from_string("1011");
    ASSERT_EQ((a ^ b).str(), "0110");
    ASSERT_EQ(a.weight(), 3u);
    ASSERT_FALSE(a.dot(b));
}

TEST(BitVector, dot_is_parity_of_overlap) {
    auto a = BitVector::from_string("1101");
    ASSERT_FALSE(a.dot(BitVector::from_string("1001")));
    ASSERT_TRUE(a.dot(BitVector::from_string("1000")));
    ASSERT_THROW(a.dot(BitVector(3)), InputError);
}

TEST(BitVector, multiword_support_and_ordering) {
    BitVector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    ASSERT_EQ(v.support(), (std::vector<std::size_t>{0, 64, 129}));
    ASSERT_EQ(v.weight(), 3u);
    v.flip(64);
    ASSERT_EQ(v.weight(), 2u);
    ASSERT_THROW(v.to_integer(), InputError);

    // Ordering agrees with the text form.
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        auto x = BitVector::from_integer(9, rng() & 511);
        auto y = BitVector::from_integer(9, rng() & 511);
        ASSERT_EQ(x < y, x.str() < y.str()) << x.str() << " " << y.str();
    }
}

TEST(AffineMapGF2, rank_and_composition) {
    auto id = AffineMapGF2::identity(3);
    ASSERT_TRUE(id.is_invertible());
    AffineMapGF2 singular(
        {BitVector::from_string("110"), BitVector::from_string("110"), BitVector::from_string("001")},
        BitVector(3));
    ASSERT_EQ(singular.rank(), 2u);
    ASSERT_FALSE(singular.is_invertible());

    AffineMapGF2 f({BitVector::from_string("100"), BitVector::from_string("110"), BitVector::from_string("001")},
                   BitVector::from_string("001"));
    AffineMapGF2 g({BitVector::from_string("101"), BitVector::from_string("010"), BitVector::from_string("001")},
                   BitVector::from_string("100"));
    auto gf = g.after(f);
    for (std::uint64_t v = 0; v < 8; ++v) {
        auto s = BitVector::from_integer(3, v);
        ASSERT_EQ(gf.apply(s), g.apply(f.apply(s)));
    }
}
