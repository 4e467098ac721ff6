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

#include <cstdint>

namespace nbl {

/// SplitMix64 output finalizer (Steele, Lea, Flood; constants from Vigna's splitmix64.c).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: a pure function of (seed, stream, counter).
///
/// Each stream behaves like an independent SplitMix64 sequence whose starting state
/// is derived from (seed, stream); word k of the stream is the k-th output. Any word
/// can be computed without computing its predecessors.
class KeyedRng {
   public:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    explicit constexpr KeyedRng(std::uint64_t seed) noexcept : seed_(seed) {
    }

    constexpr std::uint64_t seed() const noexcept {
        return seed_;
    }

    constexpr std::uint64_t stream_key(std::uint64_t stream) const noexcept {
        return splitmix64_mix(splitmix64_mix(seed_ ^ 0x6a09e667f3bcc909ULL) ^ splitmix64_mix(stream + kGolden));
    }

    constexpr std::uint64_t word(std::uint64_t stream, std::uint64_t counter) const noexcept {
        return splitmix64_mix(stream_key(stream) + (counter + 1) * kGolden);
    }

   private:
    std::uint64_t seed_;
};

}  // namespace nbl
