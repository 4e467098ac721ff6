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
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace nbl {

struct StatEntry {
    std::string name;
    double estimate = 0;
    double expected = 0;
    double tolerance = 0;
    std::uint64_t sample_count = 0;

    bool pass() const noexcept {
        return std::abs(estimate - expected) <= tolerance;
    }
};

/// Named statistical estimates, each judged against its own tolerance band.
struct StatReport {
    std::vector<StatEntry> entries;

    void add(std::string name, double estimate, double expected, double tolerance, std::uint64_t samples) {
        entries.push_back(StatEntry{std::move(name), estimate, expected, tolerance, samples});
    }

    bool all_pass() const noexcept {
        return std::all_of(entries.begin(), entries.end(), [](const StatEntry &e) { return e.pass(); });
    }

    const StatEntry *find(const std::string &name) const {
        for (const auto &e : entries) {
            if (e.name == name) {
                return &e;
            }
        }
        return nullptr;
    }

    StatReport &operator+=(const StatReport &other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
        return *this;
    }

    std::string str() const {
        std::ostringstream out;
        out << std::setprecision(6);
        for (const auto &e : entries) {
            out << (e.pass() ? "PASS " : "FAIL ") << e.name << ": estimate=" << e.estimate
                << " expected=" << e.expected << " tolerance=" << e.tolerance << " samples=" << e.sample_count
                << "\n";
        }
        return out.str();
    }
};

/// 5-sigma band for the mean of T independent samples of variance `variance`.
inline double five_sigma(double variance, std::uint64_t samples) {
    return 5.0 * std::sqrt(variance / static_cast<double>(samples));
}

}  // namespace nbl
