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
#include <stdexcept>
#include <string>

namespace nbl {

/// Invalid argument to an operation (out-of-range index, mismatched sizes, wrong variant).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested expansion or allocation exceeds a configured budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration that cannot be honored without losing exactness (e.g. signal overflow).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based; 0 means the input has no line structure.
class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t line, const std::string &message)
        : std::invalid_argument(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {
    }

    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace nbl
