// Copyright 2026 The rddkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rddkit {

// Raised when an input file (XML annotation, detection CSV, feature-map grid)
// cannot be parsed. `diagnostics()` holds per-row/per-element messages; what()
// is a one-line summary.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& summary,
                      std::vector<std::string> diagnostics = {})
      : std::runtime_error(summary), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// An invariant that should hold by construction was observed broken.
// The CLI maps this to its own exit code so pipelines can tell input
// problems from library bugs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void internal_check(bool condition, const char* message) {
  if (!condition) throw InternalError(message);
}

}  // namespace rddkit
