// Copyright 2026 The Authors.
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

#ifndef WILDMAT_CONFIG_HPP
#define WILDMAT_CONFIG_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wildmat {

// Thrown when an exhaustive operation would exceed the configured ground
// bound. The CLI maps this to exit code 1.
class GroundTooLarge : public std::runtime_error {
 public:
  explicit GroundTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations carry the condition name used in reports
// (e.g. "E is a base").
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input files / inconsistent in-memory objects.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Ground-set bound for exhaustive enumeration. Overridable with the
// MATROID_MAX_GROUND environment variable; hard cap 25 (masks are 32-bit).
inline int max_ground() {
  static const int bound = [] {
    if (const char* env = std::getenv("MATROID_MAX_GROUND")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 25) return v;
    }
    return 20;
  }();
  return bound;
}

// Pairwise matroid union stays at its own enumeration bound.
inline constexpr int kUnionMaxGround = 16;

}  // namespace wildmat

#endif  // WILDMAT_CONFIG_HPP
