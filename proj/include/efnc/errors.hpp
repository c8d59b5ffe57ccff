// Copyright 2026 The efnc Authors
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

namespace efnc {

// Malformed input: bad graph edges, out-of-range strategy members, invalid
// configuration values.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run beyond its enumeration guard.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(std::string guard, std::size_t size, std::size_t limit)
      : std::runtime_error(guard + " exceeded: size " + std::to_string(size) +
                           " > limit " + std::to_string(limit)),
        guard_(std::move(guard)),
        size_(size),
        limit_(limit) {}

  const std::string& guard() const { return guard_; }
  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string guard_;
  std::size_t size_;
  std::size_t limit_;
};

// A closed-form evaluator was called outside the domain where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested operation is incompatible with the configured policy or mode
// (e.g. per-job separable optimum under full-combined transit).
class PolicyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoEquilibriumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace efnc
