// Copyright 2026 The covercount Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covercount {

// Invalid input: out-of-range vertex, malformed profile, parameter outside
// the documented domain. Plain std::domain_error so callers can catch
// either.
using DomainError = std::domain_error;

/// A bounded exhaustive computation ran out of budget; the answer is unknown
/// (which is different from "false").
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace covercount
