// Copyright 2026 The digifix Authors.
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

#include <stdexcept>
#include <string>

namespace digifix {

/// Raised when an argument violates an operation's precondition
/// (dimension mismatch, u out of range, empty image, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a window-map operation needs a value outside the window.
class WindowEscape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table-backed scalar family was evaluated at an argument it does not list.
class OffGrid : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace digifix
