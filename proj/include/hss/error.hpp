/*
 * Copyright 2026 The hss Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace hss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A participant set does not satisfy the access structure, or a subset is
/// not a key of the control area.
class Unauthorized : public Error {
 public:
  using Error::Error;
};

/// Verification was requested but the public area carries no commitment
/// for the participant. Distinct from a failed verification.
class CommitmentsUnavailable : public Error {
 public:
  using Error::Error;
};

/// A randomized search ran out of its compression-call budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Share and control area disagree on version or scheme binding.
class VersionMismatch : public Error {
 public:
  using Error::Error;
};

/// A persisted file does not match its schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace hss
