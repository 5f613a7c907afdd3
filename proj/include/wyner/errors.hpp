// Copyright 2026 The wynerdof Authors
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

#ifndef WYNER_ERRORS_HPP
#define WYNER_ERRORS_HPP

#include <stdexcept>

namespace wyner {

// The CLI maps each family onto its own exit code.

/// Malformed input: bad indices, unparsable files, invalid parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation was requested beyond its configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver produced a certificate that failed independent re-verification.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wyner

#endif  // WYNER_ERRORS_HPP
