// Copyright 2026 The Isotone Authors. All Rights Reserved.
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

#ifndef ISOTONE_ERRORS_H_
#define ISOTONE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace isotone {

// Raised when an argument violates an operation's precondition.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when reference data disagree with what the library can reproduce,
// e.g. a pair-count table that no scheme labeling generates.
class DataInconsistencyError : public std::runtime_error {
 public:
  explicit DataInconsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace isotone

#endif  // ISOTONE_ERRORS_H_
