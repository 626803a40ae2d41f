// Copyright 2026 The maxconv Authors
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

#ifndef MAXCONV_ERRORS_HPP_
#define MAXCONV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace maxconv {

/// Malformed text input (scalar tokens, polynomial lists, matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its domain: shape mismatch, null
/// polynomial where roots are required, unmet theorem hypothesis, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxconv

#endif  // MAXCONV_ERRORS_HPP_
