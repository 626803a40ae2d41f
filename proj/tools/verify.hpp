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

#ifndef MAXCONV_TOOLS_VERIFY_HPP_
#define MAXCONV_TOOLS_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxconv/matrix.hpp"

namespace maxconv::verify {

/// One checked instance: the matrices it was built from and the two sides
/// (or whatever quantities) that were compared.
struct Outcome {
  bool pass = true;
  std::vector<std::pair<std::string, MaxMatrix>> matrices;
  std::vector<std::pair<std::string, std::string>> sides;
  std::string note;
};

struct Options {
  std::size_t n = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Replace the generator with the fixed symmetric non-dominant pair.
  bool fixed_pair = false;
  /// Skip the hypothesis so that violations can show up.
  bool negative_control = false;
  /// Enumeration order cap; 0 keeps the library default.
  std::size_t cap = 0;
};

struct Report {
  std::string theorem;
  Options options;
  std::size_t passed = 0;
  /// Lowest trial index that failed, with its instance.
  std::optional<std::pair<std::size_t, Outcome>> first_failure;

  bool all_passed() const { return passed == options.trials; }
};

/// Names accepted by run().
const std::vector<std::string>& theorem_names();

/// Throws DomainError for an unknown name.
Report run(const std::string& theorem, const Options& opts);

void print_report(const Report& report, std::ostream& out);

// Single-instance checks, shared with the acceptance suite.
Outcome check_additive(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap = 0);
Outcome check_pd(const MaxMatrix& a, const MaxMatrix& b, bool require_dominance,
                 std::size_t cap = 0);
Outcome check_max_row(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap = 0);
Outcome check_hadamard(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap = 0);
Outcome check_mult(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap = 0);
Outcome check_fcf_concavity(const MaxMatrix& a);
Outcome check_inequalities(const std::vector<MaxMatrix>& ms);

}  // namespace maxconv::verify

#endif  // MAXCONV_TOOLS_VERIFY_HPP_
