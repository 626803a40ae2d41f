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

#ifndef MAXCONV_POLY_HPP_
#define MAXCONV_POLY_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxconv/scalar.hpp"

namespace maxconv {

/// Tropical roots with multiplicity, sorted non-increasing; ε roots last.
using RootList = std::vector<MaxScalar>;

/// A formal maxpolynomial a_0 ⊕ a_1 x ⊕ ... ⊕ a_n x^n.
///
/// Coefficients are stored ascending and normalized so that a_n ≠ ε. The
/// null polynomial is the single coefficient ε and has degree kNullDegree.
/// Equality is formal (coefficientwise); see functional_eq for equality of
/// the induced functions.
class Maxpolynomial {
 public:
  static constexpr long kNullDegree = -1;

  Maxpolynomial() : coeffs_(1) {}
  explicit Maxpolynomial(std::vector<MaxScalar> coeffs);

  static Maxpolynomial null() { return Maxpolynomial(); }
  static Maxpolynomial constant(MaxScalar c);
  static Maxpolynomial monomial(MaxScalar c, std::size_t k);

  bool is_null() const noexcept { return coeffs_.back().is_epsilon(); }
  long degree() const noexcept {
    return is_null() ? kNullDegree : static_cast<long>(coeffs_.size()) - 1;
  }

  const std::vector<MaxScalar>& coeffs() const noexcept { return coeffs_; }

  /// a_i, or ε for i beyond the degree.
  MaxScalar coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : MaxScalar();
  }

  /// Length of the initial run a_0 = ... = a_{l-1} = ε.
  std::size_t epsilon_run() const noexcept;

  friend bool operator==(const Maxpolynomial&, const Maxpolynomial&) = default;

 private:
  std::vector<MaxScalar> coeffs_;
};

Maxpolynomial poly_add(const Maxpolynomial& p, const Maxpolynomial& q);
Maxpolynomial poly_mul(const Maxpolynomial& p, const Maxpolynomial& q);

/// The k-th formal derivative: coefficient i of the result is a_{i+k}.
Maxpolynomial derivative(const Maxpolynomial& p, std::size_t k = 1);

/// p̂(x) = max_k (a_k + k·x).
MaxScalar evaluate(const Maxpolynomial& p, const MaxScalar& x);

/// All roots with multiplicity (length = degree), from the upper concave
/// hull of {(i, a_i) : a_i ≠ ε}. Throws DomainError for the null polynomial.
RootList roots(const Maxpolynomial& p);

/// Full canonical form test: concavity of the coefficient sequence.
bool is_fcf(const Maxpolynomial& p);

/// The unique FCF representative of p's functional class (least concave
/// majorant of the coefficients). Throws DomainError for null.
Maxpolynomial concavify(const Maxpolynomial& p);

/// lead ⊙ (x ⊕ r_1) ⊙ ... ⊙ (x ⊕ r_n), formally expanded.
Maxpolynomial from_roots(const MaxScalar& lead, const RootList& roots);

/// (p q)^{(k)}, the k-th max convolution.
Maxpolynomial max_convolve(const Maxpolynomial& p, const Maxpolynomial& q,
                           std::size_t k);

/// Coefficientwise ⊙ of two polynomials of equal degree.
Maxpolynomial hadamard_poly(const Maxpolynomial& p, const Maxpolynomial& q);

bool functional_eq(const Maxpolynomial& p, const Maxpolynomial& q);

/// p̂ ≤ q̂ everywhere, decided on concavified coefficients.
bool functional_le(const Maxpolynomial& p, const Maxpolynomial& q);

// Text forms. The list form is ascending and comma separated, e.g.
// "8, 7, 5, 3, 0" for x^4 (+) 3x^3 (+) 5x^2 (+) 7x (+) 8.

std::string to_string(const Maxpolynomial& p);
std::string to_string(const RootList& roots);

/// "x^4 (+) 3x^3 (+) 5x^2 (+) 7x (+) 8"
std::string format_monomial(const Maxpolynomial& p);

/// "(x (+) 3) (x (+) 2)^2 (x (+) 1)" when p is FCF, otherwise nullopt.
std::optional<std::string> format_factored(const Maxpolynomial& p);

/// Parses the list form. Lines starting with '#' are ignored and only the
/// first remaining non-blank line is read, so printed reports re-parse.
Maxpolynomial parse_poly(std::string_view text);

/// Reads "(4, 0)" as written by to_string(RootList).
RootList parse_roots(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Maxpolynomial& p);

}  // namespace maxconv

#endif  // MAXCONV_POLY_HPP_
