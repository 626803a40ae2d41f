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

#ifndef MAXCONV_SCALAR_HPP_
#define MAXCONV_SCALAR_HPP_

// Exact elements of the max-plus semiring R ∪ {-inf}.
//
// a ⊕ b = max(a, b), a ⊙ b = a + b. The zero ε = -inf is a tagged state,
// never a floating-point sentinel; finite values are arbitrary-precision
// rationals.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace maxconv {

using Rational = mpq_class;

class MaxScalar {
 public:
  /// Default-constructed scalars are ε.
  MaxScalar() = default;

  MaxScalar(Rational value) : finite_(true), value_(std::move(value)) {
    value_.canonicalize();
  }

  template <std::integral I>
  MaxScalar(I value) : finite_(true), value_(static_cast<long>(value)) {}

  static MaxScalar epsilon() { return MaxScalar(); }
  static MaxScalar one() { return MaxScalar(0); }

  bool is_epsilon() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }

  /// The rational payload. Throws DomainError for ε.
  const Rational& value() const;

  friend bool operator==(const MaxScalar& a, const MaxScalar& b);
  friend std::strong_ordering operator<=>(const MaxScalar& a,
                                          const MaxScalar& b);

 private:
  bool finite_ = false;
  Rational value_;
};

/// max(a, b).
MaxScalar oplus(const MaxScalar& a, const MaxScalar& b);

/// a + b; ε absorbs.
MaxScalar odot(const MaxScalar& a, const MaxScalar& b);

/// t·a in standard arithmetic (the scalar Hadamard power). Requires t > 0.
MaxScalar scale(const MaxScalar& a, const Rational& t);

/// k·a for a natural number k with 0·a = 0 (the max-plus power a^k).
MaxScalar power(const MaxScalar& a, std::size_t k);

/// a - b with ε - ε = ε and ε - finite = ε. A finite value minus ε has no
/// representation in the carrier and throws DomainError.
MaxScalar minus(const MaxScalar& a, const MaxScalar& b);

/// Canonical token: "-inf", an integer, or a reduced "p/q".
std::string to_string(const MaxScalar& a);

/// Accepts "-inf", an optionally signed decimal ("3", "-1.25") or a
/// fraction "p/q" with q > 0. Throws ParseError.
MaxScalar parse_scalar(std::string_view token);

std::ostream& operator<<(std::ostream& os, const MaxScalar& a);

}  // namespace maxconv

#endif  // MAXCONV_SCALAR_HPP_
