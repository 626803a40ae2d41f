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

#include "maxconv/scalar.hpp"

#include <cctype>
#include <ostream>

#include "maxconv/errors.hpp"

namespace maxconv {

const Rational& MaxScalar::value() const {
  if (!finite_) throw DomainError("value() of -inf");
  return value_;
}

bool operator==(const MaxScalar& a, const MaxScalar& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const MaxScalar& a, const MaxScalar& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

MaxScalar oplus(const MaxScalar& a, const MaxScalar& b) {
  return a < b ? b : a;
}

MaxScalar odot(const MaxScalar& a, const MaxScalar& b) {
  if (a.is_epsilon() || b.is_epsilon()) return MaxScalar();
  return MaxScalar(Rational(a.value() + b.value()));
}

MaxScalar scale(const MaxScalar& a, const Rational& t) {
  if (sgn(t) <= 0) throw DomainError("scale factor must be positive");
  if (a.is_epsilon()) return a;
  return MaxScalar(Rational(a.value() * t));
}

MaxScalar power(const MaxScalar& a, std::size_t k) {
  if (k == 0) return MaxScalar::one();
  if (a.is_epsilon()) return a;
  return MaxScalar(Rational(a.value() * static_cast<unsigned long>(k)));
}

MaxScalar minus(const MaxScalar& a, const MaxScalar& b) {
  if (a.is_epsilon()) return a;
  if (b.is_epsilon()) throw DomainError("finite value minus -inf");
  return MaxScalar(Rational(a.value() - b.value()));
}

std::string to_string(const MaxScalar& a) {
  if (a.is_epsilon()) return "-inf";
  return a.value().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw ParseError("invalid scalar token '" + std::string(token) + "'");
}

}  // namespace

MaxScalar parse_scalar(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
    token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
    token.remove_suffix(1);
  if (token == "-inf") return MaxScalar();

  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_token(token);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_token(token);
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_token(token);
    mpz_class scale_factor;
    mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(std::string(whole) + std::string(frac), 10),
                     scale_factor);
  } else {
    if (!all_digits(body)) bad_token(token);
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return MaxScalar(std::move(value));
}

std::ostream& operator<<(std::ostream& os, const MaxScalar& a) {
  return os << to_string(a);
}

}  // namespace maxconv
