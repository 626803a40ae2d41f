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

#include "maxconv/poly.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "maxconv/errors.hpp"

namespace maxconv {

Maxpolynomial::Maxpolynomial(std::vector<MaxScalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_epsilon()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back();
}

Maxpolynomial Maxpolynomial::constant(MaxScalar c) {
  return Maxpolynomial(std::vector<MaxScalar>{std::move(c)});
}

Maxpolynomial Maxpolynomial::monomial(MaxScalar c, std::size_t k) {
  std::vector<MaxScalar> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return Maxpolynomial(std::move(coeffs));
}

std::size_t Maxpolynomial::epsilon_run() const noexcept {
  std::size_t l = 0;
  while (l < coeffs_.size() && coeffs_[l].is_epsilon()) ++l;
  return l;
}

Maxpolynomial poly_add(const Maxpolynomial& p, const Maxpolynomial& q) {
  const auto n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<MaxScalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = oplus(p.coeff(i), q.coeff(i));
  return Maxpolynomial(std::move(c));
}

Maxpolynomial poly_mul(const Maxpolynomial& p, const Maxpolynomial& q) {
  if (p.is_null() || q.is_null()) return Maxpolynomial::null();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<MaxScalar> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_epsilon()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_epsilon()) continue;
      MaxScalar term = odot(a[i], b[j]);
      if (c[i + j] < term) c[i + j] = std::move(term);
    }
  }
  return Maxpolynomial(std::move(c));
}

Maxpolynomial derivative(const Maxpolynomial& p, std::size_t k) {
  const auto& a = p.coeffs();
  if (k >= a.size()) return Maxpolynomial::null();
  return Maxpolynomial(std::vector<MaxScalar>(a.begin() + k, a.end()));
}

MaxScalar evaluate(const Maxpolynomial& p, const MaxScalar& x) {
  MaxScalar best;
  const auto& a = p.coeffs();
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = oplus(best, odot(a[k], power(x, k)));
  }
  return best;
}

namespace {

// Indices of the vertices of the upper concave hull of {(i, a_i) : a_i ≠ ε},
// left to right. Collinear points are not vertices.
std::vector<std::size_t> upper_hull(const std::vector<MaxScalar>& a) {
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_epsilon()) continue;
    while (hull.size() >= 2) {
      const auto i0 = hull[hull.size() - 2];
      const auto i1 = hull.back();
      const Rational& y0 = a[i0].value();
      const Rational lhs = (a[i1].value() - y0) * static_cast<long>(i - i0);
      const Rational rhs = (a[i].value() - y0) * static_cast<long>(i1 - i0);
      if (lhs <= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  return hull;
}

void require_nonnull(const Maxpolynomial& p, const char* what) {
  if (p.is_null()) {
    throw DomainError(std::string(what) + " of the null polynomial");
  }
}

}  // namespace

RootList roots(const Maxpolynomial& p) {
  require_nonnull(p, "roots");
  const auto& a = p.coeffs();
  const auto hull = upper_hull(a);
  RootList out;
  out.reserve(a.size() - 1);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto i = hull[s];
    const auto j = hull[s + 1];
    const long width = static_cast<long>(j - i);
    MaxScalar r(Rational((a[i].value() - a[j].value()) / width));
    for (long m = 0; m < width; ++m) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.resize(a.size() - 1);  // pads with ε for the initial ε-run
  return out;
}

bool is_fcf(const Maxpolynomial& p) {
  const auto& a = p.coeffs();
  const auto l = p.epsilon_run();
  if (l == a.size()) return true;
  for (std::size_t i = l; i < a.size(); ++i) {
    if (a[i].is_epsilon()) return false;
  }
  for (std::size_t i = l + 1; i + 1 < a.size(); ++i) {
    if (2 * a[i].value() < a[i - 1].value() + a[i + 1].value()) return false;
  }
  return true;
}

Maxpolynomial concavify(const Maxpolynomial& p) {
  require_nonnull(p, "concavify");
  const auto& a = p.coeffs();
  const auto hull = upper_hull(a);
  std::vector<MaxScalar> c(a.size());
  c[hull.front()] = a[hull.front()];
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto i = hull[s];
    const auto j = hull[s + 1];
    const Rational slope = (a[j].value() - a[i].value()) / static_cast<long>(j - i);
    for (auto t = i + 1; t <= j; ++t) {
      c[t] = MaxScalar(Rational(a[i].value() + slope * static_cast<long>(t - i)));
    }
  }
  return Maxpolynomial(std::move(c));
}

Maxpolynomial from_roots(const MaxScalar& lead, const RootList& rs) {
  if (lead.is_epsilon()) throw DomainError("from_roots: leading coefficient is -inf");
  Maxpolynomial out = Maxpolynomial::constant(lead);
  for (const auto& r : rs) {
    out = poly_mul(out, Maxpolynomial(std::vector<MaxScalar>{r, MaxScalar::one()}));
  }
  return out;
}

Maxpolynomial max_convolve(const Maxpolynomial& p, const Maxpolynomial& q,
                           std::size_t k) {
  return derivative(poly_mul(p, q), k);
}

Maxpolynomial hadamard_poly(const Maxpolynomial& p, const Maxpolynomial& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("hadamard product needs equal degrees (got " +
                      std::to_string(p.degree()) + " and " +
                      std::to_string(q.degree()) + ")");
  }
  const auto n = p.coeffs().size();
  std::vector<MaxScalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = odot(p.coeffs()[i], q.coeffs()[i]);
  return Maxpolynomial(std::move(c));
}

bool functional_eq(const Maxpolynomial& p, const Maxpolynomial& q) {
  if (p.is_null() || q.is_null()) return p.is_null() == q.is_null();
  return concavify(p) == concavify(q);
}

bool functional_le(const Maxpolynomial& p, const Maxpolynomial& q) {
  if (p.is_null()) return true;
  if (q.is_null()) return false;
  const auto cp = concavify(p);
  const auto cq = concavify(q);
  const auto n = std::max(cp.coeffs().size(), cq.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (cp.coeff(i) > cq.coeff(i)) return false;
  }
  return true;
}

std::string to_string(const Maxpolynomial& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ", ";
    out += to_string(c);
  }
  return out;
}

std::string to_string(const RootList& rs) {
  std::string out = "(";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(rs[i]);
  }
  return out + ")";
}

namespace {

std::string power_of_x(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

// Coefficient prefix of a monomial of positive degree.
std::string coefficient_prefix(const MaxScalar& c) {
  if (c == MaxScalar::one()) return "";
  const auto& v = c.value();
  if (sgn(v) < 0 || v.get_den() != 1) return "(" + to_string(c) + ")";
  return to_string(c);
}

}  // namespace

std::string format_monomial(const Maxpolynomial& p) {
  if (p.is_null()) return "-inf";
  std::string out;
  const auto& a = p.coeffs();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k].is_epsilon()) continue;
    if (!out.empty()) out += " (+) ";
    out += k == 0 ? to_string(a[k]) : coefficient_prefix(a[k]) + power_of_x(k);
  }
  return out;
}

std::optional<std::string> format_factored(const Maxpolynomial& p) {
  if (!is_fcf(p)) return std::nullopt;
  if (p.degree() <= 0) return to_string(p.coeffs().front());
  const auto rs = roots(p);
  std::vector<std::string> parts;
  const auto& lead = p.coeffs().back();
  if (lead != MaxScalar::one()) parts.push_back("(" + to_string(lead) + ")");
  for (std::size_t i = 0; i < rs.size();) {
    std::size_t j = i;
    while (j < rs.size() && rs[j] == rs[i]) ++j;
    const auto mult = j - i;
    if (rs[i].is_epsilon()) {
      parts.push_back(power_of_x(mult));
    } else {
      std::string f = "(x (+) " + to_string(rs[i]) + ")";
      if (mult > 1) f += "^" + std::to_string(mult);
      parts.push_back(std::move(f));
    }
    i = j;
  }
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

namespace {

std::string first_content_line(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string candidate;
  while (std::getline(in, candidate)) {
    const auto first = candidate.find_first_not_of(" \t\r");
    if (first == std::string::npos || candidate[first] == '#') continue;
    return candidate;
  }
  return {};
}

std::vector<MaxScalar> split_scalars(std::string_view line) {
  std::vector<MaxScalar> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(parse_scalar(line.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Maxpolynomial parse_poly(std::string_view text) {
  const std::string line = first_content_line(text);
  if (line.empty()) throw ParseError("empty polynomial");
  return Maxpolynomial(split_scalars(line));
}

RootList parse_roots(std::string_view text) {
  std::string line = first_content_line(text);
  const auto open = line.find_first_not_of(" \t");
  const auto close = line.find_last_not_of(" \t\r");
  if (open == std::string::npos || line[open] != '(' || line[close] != ')') {
    throw ParseError("root list must be parenthesised: " + line);
  }
  line = line.substr(open + 1, close - open - 1);
  if (line.find_first_not_of(" \t") == std::string::npos) return {};
  RootList out = split_scalars(line);
  if (!std::is_sorted(out.begin(), out.end(), std::greater<>())) {
    throw ParseError("roots must be non-increasing");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Maxpolynomial& p) {
  return os << to_string(p);
}

}  // namespace maxconv
