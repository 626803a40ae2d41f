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

#include "maxconv/spectra.hpp"

#include <algorithm>

#include "maxconv/errors.hpp"

namespace maxconv {
namespace {

// Coefficient of x^{n-k} is profile[k].
Maxpolynomial from_minor_profile(const std::vector<MaxScalar>& profile) {
  return Maxpolynomial(std::vector<MaxScalar>(profile.rbegin(), profile.rend()));
}

void require_square(const MaxMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw DomainError(std::string(what) + " needs a square matrix");
  }
}

}  // namespace

Maxpolynomial char_poly(const MaxMatrix& a, std::size_t cap) {
  require_square(a, "char_poly");
  return from_minor_profile(delta_profile(a, cap));
}

Maxpolynomial full_char_poly(const MaxMatrix& a) {
  require_square(a, "full_char_poly");
  return from_minor_profile(assignment_profile(a));
}

MaxMatrix gram(const MaxMatrix& a) { return mat_mul(transpose(a), a); }

MaxMatrix hat(const MaxMatrix& a) { return mat_hpow(gram(a), Rational(1, 2)); }

std::vector<MaxScalar> column_maxima(const MaxMatrix& a) {
  std::vector<MaxScalar> m(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (m[j] < a(i, j)) m[j] = a(i, j);
    }
  }
  return m;
}

Maxpolynomial gram_char_poly(const MaxMatrix& a) {
  return from_roots(MaxScalar::one(), column_maxima(a));
}

MaxScalar gram_permanent(const MaxMatrix& a) {
  require_square(a, "gram_permanent");
  return permanent(gram(a));
}

MaxScalar inner_product(const std::vector<MaxScalar>& u,
                        const std::vector<MaxScalar>& v) {
  if (u.size() != v.size()) throw DomainError("inner_product: length mismatch");
  MaxScalar best;
  for (std::size_t i = 0; i < u.size(); ++i) best = oplus(best, odot(u[i], v[i]));
  return best;
}

std::optional<std::size_t> dominance_failure(const MaxMatrix& a,
                                             std::size_t cap) {
  require_square(a, "principal dominance");
  const auto d = delta_profile(a, cap);
  const auto e = assignment_profile(a);
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (d[k] != e[k]) return k;
  }
  return std::nullopt;
}

bool is_principally_dominant(const MaxMatrix& a, std::size_t cap) {
  return !dominance_failure(a, cap).has_value();
}

MaxScalar nu(const MaxMatrix& a, std::size_t cap) {
  require_square(a, "nu");
  const auto p = char_poly(a, cap);
  if (p.degree() <= 0) return MaxScalar();
  return roots(p).front();
}

}  // namespace maxconv
