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

#ifndef MAXCONV_TESTS_FIXTURES_HPP_
#define MAXCONV_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <vector>

#include "maxconv/matrix.hpp"
#include "maxconv/poly.hpp"
#include "maxconv/scalar.hpp"

namespace maxconv::fixtures {

inline const MaxScalar kEps;

inline MaxScalar frac(long p, long q) { return MaxScalar(Rational(p, q)); }

/// Coefficients a_0, a_1, ... (ascending).
inline Maxpolynomial poly(std::initializer_list<MaxScalar> coeffs) {
  return Maxpolynomial(std::vector<MaxScalar>(coeffs));
}

inline RootList rootlist(std::initializer_list<MaxScalar> rs) { return RootList(rs); }

inline MaxMatrix mat(std::initializer_list<std::initializer_list<MaxScalar>> rows) {
  std::vector<std::vector<MaxScalar>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return MaxMatrix::from_rows(v);
}

// 2x2 symmetric pair: a diagonal matrix and the swap matrix.
inline MaxMatrix diag_two_zero() { return mat({{2, kEps}, {kEps, 0}}); }
inline MaxMatrix swap_ten() { return mat({{0, 10}, {10, 0}}); }
inline MaxMatrix diag_ten() { return mat({{10, 0}, {0, 10}}); }

// Two dominant 4x4 matrices whose sum is not dominant.
inline MaxMatrix dominant_left() {
  return mat({{6, 5, 0, 0}, {5, 0, 3, 0}, {0, 2, 0, 0}, {0, 0, 0, 0}});
}
inline MaxMatrix dominant_right() {
  return mat({{6, 5, 0, 0}, {5, 0, 0, 2}, {0, 0, 0, 0}, {0, 3, 0, 0}});
}
inline MaxMatrix dominant_sum() {
  return mat({{6, 5, 0, 0}, {5, 0, 3, 2}, {0, 2, 0, 0}, {0, 3, 0, 0}});
}

// 4x4 pair whose transpose-partition and column-partition coincide.
inline MaxMatrix shared_a() {
  return mat({{2, 0, 3, -1}, {0, 0, 1, 1}, {-2, 2, 2, 1}, {2, -1, 1, 1}});
}
inline MaxMatrix shared_b() {
  return mat({{0, 0, -2, 2}, {-2, 1, -1, -1}, {-1, 0, -3, -1}, {-1, -2, -1, 0}});
}
inline MaxMatrix shared_p0b() {
  return mat({{-2, 1, -1, -1}, {-1, 0, -3, -1}, {0, 0, -2, 2}, {-1, -2, -1, 0}});
}
inline MaxMatrix shared_ap0b() {
  return mat({{3, 3, 1, 5}, {1, 1, 0, 3}, {2, 2, 0, 4}, {1, 3, 1, 3}});
}
inline MaxMatrix shared_ap0bq0() {
  return mat({{5, 1, 3, 3}, {3, 0, 1, 1}, {4, 0, 2, 2}, {3, 1, 1, 3}});
}
inline MaxMatrix shared_a_hat_t() {
  return mat({{3, 2, frac(5, 2), 2},
              {2, 1, frac(3, 2), 1},
              {frac(5, 2), frac(3, 2), 2, frac(3, 2)},
              {2, 1, frac(3, 2), 2}});
}
inline MaxMatrix shared_b_hat() {
  return mat({{0, 0, -1, 1}, {0, 1, 0, 1}, {-1, 0, -1, 0}, {1, 1, 0, 2}});
}

}  // namespace maxconv::fixtures

#endif  // MAXCONV_TESTS_FIXTURES_HPP_
