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
#include <numeric>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "maxconv/errors.hpp"
#include "maxconv/oracle.hpp"

namespace {

using ::maxconv::DomainError;
using ::maxconv::MaxScalar;
using ::maxconv::Maxpolynomial;
using ::maxconv::ParseError;
using ::maxconv::Rational;
using ::maxconv::RootList;
using ::maxconv::fixtures::frac;
using ::maxconv::fixtures::kEps;
using ::maxconv::fixtures::poly;
using ::maxconv::fixtures::rootlist;
namespace mc = ::maxconv;
namespace oracle = ::maxconv::oracle;

constexpr int kTrials = 300;

RootList Union(RootList a, const RootList& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

RootList Top(RootList r, std::size_t n) {
  r.resize(std::min(n, r.size()));
  return r;
}

TEST(MaxpolynomialTest, Normalisation) {
  EXPECT_EQ(poly({1, 2, kEps, kEps}), poly({1, 2}));
  EXPECT_TRUE(poly({kEps, kEps}).is_null());
  EXPECT_EQ(Maxpolynomial::null().degree(), Maxpolynomial::kNullDegree);
  EXPECT_EQ(poly({kEps, kEps, 3}).epsilon_run(), 2u);
  EXPECT_EQ(Maxpolynomial::monomial(5, 2), poly({kEps, kEps, 5}));
  EXPECT_EQ(poly({3}).coeff(7), kEps);
}

TEST(MaxpolynomialTest, Add) {
  const auto p = poly({1, 0, -1});
  const auto q = poly({0, 0, 0});
  EXPECT_EQ(mc::poly_add(p, q), poly({1, 0, 0}));
  EXPECT_EQ(mc::poly_add(p, Maxpolynomial::null()), p);
  EXPECT_EQ(mc::poly_add(p, p), p);
}

TEST(MaxpolynomialTest, Multiply) {
  const auto p = poly({1, 0, -1});
  const auto q = poly({0, 0, 0});
  EXPECT_EQ(mc::poly_mul(p, q), poly({1, 1, 1, 0, -1}));
  EXPECT_EQ(mc::poly_mul(p, Maxpolynomial::constant(0)), p);
  EXPECT_EQ(mc::poly_mul(p, Maxpolynomial::null()), Maxpolynomial::null());
  const auto zero_sq = poly({0, 0, 0});
  const auto eps_sq = poly({kEps, kEps, 0});
  EXPECT_EQ(mc::poly_mul(zero_sq, eps_sq), poly({kEps, kEps, 0, 0, 0}));
}

TEST(MaxpolynomialTest, Derivative) {
  EXPECT_EQ(mc::derivative(poly({1, 0, -1})), poly({0, -1}));
  EXPECT_TRUE(mc::derivative(Maxpolynomial::constant(4)).is_null());
  EXPECT_EQ(mc::derivative(poly({0, 0, 0})), poly({0, 0}));
  EXPECT_TRUE(mc::derivative(poly({1, 2, 3}), 3).is_null());
  EXPECT_EQ(mc::derivative(poly({1, 2, 3}), 0), poly({1, 2, 3}));
  // x^2 (+) 0 -> x, the shifted ε is trimmed from the bottom only
  EXPECT_EQ(mc::derivative(poly({0, kEps, 0})), poly({kEps, 0}));
}

TEST(MaxpolynomialTest, Roots) {
  EXPECT_EQ(mc::roots(poly({4, 4, 0})), rootlist({4, 0}));
  EXPECT_EQ(mc::roots(poly({kEps, kEps, 0, 0, 0})), rootlist({0, 0, kEps, kEps}));
  EXPECT_EQ(mc::roots(poly({1, 0, 0})), rootlist({frac(1, 2), frac(1, 2)}));
  EXPECT_EQ(mc::roots(poly({kEps, kEps, 0, kEps, 0})),
            rootlist({0, 0, kEps, kEps}));
  EXPECT_EQ(mc::roots(poly({5})), RootList{});
  EXPECT_THROW(mc::roots(Maxpolynomial::null()), DomainError);
}

TEST(MaxpolynomialTest, Fcf) {
  EXPECT_TRUE(mc::is_fcf(poly({8, 7, 5, 3, 0})));
  EXPECT_FALSE(mc::is_fcf(poly({1, 0, 0})));
  EXPECT_FALSE(mc::is_fcf(poly({kEps, kEps, 0, kEps, 0})));
  EXPECT_TRUE(mc::is_fcf(poly({kEps, kEps, 0, 0, 0})));
  EXPECT_TRUE(mc::is_fcf(Maxpolynomial::monomial(3, 5)));
  EXPECT_TRUE(mc::is_fcf(Maxpolynomial::constant(-2)));
  EXPECT_FALSE(mc::is_fcf(poly({0, kEps, 0})));
}

TEST(MaxpolynomialTest, Concavify) {
  EXPECT_EQ(mc::concavify(poly({kEps, kEps, 0, kEps, 0})),
            poly({kEps, kEps, 0, 0, 0}));
  EXPECT_EQ(mc::concavify(poly({1, 0, 0})), poly({1, frac(1, 2), 0}));
  EXPECT_EQ(mc::concavify(poly({8, 7, 5, 3, 0})), poly({8, 7, 5, 3, 0}));
  EXPECT_THROW(mc::concavify(Maxpolynomial::null()), DomainError);
}

TEST(MaxpolynomialTest, FromRoots) {
  EXPECT_EQ(mc::from_roots(0, rootlist({3, 2, 2, 1})), poly({8, 7, 5, 3, 0}));
  EXPECT_EQ(mc::from_roots(0, rootlist({5, 3, 2, 0})), poly({10, 10, 8, 5, 0}));
  EXPECT_EQ(mc::from_roots(7, {}), Maxpolynomial::constant(7));
  EXPECT_EQ(mc::from_roots(0, rootlist({0, 0, kEps, kEps})),
            poly({kEps, kEps, 0, 0, 0}));
  EXPECT_THROW(mc::from_roots(kEps, rootlist({1})), DomainError);
}

TEST(MaxpolynomialTest, Evaluate) {
  const auto p = poly({4, 4, 0});
  EXPECT_EQ(mc::evaluate(p, kEps), MaxScalar(4));
  EXPECT_EQ(mc::evaluate(p, 4), MaxScalar(8));
  EXPECT_EQ(mc::evaluate(p, frac(-1, 2)), MaxScalar(4));
  EXPECT_EQ(mc::evaluate(Maxpolynomial::null(), 3), kEps);
}

TEST(MaxpolynomialTest, MaxConvolve) {
  EXPECT_EQ(mc::max_convolve(poly({2, 2, 0}), poly({20, 0, 0}), 2),
            poly({20, 2, 0}));
  EXPECT_EQ(mc::roots(poly({20, 2, 0})), rootlist({10, 10}));
  const auto p = poly({3, 1, 4, 0});
  const auto zero = Maxpolynomial::constant(0);
  for (std::size_t k = 0; k <= 4; ++k) {
    EXPECT_EQ(mc::max_convolve(p, zero, k), mc::derivative(p, k));
  }
  EXPECT_EQ(mc::max_convolve(p, poly({1, 1}), 0), mc::poly_mul(p, poly({1, 1})));
  EXPECT_TRUE(mc::max_convolve(p, poly({1, 1}), 5).is_null());
}

TEST(MaxpolynomialTest, Hadamard) {
  const auto pq = mc::hadamard_poly(poly({4, 4, 0}), poly({3, 1, 0}));
  EXPECT_EQ(pq, poly({7, 5, 0}));
  EXPECT_EQ(mc::roots(pq), rootlist({5, 2}));
  EXPECT_EQ(mc::hadamard_poly(poly({8, 7, 5, 3, 0}), poly({2, 3, 3, 2, 0})),
            poly({10, 10, 8, 5, 0}));
  const auto p = poly({kEps, 3, -1, 2});
  EXPECT_EQ(mc::hadamard_poly(p, poly({0, 0, 0, 0})), p);
  EXPECT_THROW(mc::hadamard_poly(poly({1, 2}), poly({1, 2, 3})), DomainError);
}

TEST(MaxpolynomialTest, FunctionalEquality) {
  EXPECT_TRUE(mc::functional_eq(poly({kEps, kEps, 0, kEps, 0}),
                                poly({kEps, kEps, 0, 0, 0})));
  EXPECT_TRUE(mc::functional_eq(poly({0, 0, 0}), poly({0, kEps, 0})));
  EXPECT_FALSE(mc::functional_eq(poly({0, 0, 0}), poly({1, 0, 0})));
  EXPECT_TRUE(mc::functional_le(poly({0, 0, 0}), poly({1, 0, 0})));
  EXPECT_FALSE(mc::functional_le(poly({1, 0, 0}), poly({0, 0, 0})));
}

TEST(PolyTextTest, Formats) {
  const auto p = poly({20, 10, 0});
  EXPECT_EQ(mc::to_string(p), "20, 10, 0");
  EXPECT_EQ(mc::format_monomial(p), "x^2 (+) 10x (+) 20");
  EXPECT_EQ(mc::format_factored(p), "(x (+) 10)^2");
  EXPECT_EQ(mc::format_monomial(poly({1, frac(1, 2), -1})),
            "(-1)x^2 (+) (1/2)x (+) 1");
  EXPECT_EQ(mc::format_factored(poly({kEps, kEps, 0, 0, 0})),
            "(x (+) 0)^2 x^2");
  EXPECT_EQ(mc::format_factored(poly({1, 0, 0})), std::nullopt);
  EXPECT_EQ(mc::format_factored(poly({9, 8, 7, 6})), "(6) (x (+) 1)^3");
  EXPECT_EQ(mc::to_string(rootlist({4, 0})), "(4, 0)");
  EXPECT_EQ(mc::to_string(RootList{}), "()");
}

TEST(PolyTextTest, Parse) {
  EXPECT_EQ(mc::parse_poly("8, 7, 5, 3, 0"), poly({8, 7, 5, 3, 0}));
  EXPECT_EQ(mc::parse_poly("# header\n\n -inf, 1/2 ,3\n# trailing"),
            poly({kEps, frac(1, 2), 3}));
  EXPECT_EQ(mc::parse_poly("-inf"), Maxpolynomial::null());
  EXPECT_THROW(mc::parse_poly(""), ParseError);
  EXPECT_THROW(mc::parse_poly("1,,2"), ParseError);
  EXPECT_EQ(mc::parse_roots("(4, 0)"), rootlist({4, 0}));
  EXPECT_EQ(mc::parse_roots("()"), RootList{});
  EXPECT_THROW(mc::parse_roots("4, 0"), ParseError);
  EXPECT_THROW(mc::parse_roots("(0, 4)"), ParseError);
}

TEST(PolyTextTest, RoundTrip) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_poly(12, oracle::instance_seed(71, t));
    EXPECT_EQ(mc::parse_poly(mc::to_string(p)), p);
    if (!p.is_null()) {
      EXPECT_EQ(mc::parse_roots(mc::to_string(mc::roots(p))), mc::roots(p));
    }
  }
}

TEST(MaxpolynomialPropertyTest, Leibniz) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_poly(6, oracle::instance_seed(1, t));
    const auto q = oracle::gen_poly(6, oracle::instance_seed(2, t));
    const auto pq = mc::poly_mul(p, q);
    for (long k = 0; k <= std::max(pq.degree(), 0L); ++k) {
      Maxpolynomial sum = Maxpolynomial::null();
      for (long i = 0; i <= k; ++i) {
        sum = mc::poly_add(sum, mc::poly_mul(mc::derivative(p, i),
                                             mc::derivative(q, k - i)));
      }
      ASSERT_EQ(mc::derivative(pq, k), sum) << mc::to_string(p) << " | "
                                            << mc::to_string(q) << " k=" << k;
    }
  }
}

TEST(MaxpolynomialPropertyTest, FcfClosureAndRootShift) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_fcf_poly(8, oracle::instance_seed(3, t));
    const auto q = oracle::gen_fcf_poly(8, oracle::instance_seed(4, t));
    ASSERT_TRUE(mc::is_fcf(p)) << mc::to_string(p);
    const auto dp = mc::derivative(p);
    const auto pq = mc::poly_mul(p, q);
    EXPECT_TRUE(dp.is_null() || mc::is_fcf(dp));
    EXPECT_TRUE(mc::is_fcf(pq));
    EXPECT_EQ(mc::roots(pq), Union(mc::roots(p), mc::roots(q)));
    if (p.degree() >= 1) {
      // Non-increasing order: the smallest root is dropped.
      const auto r = mc::roots(p);
      EXPECT_EQ(mc::roots(dp), RootList(r.begin(), r.end() - 1));
    }
  }
}

TEST(MaxpolynomialPropertyTest, ConvolutionRoots) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_fcf_poly(6, oracle::instance_seed(5, t));
    const auto q = oracle::gen_fcf_poly(6, oracle::instance_seed(6, t));
    const auto total = static_cast<std::size_t>(p.degree() + q.degree());
    for (std::size_t k = 0; k <= total; ++k) {
      const auto c = mc::max_convolve(p, q, k);
      ASSERT_TRUE(mc::is_fcf(c));
      EXPECT_EQ(mc::roots(c), Top(Union(mc::roots(p), mc::roots(q)), total - k));
    }
  }
}

TEST(MaxpolynomialPropertyTest, PermutationFormula) {
  oracle::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(4);
    RootList r(n), s(n);
    for (auto& x : r) x = rng.chance(0.15) ? kEps : oracle::default_pool().draw(rng);
    for (auto& x : s) x = rng.chance(0.15) ? kEps : oracle::default_pool().draw(rng);
    std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(s.begin(), s.end(), std::greater<>());
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Maxpolynomial rhs = Maxpolynomial::null();
    do {
      Maxpolynomial term = Maxpolynomial::constant(0);
      for (std::size_t i = 0; i < n; ++i) {
        term = mc::poly_mul(term, poly({mc::oplus(r[i], s[sigma[i]]), 0}));
      }
      rhs = mc::poly_add(rhs, term);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(mc::max_convolve(mc::from_roots(0, r), mc::from_roots(0, s), n), rhs);
  }
}

TEST(MaxpolynomialPropertyTest, ConvolutionLaws) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p1 = oracle::gen_poly(5, oracle::instance_seed(9, t));
    const auto p2 = oracle::gen_poly(5, oracle::instance_seed(10, t));
    const auto q = oracle::gen_poly(5, oracle::instance_seed(11, t));
    for (std::size_t k = 0; k <= 6; ++k) {
      EXPECT_EQ(mc::max_convolve(p1, q, k), mc::max_convolve(q, p1, k));
      EXPECT_EQ(mc::max_convolve(mc::poly_add(p1, p2), q, k),
                mc::poly_add(mc::max_convolve(p1, q, k), mc::max_convolve(p2, q, k)));
      EXPECT_EQ(mc::max_convolve(mc::poly_mul(p1, p2), q, k),
                mc::max_convolve(p1, mc::poly_mul(p2, q), k));
      const auto next = mc::max_convolve(p1, q, k + 1);
      EXPECT_EQ(mc::derivative(mc::max_convolve(p1, q, k)), next);
      EXPECT_EQ(next, mc::poly_add(mc::max_convolve(mc::derivative(p1), q, k),
                                   mc::max_convolve(p1, mc::derivative(q), k)));
    }
  }
}

TEST(MaxpolynomialPropertyTest, AssociativityAtOrderN) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto p1 = oracle::gen_poly(n, oracle::instance_seed(12, t));
    const auto p2 = oracle::gen_poly(n, oracle::instance_seed(13, t));
    const auto p3 = oracle::gen_poly(n, oracle::instance_seed(14, t));
    EXPECT_EQ(mc::max_convolve(mc::max_convolve(p1, p2, n), p3, n),
              mc::max_convolve(p1, mc::max_convolve(p2, p3, n), n));
  }
}

TEST(MaxpolynomialPropertyTest, AssociativityNeedsTheDegreeBound) {
  // Order 1, but the third factor has degree 2.
  const auto p1 = poly({10});
  const auto p2 = poly({10});
  const auto p3 = poly({0, 0, 0});
  EXPECT_NE(mc::max_convolve(mc::max_convolve(p1, p2, 1), p3, 1),
            mc::max_convolve(p1, mc::max_convolve(p2, p3, 1), 1));
}

TEST(MaxpolynomialPropertyTest, HadamardLaws) {
  for (int t = 0; t < kTrials; ++t) {
    oracle::Rng rng(oracle::instance_seed(15, t));
    const std::size_t n = rng.below(6);
    auto gen = [&] {
      std::vector<MaxScalar> c(n + 1);
      for (auto& x : c) x = rng.chance(0.2) ? kEps : oracle::default_pool().draw(rng);
      c[n] = oracle::default_pool().draw(rng);
      return Maxpolynomial(c);
    };
    const auto p1 = gen(), p2 = gen(), p3 = gen(), q1 = gen(), q2 = gen();
    EXPECT_EQ(mc::hadamard_poly(p1, q1), mc::hadamard_poly(q1, p1));
    EXPECT_EQ(mc::hadamard_poly(mc::hadamard_poly(p1, p2), p3),
              mc::hadamard_poly(p1, mc::hadamard_poly(p2, p3)));
    EXPECT_EQ(mc::hadamard_poly(mc::poly_add(p1, p2), q1),
              mc::poly_add(mc::hadamard_poly(p1, q1), mc::hadamard_poly(p2, q1)));
    EXPECT_TRUE(mc::functional_le(
        mc::poly_mul(mc::hadamard_poly(p1, q1), mc::hadamard_poly(p2, q2)),
        mc::hadamard_poly(mc::poly_mul(p1, p2), mc::poly_mul(q1, q2))));
    for (std::size_t k = 0; k <= 2 * n; ++k) {
      const auto lhs = mc::max_convolve(mc::hadamard_poly(p1, q1),
                                        mc::hadamard_poly(p2, q2), k);
      const auto rhs = mc::hadamard_poly(mc::max_convolve(p1, p2, k),
                                         mc::max_convolve(q1, q2, k));
      EXPECT_TRUE(lhs.is_null() || mc::functional_le(lhs, rhs))
          << mc::to_string(lhs) << " vs " << mc::to_string(rhs);
    }
  }
}

TEST(MaxpolynomialPropertyTest, FcfHadamardAddsOrderedRoots) {
  for (int t = 0; t < kTrials; ++t) {
    oracle::Rng rng(oracle::instance_seed(16, t));
    const std::size_t n = rng.below(7);
    RootList r(n), s(n);
    for (auto& x : r) x = oracle::default_pool().draw(rng);
    for (auto& x : s) x = oracle::default_pool().draw(rng);
    std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(s.begin(), s.end(), std::greater<>());
    const auto h = mc::hadamard_poly(mc::from_roots(1, r), mc::from_roots(-2, s));
    RootList sums(n);
    for (std::size_t i = 0; i < n; ++i) sums[i] = mc::odot(r[i], s[i]);
    EXPECT_TRUE(mc::is_fcf(h));
    EXPECT_EQ(mc::roots(h), sums);
  }
}

TEST(MaxpolynomialPropertyTest, Taylor) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_poly(12, oracle::instance_seed(17, t));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      EXPECT_EQ(mc::evaluate(mc::derivative(p, i), kEps), p.coeff(i));
    }
  }
}

TEST(MaxpolynomialPropertyTest, ConcavifyIsAFunctionalIdentity) {
  for (int t = 0; t < kTrials; ++t) {
    const auto p = oracle::gen_poly(12, oracle::instance_seed(18, t));
    if (p.is_null()) continue;
    const auto c = mc::concavify(p);
    EXPECT_TRUE(mc::is_fcf(c));
    EXPECT_EQ(mc::concavify(c), c);
    EXPECT_TRUE(mc::functional_eq(p, c));
    // Breakpoints, midpoints between them, and points beyond both ends.
    std::set<Rational> grid{Rational(-50), Rational(50)};
    for (const auto& r : mc::roots(p)) {
      if (r.is_finite()) grid.insert(r.value());
    }
    std::vector<Rational> pts(grid.begin(), grid.end());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      grid.insert((pts[i - 1] + pts[i]) / 2);
    }
    for (const auto& x : grid) {
      EXPECT_EQ(mc::evaluate(c, MaxScalar(x)), mc::evaluate(p, MaxScalar(x)));
    }
    EXPECT_EQ(mc::evaluate(c, kEps), mc::evaluate(p, kEps));
  }
}

}  // namespace
