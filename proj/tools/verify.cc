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

#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "maxconv/convolution.hpp"
#include "maxconv/errors.hpp"
#include "maxconv/oracle.hpp"
#include "maxconv/spectra.hpp"

namespace maxconv::verify {
namespace {

using Sides = std::vector<std::pair<std::string, std::string>>;

ConvOptions conv_options(std::size_t cap) {
  ConvOptions o;
  o.max_order = cap;
  return o;
}

// The n largest entries of the union, non-increasing.
RootList top_of_union(RootList r, const RootList& s, std::size_t n) {
  r.insert(r.end(), s.begin(), s.end());
  std::sort(r.begin(), r.end(), std::greater<>());
  r.resize(std::min(n, r.size()));
  return r;
}

Outcome make(bool pass, std::vector<std::pair<std::string, MaxMatrix>> ms,
             Sides sides, std::string note = {}) {
  return Outcome{pass, std::move(ms), std::move(sides), std::move(note)};
}

MaxMatrix product(const std::vector<MaxMatrix>& factors) {
  MaxMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = mat_mul(out, factors[i]);
  return out;
}

MaxMatrix hadamard_all(const std::vector<MaxMatrix>& factors) {
  MaxMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = mat_hadamard(out, factors[i]);
  }
  return out;
}

}  // namespace

Outcome check_additive(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap) {
  const std::size_t n = a.rows();
  const auto p = full_char_poly(a), q = full_char_poly(b);
  const auto lhs = max_convolve(p, q, n);
  const auto rhs = additive_conv_rhs(a, b, conv_options(cap)).poly;
  // d_{n-k} = max_l eta_l(A) + eta_{k-l}(B)
  const auto ea = assignment_profile(a), eb = assignment_profile(b);
  std::vector<MaxScalar> d(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      d[n - k] = oplus(d[n - k], odot(ea[l], eb[k - l]));
    }
  }
  const Maxpolynomial formula(d);
  const bool roots_ok = roots(lhs) == top_of_union(roots(p), roots(q), n);
  return make(lhs == rhs && formula == lhs && roots_ok, {{"A", a}, {"B", b}},
              {{"convolution", to_string(lhs)},
               {"matrix maximum", to_string(rhs)},
               {"minor formula", to_string(formula)}},
              roots_ok ? "" : "roots are not the largest n of the union");
}

Outcome check_pd(const MaxMatrix& a, const MaxMatrix& b, bool require_dominance,
                 std::size_t cap) {
  const auto lhs = max_convolve(char_poly(a), char_poly(b), a.rows());
  const auto rhs = require_dominance
                       ? pd_conv_rhs(a, b, conv_options(cap)).poly
                       : conjugation_char_max(a, b, conv_options(cap)).poly;
  return make(lhs == rhs, {{"A", a}, {"B", b}},
              {{"convolution", to_string(lhs)},
               {"conjugation maximum", to_string(rhs)}});
}

Outcome check_max_row(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap) {
  const std::size_t n = a.rows();
  const auto at = transpose(a), bt = transpose(b);
  const auto lhs = max_convolve(gram_char_poly(at), gram_char_poly(bt), n);
  const auto rhs = max_row_conv(a, b, conv_options(cap)).poly;
  RootList rows_a = column_maxima(at), rows_b = column_maxima(bt);
  const auto expected_roots = top_of_union(rows_a, rows_b, n);
  const bool roots_ok = roots(lhs) == expected_roots;
  return make(lhs == rhs && roots_ok, {{"A", a}, {"B", b}},
              {{"convolution", to_string(lhs)},
               {"row maximum", to_string(rhs)},
               {"largest row maxima", to_string(expected_roots)}});
}

Outcome check_hadamard(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap) {
  const auto p = full_char_poly(a), q = full_char_poly(b);
  const auto lhs = hadamard_poly(p, q);
  const auto rhs = hadamard_conv_rhs(a, b, conv_options(cap)).poly;
  const auto rp = roots(p), rq = roots(q);
  RootList sums(rp.size());
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] = odot(rp[i], rq[i]);
  const bool roots_ok = roots(lhs) == sums;
  return make(lhs == rhs && roots_ok, {{"A", a}, {"B", b}},
              {{"hadamard", to_string(lhs)},
               {"matrix maximum", to_string(rhs)},
               {"root sums", to_string(sums)}});
}

Outcome check_mult(const MaxMatrix& a, const MaxMatrix& b, std::size_t cap) {
  const auto p = gram_char_poly(transpose(a)), q = gram_char_poly(b);
  const auto lhs = hadamard_poly(p, q);
  const auto single = mult_conv_rhs(a, b, conv_options(cap)).poly;
  const auto pair = product_char_max(a, b, conv_options(cap)).poly;
  const auto o = orienting_permutations(a, b);
  const auto apb = mat_mul(mat_mul(a, o.p0.to_matrix()), b);
  const auto oriented_full = full_char_poly(apb);
  const auto oriented = char_poly(mat_mul(apb, o.q0.to_matrix()));
  const auto rp = roots(p), rq = roots(q);
  RootList sums(rp.size());
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] = odot(rp[i], rq[i]);
  const bool pass = lhs == single && lhs == pair && lhs == oriented_full &&
                    lhs == oriented && roots(lhs) == sums;
  return make(pass, {{"A", a}, {"B", b}},
              {{"hadamard of gram polys", to_string(lhs)},
               {"max over P of full char poly", to_string(single)},
               {"max over P,Q of char poly", to_string(pair)},
               {"full char poly of A P0 B", to_string(oriented_full)},
               {"char poly of A P0 B Q0", to_string(oriented)}},
              "P0 = " + to_string(o.p0) + ", Q0 = " + to_string(o.q0));
}

Outcome check_fcf_concavity(const MaxMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<MaxScalar> e(n + 1);
  bool agree = true;
  for (std::size_t k = 0; k <= n; ++k) {
    e[k] = eta(a, k);
    if (n <= oracle::kHardCap && e[k] != oracle::eta_bf(a, k)) agree = false;
  }
  bool concave = true;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    if (e[k + 2].is_epsilon()) continue;
    const Rational left = e[k + 1].value() - e[k].value();
    const Rational right = e[k + 2].value() - e[k + 1].value();
    if (left < right) concave = false;
  }
  const auto chi = full_char_poly(a);
  std::string seq;
  for (const auto& x : e) seq += (seq.empty() ? "" : ", ") + to_string(x);
  return make(agree && concave && is_fcf(chi), {{"A", a}},
              {{"eta", seq}, {"full char poly", to_string(chi)}},
              agree ? (concave ? "" : "eta not concave")
                    : "matching eta differs from enumeration");
}

Outcome check_inequalities(const std::vector<MaxMatrix>& ms) {
  std::vector<std::pair<std::string, MaxMatrix>> named;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    named.emplace_back("A" + std::to_string(i + 1), ms[i]);
  }
  Sides failed;
  auto expect = [&](bool ok, std::string what, const MaxScalar& l,
                    const MaxScalar& r) {
    if (!ok) failed.emplace_back(std::move(what), to_string(l) + " vs " + to_string(r));
  };
  auto le = [&](const MaxScalar& l, const MaxScalar& r, std::string what) {
    expect(l <= r, std::move(what), l, r);
  };
  auto eq = [&](const MaxScalar& l, const MaxScalar& r, std::string what) {
    expect(l == r, std::move(what), l, r);
  };

  const MaxMatrix& a = ms[0];
  const MaxMatrix& b = ms[1];
  le(nu(mat_hadamard(a, b)), odot(nu(a), nu(b)), "nu(A o B) <= nu(A) + nu(B)");
  le(norm(mat_hadamard(a, b)), odot(norm(a), norm(b)),
     "|A o B| <= |A| + |B|");
  for (const Rational& t : {Rational(1, 2), Rational(2), Rational(3, 2)}) {
    eq(nu(mat_hpow(a, t)), scale(nu(a), t), "nu(A^t) = t nu(A)");
    eq(norm(mat_hpow(a, t)), scale(norm(a), t), "|A^t| = t |A|");
  }
  eq(nu(mat_mul(a, b)), nu(mat_mul(b, a)), "nu(AB) = nu(BA)");
  const auto ha = hat(a), hat_t = hat(transpose(a));
  eq(norm(ha), norm(a), "|hat A| = |A|");
  eq(norm(hat_t), norm(a), "|hat A^T| = |A|");
  eq(nu(ha), norm(a), "nu(hat A) = |A|");
  eq(nu(hat_t), norm(a), "nu(hat A^T) = |A|");
  le(norm(mat_hadamard(a, b)), nu(mat_mul(transpose(a), b)),
     "|A o B| <= nu(A^T B)");

  for (std::size_t m = 2; m <= ms.size(); ++m) {
    const std::vector<MaxMatrix> fs(ms.begin(), ms.begin() + m);
    const std::string tag = " [m=" + std::to_string(m) + "]";
    const Rational t(3, 2);
    std::vector<MaxMatrix> powered, hats, hats_t, transposed;
    for (const auto& f : fs) {
      powered.push_back(mat_hpow(f, t));
      hats.push_back(hat(f));
      hats_t.push_back(hat(transpose(f)));
      transposed.push_back(transpose(f));
    }
    if (product(powered) != mat_hpow(product(fs), t)) {
      failed.emplace_back("product of powers = power of product" + tag, "");
    }
    const MaxScalar h = norm(hadamard_all(fs));
    le(nu(hadamard_all(fs)), nu(product(fs)), "nu(o A_i) <= nu(prod A_i)" + tag);
    le(h, nu(hadamard_all(hats)), "|o A_i| <= nu(o hat A_i)" + tag);
    le(nu(hadamard_all(hats)), nu(product(hats)),
       "nu(o hat A_i) <= nu(prod hat A_i)" + tag);
    le(h, nu(hadamard_all(hats_t)), "|o A_i| <= nu(o hat A_i^T)" + tag);
    le(nu(hadamard_all(hats_t)), nu(product(hats_t)),
       "nu(o hat A_i^T) <= nu(prod hat A_i^T)" + tag);

    // Alternating words: `lead_transposed` selects A_1^T A_2 A_3^T ...
    auto word = [&](bool lead_transposed) {
      std::vector<MaxMatrix> w;
      for (std::size_t i = 0; i < m; ++i) {
        w.push_back((i % 2 == 0) == lead_transposed ? transposed[i] : fs[i]);
      }
      return w;
    };
    const MaxScalar twice = odot(h, h);
    if (m % 2 == 0) {
      const auto left = word(true), right = word(false);
      const MaxScalar nu_left = nu(product(left)), nu_right = nu(product(right));
      le(twice, odot(nu_left, nu_right), "even chain" + tag);
      std::vector<MaxMatrix> reversed;
      for (std::size_t i = m; i-- > 0;) {
        reversed.push_back(i % 2 == 0 ? transposed[i] : fs[i]);
      }
      eq(nu_right, nu(product(reversed)), "even chain reversal" + tag);
    } else {
      auto w = word(false);
      const auto tail = word(true);
      w.insert(w.end(), tail.begin(), tail.end());
      le(twice, nu(product(w)), "odd chain" + tag);
    }
  }
  const bool pass = failed.empty();
  return make(pass, std::move(named), std::move(failed),
              pass ? "" : "inequality violated");
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {
      "additive", "pd", "maxrow", "hadamard", "mult", "fcf-concavity",
      "inequalities"};
  return names;
}

Report run(const std::string& theorem, const Options& opts) {
  const auto& names = theorem_names();
  if (std::find(names.begin(), names.end(), theorem) == names.end()) {
    throw DomainError("unknown theorem: " + theorem);
  }
  if (opts.fixed_pair && theorem != "pd") {
    throw DomainError("the fixed pair only applies to pd");
  }
  if (opts.n == 0) throw DomainError("order must be at least 1");
  Report report{theorem, opts, 0, std::nullopt};
  const auto& pool = oracle::default_pool();
  const std::size_t n = opts.n;
  const std::size_t trials = opts.fixed_pair ? 1 : opts.trials;
  report.options.trials = trials;
  if (opts.fixed_pair) report.options.n = 2;

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = oracle::instance_seed(opts.seed, t);
    auto random = [&](std::uint64_t k) {
      return oracle::gen_matrix(n, pool, 0.2, oracle::instance_seed(s, k));
    };
    Outcome o;
    if (theorem == "additive") {
      o = check_additive(random(0), random(1), opts.cap);
    } else if (theorem == "pd") {
      if (opts.fixed_pair) {
        const auto a = MaxMatrix::from_rows({{2, MaxScalar()}, {MaxScalar(), 0}});
        const auto b = MaxMatrix::from_rows({{0, 10}, {10, 0}});
        o = check_pd(a, b, false, opts.cap);
      } else if (opts.negative_control) {
        o = check_pd(random(0), random(1), false, opts.cap);
      } else {
        o = check_pd(oracle::gen_pd_matrix(n, oracle::instance_seed(s, 0)),
                     oracle::gen_pd_matrix(n, oracle::instance_seed(s, 1)), true,
                     opts.cap);
      }
    } else if (theorem == "maxrow") {
      o = check_max_row(random(0), random(1), opts.cap);
    } else if (theorem == "hadamard") {
      o = check_hadamard(random(0), random(1), opts.cap);
    } else if (theorem == "mult") {
      if (opts.negative_control) {
        const auto a = random(0), b = random(1);
        // The hypothesis is dropped, so compare without the checked path.
        const auto lhs = hadamard_poly(gram_char_poly(transpose(a)), gram_char_poly(b));
        const auto rhs = product_full_char_max(a, b, conv_options(opts.cap)).poly;
        o = make(lhs == rhs, {{"A", a}, {"B", b}},
                 {{"hadamard of gram polys", to_string(lhs)},
                  {"max over P of full char poly", to_string(rhs)}},
                 shared_partition(a, b) ? "shares a partition" : "no shared partition");
      } else {
        const auto [a, b] = oracle::gen_shared_pair(n, s);
        o = check_mult(a, b, opts.cap);
      }
    } else if (theorem == "fcf-concavity") {
      o = check_fcf_concavity(random(0));
    } else {
      o = check_inequalities({random(0), random(1), random(2), random(3)});
    }
    if (o.pass) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure.emplace(t, std::move(o));
    }
  }
  return report;
}

void print_report(const Report& r, std::ostream& out) {
  const auto& o = r.options;
  out << "theorem: " << r.theorem << "\n";
  out << "order: " << o.n << "\n";
  if (o.fixed_pair) {
    out << "instance: fixed symmetric pair\n";
  } else {
    out << "seed: " << o.seed << "\n";
  }
  const bool control = o.negative_control || o.fixed_pair;
  if (control) out << "mode: negative control (hypothesis not enforced)\n";
  out << "passed: " << r.passed << "/" << o.trials << "\n";
  if (control) out << "violations: " << o.trials - r.passed << "\n";
  if (!r.first_failure) return;
  const auto& [trial, f] = *r.first_failure;
  out << (control ? "first violation" : "first counterexample") << ": trial "
      << trial << "\n";
  for (const auto& [name, m] : f.matrices) {
    out << name << " =\n" << format_matrix(m);
  }
  for (const auto& [label, text] : f.sides) {
    out << label << ": " << text << "\n";
  }
  if (!f.note.empty()) out << "note: " << f.note << "\n";
}

}  // namespace maxconv::verify
