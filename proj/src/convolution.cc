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

#include "maxconv/convolution.hpp"

#include <functional>
#include <sstream>

#include "maxconv/errors.hpp"

namespace maxconv {
namespace {

std::size_t require_pair(const MaxMatrix& a, const MaxMatrix& b,
                         const char* what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DomainError(std::string(what) +
                      " needs two square matrices of the same order");
  }
  return a.rows();
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": enumeration limited to n <= " +
                      std::to_string(cap) + " (got n = " + std::to_string(n) + ")");
  }
}

std::size_t cap_or(const ConvOptions& opts, std::size_t fallback) {
  return opts.max_order ? opts.max_order : fallback;
}

// Coefficientwise maximum of candidate polynomials of degree <= n.
class MaxAccumulator {
 public:
  MaxAccumulator(std::size_t n, bool certificate)
      : coeffs_(n + 1), certificate_(certificate) {
    if (certificate_) witness_.resize(n + 1);
  }

  void add(const Maxpolynomial& p, const std::vector<Permutation>& witness) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (coeffs_[i] < p.coeffs()[i]) {
        coeffs_[i] = p.coeffs()[i];
        if (certificate_) witness_[i] = witness;
      }
    }
  }

  ConvResult finish() && {
    return ConvResult{Maxpolynomial(std::move(coeffs_)), std::move(witness_)};
  }

 private:
  std::vector<MaxScalar> coeffs_;
  bool certificate_;
  std::vector<std::vector<Permutation>> witness_;
};

// Calls f(P, Q) for every pair of permutations of {0..n-1}.
void for_each_pair(std::size_t n,
                   const std::function<void(const Permutation&, const Permutation&)>& f) {
  auto p = Permutation::identity(n);
  do {
    auto q = Permutation::identity(n);
    do {
      f(p, q);
    } while (q.next());
  } while (p.next());
}

void for_each_single(std::size_t n, const std::function<void(const Permutation&)>& f) {
  auto p = Permutation::identity(n);
  do {
    f(p);
  } while (p.next());
}

MaxMatrix two_sided(const MaxMatrix& b, const Permutation& p, const Permutation& q) {
  return permute_cols(permute_rows(b, p), q);
}

std::string describe(const PartitionSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.partitions.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.partitions[i].blocks);
  }
  if (s.truncated) out += ", ...";
  return out + "}";
}

}  // namespace

ConvResult additive_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                             const ConvOptions& opts) {
  const auto n = require_pair(a, b, "additive_conv_rhs");
  require_cap(n, cap_or(opts, kDefaultPairCap), "additive_conv_rhs");
  MaxAccumulator acc(n, opts.certificate);
  for_each_pair(n, [&](const Permutation& p, const Permutation& q) {
    acc.add(full_char_poly(mat_add(a, two_sided(b, p, q))), {p, q});
  });
  return std::move(acc).finish();
}

ConvResult additive_conv_multi(const std::vector<MaxMatrix>& matrices,
                               const ConvOptions& opts) {
  if (matrices.empty()) throw DomainError("additive_conv_multi needs a matrix");
  const auto n = matrices.front().rows();
  for (const auto& m : matrices) require_pair(matrices.front(), m, "additive_conv_multi");
  const std::size_t slots = 2 * (matrices.size() - 1);

  // Compare (n!)^slots against (cap!)^2 without overflow.
  const auto cap = cap_or(opts, kDefaultPairCap);
  auto factorial = [](std::size_t k) {
    double f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
  };
  double tuples = 1;
  for (std::size_t s = 0; s < slots; ++s) tuples *= factorial(n);
  if (tuples > factorial(cap) * factorial(cap)) {
    throw CapExceeded("additive_conv_multi: " + std::to_string(slots) +
                      " permutations of order " + std::to_string(n) +
                      " exceed the enumeration limit (" + std::to_string(cap) +
                      "!)^2");
  }

  MaxAccumulator acc(n, opts.certificate);
  std::vector<Permutation> perms(slots, Permutation::identity(n));
  while (true) {
    MaxMatrix m = matrices.front();
    for (std::size_t i = 1; i < matrices.size(); ++i) {
      m = mat_add(m, two_sided(matrices[i], perms[2 * i - 2], perms[2 * i - 1]));
    }
    acc.add(full_char_poly(m), perms);
    std::size_t s = 0;
    while (s < slots && !perms[s].next()) ++s;
    if (s == slots) break;
  }
  return std::move(acc).finish();
}

ConvResult conjugation_char_max(const MaxMatrix& a, const MaxMatrix& b,
                                const ConvOptions& opts) {
  const auto n = require_pair(a, b, "conjugation_char_max");
  require_cap(n, cap_or(opts, kDefaultSingleCap), "conjugation_char_max");
  MaxAccumulator acc(n, opts.certificate);
  for_each_single(n, [&](const Permutation& p) {
    acc.add(char_poly(mat_add(a, two_sided(b, p, p.inverse()))), {p});
  });
  return std::move(acc).finish();
}

ConvResult pd_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                       const ConvOptions& opts) {
  require_pair(a, b, "pd_conv_rhs");
  for (const auto& [name, m] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
    if (const auto k = dominance_failure(*m)) {
      throw DomainError(std::string("pd_conv_rhs: ") + name +
                        " is not principally dominant (order " +
                        std::to_string(*k) + ": delta = " +
                        to_string(delta(*m, *k)) + ", eta = " +
                        to_string(eta(*m, *k)) + ")");
    }
  }
  return conjugation_char_max(a, b, opts);
}

ConvResult max_row_conv(const MaxMatrix& a, const MaxMatrix& b,
                        const ConvOptions& opts) {
  const auto n = require_pair(a, b, "max_row_conv");
  require_cap(n, cap_or(opts, kDefaultSingleCap), "max_row_conv");
  MaxAccumulator acc(n, opts.certificate);
  for_each_single(n, [&](const Permutation& p) {
    acc.add(gram_char_poly(transpose(mat_add(a, permute_rows(b, p)))), {p});
  });
  return std::move(acc).finish();
}

ConvResult hadamard_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                             const ConvOptions& opts) {
  const auto n = require_pair(a, b, "hadamard_conv_rhs");
  require_cap(n, cap_or(opts, kDefaultPairCap), "hadamard_conv_rhs");
  MaxAccumulator acc(n, opts.certificate);
  for_each_pair(n, [&](const Permutation& p, const Permutation& q) {
    acc.add(full_char_poly(mat_hadamard(a, two_sided(b, p, q))), {p, q});
  });
  return std::move(acc).finish();
}

ConvResult product_full_char_max(const MaxMatrix& a, const MaxMatrix& b,
                                 const ConvOptions& opts) {
  const auto n = require_pair(a, b, "product_full_char_max");
  require_cap(n, cap_or(opts, kDefaultSingleCap), "product_full_char_max");
  MaxAccumulator acc(n, opts.certificate);
  for_each_single(n, [&](const Permutation& p) {
    acc.add(full_char_poly(mat_mul(a, permute_rows(b, p))), {p});
  });
  return std::move(acc).finish();
}

ConvResult product_char_max(const MaxMatrix& a, const MaxMatrix& b,
                            const ConvOptions& opts) {
  const auto n = require_pair(a, b, "product_char_max");
  require_cap(n, cap_or(opts, kDefaultPairCap), "product_char_max");
  MaxAccumulator acc(n, opts.certificate);
  for_each_single(n, [&](const Permutation& p) {
    const auto apb = mat_mul(a, permute_rows(b, p));
    auto q = Permutation::identity(n);
    do {
      acc.add(char_poly(permute_cols(apb, q)), {p, q});
    } while (q.next());
  });
  return std::move(acc).finish();
}

ConvResult mult_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                         const ConvOptions& opts) {
  require_pair(a, b, "mult_conv_rhs");
  if (!shared_partition(a, b)) {
    throw DomainError("mult_conv_rhs: A^T and B share no max-column partition; "
                      "A^T has " + describe(max_column_partitions(transpose(a))) +
                      ", B has " + describe(max_column_partitions(b)));
  }
  return product_full_char_max(a, b, opts);
}

Orientation orienting_permutations(const MaxMatrix& a, const MaxMatrix& b,
                                   std::size_t partition_cap) {
  const auto n = require_pair(a, b, "orienting_permutations");
  auto shared = shared_partition(a, b, partition_cap);
  if (!shared) {
    throw DomainError("orienting_permutations: A^T and B share no max-column partition");
  }
  const auto& row_of_a = shared->a_side.order;     // rows of A, ascending maxima
  const auto& col_of_a = shared->a_side.max_rows;  // where each row maximum sits
  const auto& col_of_b = shared->b_side.order;     // columns of B, ascending maxima
  const auto& row_of_b = shared->b_side.max_rows;  // where each column maximum sits

  // Row c_A(i) of P0 B must be row ρ_B(i) of B; the shared partition makes
  // this partial map well defined and injective.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> p_map(n, kUnset);
  std::vector<bool> source_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    p_map[col_of_a[i]] = row_of_b[i];
    source_used[row_of_b[i]] = true;
  }
  std::size_t next_source = 0;
  for (auto& target : p_map) {
    if (target != kUnset) continue;
    while (source_used[next_source]) ++next_source;
    target = next_source;
    source_used[next_source] = true;
  }

  std::vector<std::size_t> q_map(n);
  for (std::size_t i = 0; i < n; ++i) q_map[col_of_b[i]] = row_of_a[i];

  return Orientation{Permutation(std::move(p_map)), Permutation(std::move(q_map)),
                     std::move(*shared)};
}

}  // namespace maxconv
