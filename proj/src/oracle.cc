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

#include "maxconv/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "maxconv/errors.hpp"

namespace maxconv::oracle {
namespace {

void require_small(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": brute force limited to n <= " +
                      std::to_string(cap) + ", got " + std::to_string(n));
  }
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MaxScalar permanent_bf(const MaxMatrix& a) {
  if (!a.is_square()) throw DomainError("permanent: matrix is not square");
  const std::size_t n = a.rows();
  require_small(n, kHardCap, "permanent");
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  MaxScalar best;
  do {
    MaxScalar term = MaxScalar::one();
    for (std::size_t i = 0; i < n && term.is_finite(); ++i) {
      term = odot(term, a(i, sigma[i]));
    }
    best = oplus(best, term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

MaxScalar eta_bf(const MaxMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DomainError("eta: matrix is not square");
  const std::size_t n = a.rows();
  if (k > n) throw DomainError("eta: order exceeds matrix size");
  require_small(n, kHardCap, "eta");
  MaxScalar best;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      best = oplus(best, permanent_bf(a.submatrix(rows, cols)));
    });
  });
  return best;
}

MaxScalar delta_bf(const MaxMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DomainError("delta: matrix is not square");
  const std::size_t n = a.rows();
  if (k > n) throw DomainError("delta: order exceeds matrix size");
  require_small(n, kHardCap, "delta");
  MaxScalar best;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
    best = oplus(best, permanent_bf(a.submatrix(idx, idx)));
  });
  return best;
}

RootList roots_bf(const Maxpolynomial& p) {
  if (p.is_null()) throw DomainError("roots_bf: the null polynomial has no roots");
  RootList out;
  const auto& c = p.coeffs();
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_finite()) finite.push_back(i);
  }
  // Where a_i + i x = a_j + j x.
  std::set<Rational> candidates;
  for (std::size_t s = 0; s < finite.size(); ++s) {
    for (std::size_t t = s + 1; t < finite.size(); ++t) {
      const std::size_t i = finite[s], j = finite[t];
      Rational x = (c[i].value() - c[j].value()) / Rational(long(j - i));
      x.canonicalize();
      candidates.insert(x);
    }
  }
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    Rational top;
    std::vector<std::size_t> at;
    for (std::size_t i : finite) {
      Rational v = c[i].value() + Rational(long(i)) * *it;
      if (at.empty() || v > top) {
        top = v;
        at.assign(1, i);
      } else if (v == top) {
        at.push_back(i);
      }
    }
    if (at.size() < 2) continue;
    for (std::size_t m = at.back() - at.front(); m > 0; --m) {
      out.push_back(MaxScalar(*it));
    }
  }
  out.resize(out.size() + p.epsilon_run());
  return out;
}

PartitionSet column_partitions_bf(const MaxMatrix& m) {
  const std::size_t rows = m.rows(), n = m.cols();
  require_small(n, kPartitionHardCap, "partitions");
  require_small(rows, kHardCap, "partitions");
  std::vector<MaxScalar> maxima(n);
  std::vector<std::vector<std::size_t>> argmax(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) maxima[j] = oplus(maxima[j], m(i, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (m(i, j) == maxima[j]) argmax[j].push_back(i);
    }
  }
  std::map<std::vector<std::vector<std::size_t>>, ColumnPartition> found;
  if (rows == 0 && n > 0) return {};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ascending = true;
    for (std::size_t p = 1; p < n; ++p) {
      if (maxima[order[p]] < maxima[order[p - 1]]) ascending = false;
    }
    if (!ascending) continue;
    // Odometer over argmax choices.
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      ColumnPartition cp;
      cp.order = order;
      for (std::size_t p = 0; p < n; ++p) {
        cp.max_rows.push_back(argmax[order[p]][pick[p]]);
      }
      cp.blocks = blocks_of(cp.max_rows);
      found.emplace(cp.blocks, cp);
      std::size_t p = 0;
      while (p < n && ++pick[p] == argmax[order[p]].size()) pick[p++] = 0;
      if (p == n) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  PartitionSet out;
  for (auto& [blocks, cp] : found) out.partitions.push_back(std::move(cp));
  return out;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("below: empty range");
  // Rejection keeps the draw uniform and independent of the library.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

bool Rng::chance(double p) {
  const std::uint64_t x = engine_() >> 32;
  return static_cast<double>(x) < p * 4294967296.0;
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = base * 0x9E3779B97F4A7C15ULL + index + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EntryPool EntryPool::integers(long lo, long hi) {
  EntryPool pool;
  for (long v = lo; v <= hi; ++v) pool.values.emplace_back(v);
  return pool;
}

const MaxScalar& EntryPool::draw(Rng& rng) const {
  return values[rng.below(values.size())];
}

const EntryPool& default_pool() {
  static const EntryPool pool = EntryPool::integers(-3, 10);
  return pool;
}

MaxMatrix gen_matrix(std::size_t n, const EntryPool& pool, double eps_prob,
                     std::uint64_t seed) {
  Rng rng(seed);
  MaxMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rng.chance(eps_prob)) a(i, j) = pool.draw(rng);
    }
  }
  return a;
}

MaxMatrix gen_pd_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  MaxMatrix a = gen_matrix(n, default_pool(), 0.25, rng.engine()());
  for (std::size_t i = 0; i < n; ++i) {
    MaxScalar row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row = oplus(row, a(i, j));
    }
    a(i, i) = row.is_finite() ? odot(row, MaxScalar(long(rng.below(3))))
                              : default_pool().draw(rng);
  }
  return a;
}

std::pair<MaxMatrix, MaxMatrix> gen_shared_pair(std::size_t n,
                                                std::uint64_t seed) {
  Rng rng(seed);
  const auto& pool = default_pool();
  // Random set partition of the positions.
  std::vector<std::size_t> label(n);
  std::size_t blocks = 0;
  for (std::size_t p = 0; p < n; ++p) {
    label[p] = rng.below(blocks + 1);
    if (label[p] == blocks) ++blocks;
  }
  auto shuffled = [&]() {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  auto ascending_values = [&]() {
    std::vector<MaxScalar> v(n);
    for (auto& x : v) x = pool.draw(rng);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto a_cols = shuffled();  // label -> column of A
  const auto b_rows = shuffled();  // label -> row of B
  const auto a_order = shuffled();  // position -> row of A
  const auto b_order = shuffled();  // position -> column of B
  const auto r = ascending_values();
  const auto s = ascending_values();

  auto filler = [&](const MaxScalar& cap) {
    if (rng.chance(0.2)) return MaxScalar();
    return std::min(pool.draw(rng), cap);
  };
  MaxMatrix a(n, n), b(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t row = a_order[p];
    for (std::size_t j = 0; j < n; ++j) a(row, j) = filler(r[p]);
    a(row, a_cols[label[p]]) = r[p];
    const std::size_t col = b_order[p];
    for (std::size_t i = 0; i < n; ++i) b(i, col) = filler(s[p]);
    b(b_rows[label[p]], col) = s[p];
  }
  return {a, b};
}

Maxpolynomial gen_poly(std::size_t max_degree, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = rng.below(max_degree + 1);
  const std::size_t run = rng.chance(0.3) ? rng.below(d + 1) : 0;
  std::vector<MaxScalar> c(d + 1);
  for (std::size_t i = run; i <= d; ++i) {
    if (i == d || !rng.chance(0.2)) c[i] = default_pool().draw(rng);
  }
  return Maxpolynomial(std::move(c));
}

Maxpolynomial gen_fcf_poly(std::size_t max_degree, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = rng.below(max_degree + 1);
  RootList rs(d);
  for (auto& x : rs) {
    if (!rng.chance(0.15)) x = default_pool().draw(rng);
  }
  std::sort(rs.begin(), rs.end(), std::greater<>());
  return from_roots(default_pool().draw(rng), rs);
}

}  // namespace maxconv::oracle
