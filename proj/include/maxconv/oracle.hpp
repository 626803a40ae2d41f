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

#ifndef MAXCONV_ORACLE_HPP_
#define MAXCONV_ORACLE_HPP_

// Definitional brute-force references and seeded generators for the
// property tests and the `--oracle` CLI path. Nothing here calls the
// matching, hull, or partition-search code it is used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "maxconv/matrix.hpp"
#include "maxconv/poly.hpp"
#include "maxconv/spectra.hpp"

namespace maxconv::oracle {

inline constexpr std::size_t kHardCap = 8;
inline constexpr std::size_t kPartitionHardCap = 6;

/// ⊕ over all permutations of the diagonal sums. n <= kHardCap.
MaxScalar permanent_bf(const MaxMatrix& a);

/// ⊕ of perm(A_{I,J}) over all |I| = |J| = k.
MaxScalar eta_bf(const MaxMatrix& a, std::size_t k);

/// ⊕ of perm(A_{I,I}) over all |I| = k.
MaxScalar delta_bf(const MaxMatrix& a, std::size_t k);

/// Roots from the pointwise definition: candidate crossings where the
/// maximum is attained at least twice, multiplicity max |i - j| over the
/// attaining indices, plus one ε root per leading ε coefficient.
RootList roots_bf(const Maxpolynomial& p);

/// Max-column partitions by full enumeration of argmax choices and
/// ascending column orders. n <= kPartitionHardCap.
PartitionSet column_partitions_bf(const MaxMatrix& m);

/// Platform-independent draws from a 64-bit Mersenne twister.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// True with probability p (resolution 2^-32).
  bool chance(double p);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the index-th instance of a run seeded with `base`.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

/// Finite values drawn by the generators.
struct EntryPool {
  std::vector<MaxScalar> values;

  /// {lo, lo + 1, ..., hi}
  static EntryPool integers(long lo, long hi);
  const MaxScalar& draw(Rng& rng) const;
};

/// The integers -3..10: small enough that ties are frequent.
const EntryPool& default_pool();

MaxMatrix gen_matrix(std::size_t n, const EntryPool& pool, double eps_prob,
                     std::uint64_t seed);

/// Diagonally dominant (each diagonal entry is a maximum of its row), hence
/// principally dominant.
MaxMatrix gen_pd_matrix(std::size_t n, std::uint64_t seed);

/// (A, B) with a planted max-column partition shared by Aᵀ and B.
std::pair<MaxMatrix, MaxMatrix> gen_shared_pair(std::size_t n, std::uint64_t seed);

/// Degree in [0, max_degree], random coefficients from the default pool
/// with interior ε entries and a random leading ε-run.
Maxpolynomial gen_poly(std::size_t max_degree, std::uint64_t seed);

/// An FCF polynomial built from random roots (ε roots included) and a
/// random leading coefficient.
Maxpolynomial gen_fcf_poly(std::size_t max_degree, std::uint64_t seed);

}  // namespace maxconv::oracle

#endif  // MAXCONV_ORACLE_HPP_
