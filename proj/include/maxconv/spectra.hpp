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

#ifndef MAXCONV_SPECTRA_HPP_
#define MAXCONV_SPECTRA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxconv/matrix.hpp"
#include "maxconv/poly.hpp"

namespace maxconv {

/// χ_A(x) = perm(xI ⊕ A); the coefficient of x^{n-k} is δ_k(A).
Maxpolynomial char_poly(const MaxMatrix& a, std::size_t cap = kDefaultDeltaCap);

/// χ̃_A(x) = perm(x0 ⊕ A); the coefficient of x^{n-k} is η_k(A). Always FCF.
Maxpolynomial full_char_poly(const MaxMatrix& a);

/// AᵀA.
MaxMatrix gram(const MaxMatrix& a);

/// (AᵀA)^{∘1/2}.
MaxMatrix hat(const MaxMatrix& a);

/// Largest element of each column (ε for an all-ε column).
std::vector<MaxScalar> column_maxima(const MaxMatrix& a);

/// χ of hat(A): the FCF polynomial whose roots are the column maxima of A.
Maxpolynomial gram_char_poly(const MaxMatrix& a);

/// perm(AᵀA), computed by matching on the Gram matrix.
MaxScalar gram_permanent(const MaxMatrix& a);

/// ⟨u, v⟩ = max_i (u_i + v_i).
MaxScalar inner_product(const std::vector<MaxScalar>& u,
                        const std::vector<MaxScalar>& v);

/// The smallest order k with δ_k(A) ≠ η_k(A), if any.
std::optional<std::size_t> dominance_failure(const MaxMatrix& a,
                                             std::size_t cap = kDefaultDeltaCap);

/// δ_k(A) = η_k(A) for every k.
bool is_principally_dominant(const MaxMatrix& a,
                             std::size_t cap = kDefaultDeltaCap);

/// A max-column partition with the argmax choices that realise it.
///
/// Sorted position p (0-based here, 1-based in `blocks`) refers to column
/// order[p]; the column maxima are ascending along p and the chosen maximum
/// of column order[p] sits in row max_rows[p]. Positions share a block iff
/// their max_rows coincide.
struct ColumnPartition {
  std::vector<std::vector<std::size_t>> blocks;  // 1-based, canonical order
  std::vector<std::size_t> order;
  std::vector<std::size_t> max_rows;

  bool same_blocks(const ColumnPartition& other) const {
    return blocks == other.blocks;
  }
};

/// Canonical blocks (sorted blocks, sorted by first element) of the
/// equality pattern of `labels`.
std::vector<std::vector<std::size_t>> blocks_of(
    const std::vector<std::size_t>& labels);

struct PartitionSet {
  std::vector<ColumnPartition> partitions;  // sorted by blocks
  bool truncated = false;
};

inline constexpr std::size_t kDefaultPartitionCap = 1024;

/// Every distinct max-column partition of m over all argmax choices and all
/// ascending orders of tied column maxima; stops after `cap` partitions.
PartitionSet max_column_partitions(const MaxMatrix& m,
                                   std::size_t cap = kDefaultPartitionCap);

struct SharedPartition {
  ColumnPartition a_side;  // a max-column partition of Aᵀ
  ColumnPartition b_side;  // the same blocks, as a partition of B
};

/// A common max-column partition of Aᵀ and B, if one exists.
std::optional<SharedPartition> shared_partition(
    const MaxMatrix& a, const MaxMatrix& b,
    std::size_t cap = kDefaultPartitionCap);

/// "[[1], [2, 4], [3]]"
std::string to_string(const std::vector<std::vector<std::size_t>>& blocks);

}  // namespace maxconv

#endif  // MAXCONV_SPECTRA_HPP_
