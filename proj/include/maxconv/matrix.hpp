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

#ifndef MAXCONV_MATRIX_HPP_
#define MAXCONV_MATRIX_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "maxconv/scalar.hpp"

namespace maxconv {

/// Dense row-major matrix over the max-plus semiring.
class MaxMatrix {
 public:
  MaxMatrix() = default;
  /// rows x cols matrix of ε.
  MaxMatrix(std::size_t rows, std::size_t cols);
  MaxMatrix(std::size_t rows, std::size_t cols, std::vector<MaxScalar> data);

  /// Throws DomainError on ragged input.
  static MaxMatrix from_rows(const std::vector<std::vector<MaxScalar>>& rows);
  /// 0 on the diagonal, ε elsewhere.
  static MaxMatrix identity(std::size_t n);
  /// Every entry 0.
  static MaxMatrix zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const MaxScalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  MaxScalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const std::vector<MaxScalar>& data() const noexcept { return data_; }

  /// Submatrix on the given row and column indices.
  MaxMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  friend bool operator==(const MaxMatrix&, const MaxMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MaxScalar> data_;
};

/// A bijection of {0..n-1} in one-line notation. The associated max-plus
/// permutation matrix P has P(i, map[i]) = 0 and ε elsewhere, so that
/// (P B) row i is row map[i] of B.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `map` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t n);
  /// From 1-based one-line notation, e.g. {2, 3, 1, 4}.
  static Permutation from_one_based(const std::vector<std::size_t>& map);
  /// Throws DomainError unless m is a max-plus permutation matrix.
  static Permutation from_matrix(const MaxMatrix& m);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  Permutation inverse() const;
  MaxMatrix to_matrix() const;

  /// Advances to the next permutation in lexicographic order; false after
  /// the last one (and resets to the identity), like std::next_permutation.
  bool next();

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// 1-based one-line notation, "[2, 3, 1, 4]".
std::string to_string(const Permutation& p);

MaxMatrix mat_add(const MaxMatrix& a, const MaxMatrix& b);
MaxMatrix mat_mul(const MaxMatrix& a, const MaxMatrix& b);
MaxMatrix transpose(const MaxMatrix& a);
MaxMatrix mat_hadamard(const MaxMatrix& a, const MaxMatrix& b);
/// Entrywise t·a_ij for t > 0.
MaxMatrix mat_hpow(const MaxMatrix& a, const Rational& t);

/// P_p B without forming P: row i of the result is row p[i] of b.
MaxMatrix permute_rows(const MaxMatrix& b, const Permutation& p);
/// M Q_q without forming Q: column q[j] of the result is column j of m.
MaxMatrix permute_cols(const MaxMatrix& m, const Permutation& q);

/// Maximal weights of matchings of every cardinality k = 0..min(rows, cols)
/// in the bipartite graph whose edges are the finite entries (the
/// k-cardinality assignment problem). Entry k is ε when no k-matching
/// exists. Computed by successive shortest augmenting paths.
std::vector<MaxScalar> assignment_profile(const MaxMatrix& a);

/// Max-plus permanent via maximum-weight perfect matching.
MaxScalar permanent(const MaxMatrix& a);

/// η_k: maximal permanent over all k x k submatrices.
MaxScalar eta(const MaxMatrix& a, std::size_t k);

inline constexpr std::size_t kDefaultDeltaCap = 12;

/// δ_0..δ_n: maximal principal minors, by enumeration of all index subsets
/// (each inner permanent via matching). Throws CapExceeded for n > cap.
std::vector<MaxScalar> delta_profile(const MaxMatrix& a,
                                     std::size_t cap = kDefaultDeltaCap);

/// δ_k: maximal principal minor of order k.
MaxScalar delta(const MaxMatrix& a, std::size_t k,
                std::size_t cap = kDefaultDeltaCap);

/// Maximal entry.
MaxScalar norm(const MaxMatrix& a);

/// Largest root of the characteristic maxpolynomial.
MaxScalar nu(const MaxMatrix& a, std::size_t cap = kDefaultDeltaCap);

// Canonical file form:
//   {
//     "rows": 2,
//     "cols": 2,
//     "data": [
//       ["0", "10"],
//       ["10", "0"]
//     ]
//   }
// parse_matrix also accepts numbers in "data" and a plain whitespace grid
// with one row per line.

std::string format_matrix(const MaxMatrix& a);
MaxMatrix parse_matrix(std::string_view text);

std::ostream& operator<<(std::ostream& os, const MaxMatrix& a);

}  // namespace maxconv

#endif  // MAXCONV_MATRIX_HPP_
