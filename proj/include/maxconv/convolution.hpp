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

#ifndef MAXCONV_CONVOLUTION_HPP_
#define MAXCONV_CONVOLUTION_HPP_

// Matrix-side right-hand sides of the convolution identities. Each one is a
// finite maximum over permutation matrices, computed by exhaustive
// enumeration; the left-hand sides come from the polynomial module.

#include <cstddef>
#include <vector>

#include "maxconv/matrix.hpp"
#include "maxconv/poly.hpp"
#include "maxconv/spectra.hpp"

namespace maxconv {

/// Limits on the matrix order for (n!)² and n! enumerations.
inline constexpr std::size_t kDefaultPairCap = 5;
inline constexpr std::size_t kDefaultSingleCap = 6;

struct ConvOptions {
  /// Largest admissible order; 0 selects the operation's default.
  std::size_t max_order = 0;
  /// Record, per coefficient, the first permutations attaining it.
  bool certificate = false;
};

struct ConvResult {
  Maxpolynomial poly;
  /// certificate[i] lists the permutations (P, Q, ... in the order the
  /// operation names them) first attaining the coefficient of x^i. Empty
  /// unless requested; an ε coefficient has an empty entry.
  std::vector<std::vector<Permutation>> certificate;
};

/// ⊕_{P,Q} χ̃_{A ⊕ PBQ}. Equals max_convolve(χ̃_A, χ̃_B, n).
ConvResult additive_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                             const ConvOptions& opts = {});

/// ⊕ over all (P_1, Q_1, ..., P_k, Q_k) of
/// perm(x0 ⊕ A_0 ⊕ P_1 A_1 Q_1 ⊕ ... ⊕ P_k A_k Q_k). The cap bounds the
/// total tuple count by (cap!)².
ConvResult additive_conv_multi(const std::vector<MaxMatrix>& matrices,
                               const ConvOptions& opts = {});

/// ⊕_P χ_{A ⊕ PBPᵀ} without checking principal dominance.
ConvResult conjugation_char_max(const MaxMatrix& a, const MaxMatrix& b,
                                const ConvOptions& opts = {});

/// conjugation_char_max for principally dominant A and B (checked; the
/// DomainError names the matrix and the first failing order k).
ConvResult pd_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                       const ConvOptions& opts = {});

/// ⊕_P gram_char_poly((A ⊕ PB)ᵀ).
ConvResult max_row_conv(const MaxMatrix& a, const MaxMatrix& b,
                        const ConvOptions& opts = {});

/// ⊕_{P,Q} χ̃_{A ∘ PBQ}. Equals hadamard_poly(χ̃_A, χ̃_B).
ConvResult hadamard_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                             const ConvOptions& opts = {});

/// ⊕_P χ̃_{APB} without checking the partition hypothesis.
ConvResult product_full_char_max(const MaxMatrix& a, const MaxMatrix& b,
                                 const ConvOptions& opts = {});

/// ⊕_{P,Q} χ_{APBQ} without checking the partition hypothesis.
ConvResult product_char_max(const MaxMatrix& a, const MaxMatrix& b,
                            const ConvOptions& opts = {});

/// product_full_char_max for Aᵀ and B sharing a max-column partition
/// (checked; the DomainError lists both partition sets).
ConvResult mult_conv_rhs(const MaxMatrix& a, const MaxMatrix& b,
                         const ConvOptions& opts = {});

struct Orientation {
  Permutation p0;
  Permutation q0;
  SharedPartition shared;
};

/// Permutations with full_char_poly(A P0 B) = char_poly(A P0 B Q0) =
/// hadamard_poly(gram_char_poly(Aᵀ), gram_char_poly(B)).
///
/// P0 sends the chosen maximum of the i-th smallest column of B to the row
/// that matches the column holding the i-th smallest row maximum of A; Q0
/// then moves the n decoupled maxima of A P0 B onto the diagonal. Throws
/// DomainError when no shared partition exists.
Orientation orienting_permutations(const MaxMatrix& a, const MaxMatrix& b,
                                   std::size_t partition_cap = kDefaultPartitionCap);

}  // namespace maxconv

#endif  // MAXCONV_CONVOLUTION_HPP_
