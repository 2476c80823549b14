// Copyright 2026 The entbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Multipartite pure states, density matrices and subspaces.
//
// Amplitudes are stored in Kronecker order: the multi-index (i_1, ..., i_M)
// maps to i_1 * (d_2 ... d_M) + ... + i_M, so party 1 varies slowest.

#include <cstddef>
#include <span>
#include <vector>

#include "entbasis/numeric.hpp"

namespace entbasis {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kProductTol = 1e-8;

/// Per-party local dimensions. At least two parties, each of dimension >= 2.
class PartyDims {
 public:
  explicit PartyDims(std::vector<int> dims);

  std::size_t parties() const noexcept { return dims_.size(); }
  int dim(std::size_t party) const { return dims_.at(party); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t total() const noexcept { return total_; }

  /// Stride of a party in the flat amplitude index.
  std::size_t stride(std::size_t party) const { return strides_.at(party); }

  /// Digit of `party` in the flat index.
  int digit(std::size_t index, std::size_t party) const {
    return static_cast<int>((index / strides_[party]) %
                            static_cast<std::size_t>(dims_[party]));
  }

  /// Sum of (d_i - 1) over parties.
  std::size_t excess() const noexcept;

  /// Smallest possible size of an unextendible product basis: excess() + 1.
  std::size_t min_upb_size() const noexcept { return excess() + 1; }

  /// Largest dimension a subspace may have and still be the complement of a
  /// UPB: N - excess() - 1. Negative values are clamped to zero.
  std::size_t max_exact_entanglement_dim() const noexcept;

  friend bool operator==(const PartyDims&, const PartyDims&) = default;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// A unit-norm pure state.
class Ket {
 public:
  /// Takes ownership of already-normalized amplitudes; throws NotNormalized if
  /// the norm is off by more than kNormTol.
  Ket(PartyDims dims, ComplexVector amplitudes);

  /// Divides by the computed norm. Throws NotNormalized for a zero vector.
  static Ket normalized(PartyDims dims, ComplexVector amplitudes);

  const PartyDims& party_dims() const noexcept { return dims_; }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  std::size_t dim() const noexcept { return dims_.total(); }

  /// <this|other>
  Complex inner(const Ket& other) const;

 private:
  PartyDims dims_;
  ComplexVector amps_;
};

/// Hermitian, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  /// Validates the invariants (Hermitian within 1e-10, eigenvalues >= -1e-10,
  /// trace 1 within 1e-10).
  DensityMatrix(PartyDims dims, ComplexMatrix matrix);

  const PartyDims& party_dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  PartyDims dims_;
  ComplexMatrix m_;
};

/// A subspace held as an orthonormal spanning set plus its projector.
class Subspace {
 public:
  /// `basis` must be orthonormal within 1e-10 (NotOrthonormal otherwise).
  Subspace(PartyDims dims, std::vector<Ket> basis);

  /// Orthonormalizes an arbitrary spanning set; linearly dependent vectors
  /// (residual below tol) are dropped.
  static Subspace span_of(PartyDims dims, std::span<const ComplexVector> vectors,
                          double tol = 1e-10);

  /// The orthogonal complement of span(kets) in the full space.
  static Subspace complement_of(PartyDims dims, std::span<const Ket> kets,
                                double tol = 1e-10);

  const PartyDims& party_dims() const noexcept { return dims_; }
  const std::vector<Ket>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const ComplexMatrix& projector() const noexcept { return projector_; }

  /// N x k matrix whose columns are the basis vectors.
  const ComplexMatrix& basis_matrix() const noexcept { return columns_; }

  /// <v|P|v>
  double expectation(const ComplexVector& v) const;

 private:
  PartyDims dims_;
  std::vector<Ket> basis_;
  ComplexMatrix columns_;
  ComplexMatrix projector_;
};

/// Kronecker product of one single-party vector per party, in party order.
/// Each factor must have the matching local dimension and unit norm.
Ket tensor_product(const PartyDims& dims,
                   std::span<const ComplexVector> factors);

/// Reshapes the amplitudes into a (prod_{i in A} d_i) x (prod_{i not in A} d_i)
/// matrix, rows indexed by the parties in `subset` (in party order).
ComplexMatrix bipartition_matrix(const Ket& state,
                                 std::span<const std::size_t> subset);

/// Singular values of bipartition_matrix, descending. Throws
/// InvalidBipartition unless `subset` is a proper nonempty set of valid,
/// distinct parties.
RealVector schmidt_coefficients(const Ket& state,
                                std::span<const std::size_t> subset);

struct ProductTest {
  bool is_product = false;
  // Second Schmidt coefficient for each party-vs-rest split, in party order.
  std::vector<double> second_coefficients;
};

/// A pure state is a full product iff every single-party-vs-rest split has
/// Schmidt rank one.
ProductTest is_product_state(const Ket& state, double tol = kProductTol);

/// Transposes the tensor factor of `party`. Works on any N x N operator.
ComplexMatrix partial_transpose(const ComplexMatrix& op, const PartyDims& dims,
                                std::size_t party);
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party);

/// Sum of |k><k| over the kets.
ComplexMatrix projector_onto(std::span<const Ket> kets);

/// (1/k) sum_j |phi_j><phi_j| over an orthonormal, nonempty set.
DensityMatrix uniform_mixture(std::span<const Ket> states);

/// (1/(N - n)) (I - sum_j |phi_j><phi_j|) for n orthonormal states, n < N.
DensityMatrix complement_mixture(const PartyDims& dims,
                                 std::span<const Ket> excluded);

/// Max |<a|b> - delta_ab| over the set.
double orthonormality_residual(std::span<const Ket> kets);

void require_orthonormal(std::span<const Ket> kets, double tol,
                         const char* what);

}  // namespace entbasis
