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

// Dense complex linear algebra used by the rest of the library. Nothing in
// here knows about parties or entanglement.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace entbasis {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenTol = 1e-10;

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // column k pairs with values[k]
};

bool all_finite(const ComplexMatrix& m) noexcept;

/// Largest |entry|; zero for an empty matrix.
double max_abs(const ComplexMatrix& m) noexcept;

/// Max-entry distance between m and its adjoint.
double hermiticity_residual(const ComplexMatrix& m);

/// Eigen-decomposition of a Hermitian matrix. Throws DimensionMismatch for a
/// non-square input, NotHermitian if ||m - m^dagger||_max exceeds herm_tol and
/// NonFinite on NaN/Inf entries.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m,
                                   double herm_tol = kHermitianTol);

/// Eigenvalues only, ascending. Same preconditions as hermitian_eigen.
RealVector hermitian_eigenvalues(const ComplexMatrix& m,
                                 double herm_tol = kHermitianTol);

/// Singular values in descending order.
RealVector singular_values(const ComplexMatrix& m);

struct GramSchmidtResult {
  std::vector<ComplexVector> vectors;
  // Indices into `candidates` whose residual fell below tol.
  std::vector<std::size_t> dropped;
};

/// Orthonormalizes `candidates` in order against `against` and against each
/// other, with two projection passes per candidate. Candidates whose residual
/// norm after projection is below tol are dropped and listed in the result.
GramSchmidtResult gram_schmidt(std::span<const ComplexVector> candidates,
                               std::span<const ComplexVector> against,
                               double tol);

/// An orthonormal basis of the orthogonal complement of span(basis) inside
/// C^ambient_dim. Throws RankDeficient if the inputs are not linearly
/// independent within tol.
std::vector<ComplexVector> orthonormal_complement(
    std::span<const ComplexVector> basis, std::size_t ambient_dim, double tol);

/// Stacks vectors as the columns of a matrix. All must share one dimension.
ComplexMatrix column_matrix(std::span<const ComplexVector> vectors,
                            std::size_t dim);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace entbasis
