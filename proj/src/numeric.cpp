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

#include "entbasis/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbasis/error.hpp"

namespace entbasis {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", expected square");
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::NonFinite, std::string(what) + ": non-finite entry");
  }
}

void require_hermitian(const ComplexMatrix& m, double herm_tol) {
  require_square(m, "hermitian_eigen");
  require_finite(m, "hermitian_eigen");
  const double residual = hermiticity_residual(m);
  if (residual > herm_tol) {
    throw Error(ErrorCode::NotHermitian,
                "hermitian_eigen: ||m - m^dagger||_max = " +
                    std::to_string(residual));
  }
}

// Projects v against the orthonormal columns collected so far.
void project_out(ComplexVector& v, const std::vector<ComplexVector>& basis) {
  for (const auto& b : basis) v -= b * b.dot(v);
}

}  // namespace

bool all_finite(const ComplexMatrix& m) noexcept {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

double max_abs(const ComplexMatrix& m) noexcept {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  return max_abs(m - m.adjoint());
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double herm_tol) {
  require_hermitian(m, herm_tol);
  // Symmetrize so round-off in the lower triangle does not leak into the
  // solver, which only reads one triangle.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol) {
  require_hermitian(m, herm_tol);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();  // Eigen returns them descending
}

GramSchmidtResult gram_schmidt(std::span<const ComplexVector> candidates,
                               std::span<const ComplexVector> against,
                               double tol) {
  std::vector<ComplexVector> basis(against.begin(), against.end());
  Eigen::Index dim = -1;
  auto check_dim = [&dim](const ComplexVector& v) {
    if (dim < 0) dim = v.size();
    if (v.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "gram_schmidt: vectors of length " + std::to_string(dim) +
                      " and " + std::to_string(v.size()));
    }
  };
  for (const auto& a : against) check_dim(a);
  for (const auto& c : candidates) check_dim(c);

  GramSchmidtResult out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ComplexVector v = candidates[i];
    project_out(v, basis);
    project_out(v, basis);  // re-orthogonalization pass
    const double norm = v.norm();
    if (norm < tol) {
      out.dropped.push_back(i);
      continue;
    }
    v /= norm;
    basis.push_back(v);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<ComplexVector> orthonormal_complement(
    std::span<const ComplexVector> basis, std::size_t ambient_dim, double tol) {
  const auto n = static_cast<Eigen::Index>(ambient_dim);
  if (basis.empty()) {
    std::vector<ComplexVector> out;
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(ComplexVector::Unit(n, i));
    return out;
  }
  const ComplexMatrix a = column_matrix(basis, ambient_dim);
  if (a.cols() > n) {
    throw Error(ErrorCode::RankDeficient,
                "orthonormal_complement: " + std::to_string(a.cols()) +
                    " vectors in dimension " + std::to_string(n));
  }
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a);
  qr.setThreshold(tol);
  if (qr.rank() < a.cols()) {
    throw Error(ErrorCode::RankDeficient,
                "orthonormal_complement: input has rank " +
                    std::to_string(qr.rank()) + " < " +
                    std::to_string(a.cols()));
  }
  const ComplexMatrix q = qr.householderQ();
  std::vector<ComplexVector> out;
  out.reserve(static_cast<std::size_t>(n - a.cols()));
  for (Eigen::Index j = a.cols(); j < n; ++j) out.emplace_back(q.col(j));
  return out;
}

ComplexMatrix column_matrix(std::span<const ComplexVector> vectors,
                            std::size_t dim) {
  const auto rows = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(rows, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + std::to_string(j) + " has length " +
                      std::to_string(vectors[j].size()) + ", expected " +
                      std::to_string(rows));
    }
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace entbasis
