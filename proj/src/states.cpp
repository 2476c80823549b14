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

#include "entbasis/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbasis/error.hpp"

namespace entbasis {

PartyDims::PartyDims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) {
    throw Error(ErrorCode::InvalidDims, "need at least two parties");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw Error(ErrorCode::InvalidDims,
                  "party dimension " + std::to_string(d) + " is below 2");
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t p = dims_.size(); p-- > 0;) {
    strides_[p] = total_;
    total_ *= static_cast<std::size_t>(dims_[p]);
  }
}

std::size_t PartyDims::excess() const noexcept {
  std::size_t s = 0;
  for (int d : dims_) s += static_cast<std::size_t>(d - 1);
  return s;
}

std::size_t PartyDims::max_exact_entanglement_dim() const noexcept {
  const std::size_t used = excess() + 1;
  return total_ > used ? total_ - used : 0;
}

Ket::Ket(PartyDims dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != dims_.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "ket has " + std::to_string(amps_.size()) +
                    " amplitudes, dims require " +
                    std::to_string(dims_.total()));
  }
  if (!all_finite(amps_)) {
    throw Error(ErrorCode::NonFinite, "ket has non-finite amplitudes");
  }
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized,
                "ket norm is " + std::to_string(norm));
  }
}

Ket Ket::normalized(PartyDims dims, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::NotNormalized, "cannot normalize a zero vector");
  }
  amplitudes /= norm;
  return Ket(std::move(dims), std::move(amplitudes));
}

Complex Ket::inner(const Ket& other) const {
  if (other.amps_.size() != amps_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "inner product of unequal kets");
  }
  return amps_.dot(other.amps_);
}

DensityMatrix::DensityMatrix(PartyDims dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), m_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(dims_.total());
  if (m_.rows() != n || m_.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "density matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  const RealVector ev = hermitian_eigenvalues(m_, 1e-10);
  if (ev.size() > 0 && ev.minCoeff() < -1e-10) {
    throw Error(ErrorCode::InvalidArgument,
                "density matrix has negative eigenvalue " +
                    std::to_string(ev.minCoeff()));
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument,
                "density matrix trace is " + std::to_string(tr));
  }
}

Subspace::Subspace(PartyDims dims, std::vector<Ket> basis)
    : dims_(std::move(dims)), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (!(b.party_dims() == dims_)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "subspace basis vector has different party dims");
    }
  }
  require_orthonormal(basis_, 1e-10, "subspace basis");
  const auto n = static_cast<Eigen::Index>(dims_.total());
  columns_.resize(n, static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j)
    columns_.col(static_cast<Eigen::Index>(j)) = basis_[j].amplitudes();
  projector_ = columns_ * columns_.adjoint();
}

Subspace Subspace::span_of(PartyDims dims,
                           std::span<const ComplexVector> vectors, double tol) {
  auto gs = gram_schmidt(vectors, {}, tol);
  std::vector<Ket> kets;
  kets.reserve(gs.vectors.size());
  for (auto& v : gs.vectors) kets.push_back(Ket::normalized(dims, std::move(v)));
  return Subspace(std::move(dims), std::move(kets));
}

Subspace Subspace::complement_of(PartyDims dims, std::span<const Ket> kets,
                                 double tol) {
  std::vector<ComplexVector> vs;
  vs.reserve(kets.size());
  for (const auto& k : kets) vs.push_back(k.amplitudes());
  auto comp = orthonormal_complement(vs, dims.total(), tol);
  std::vector<Ket> out;
  out.reserve(comp.size());
  for (auto& v : comp) out.push_back(Ket::normalized(dims, std::move(v)));
  return Subspace(std::move(dims), std::move(out));
}

double Subspace::expectation(const ComplexVector& v) const {
  if (columns_.cols() == 0) return 0.0;
  return (columns_.adjoint() * v).squaredNorm();
}

Ket tensor_product(const PartyDims& dims,
                   std::span<const ComplexVector> factors) {
  if (factors.size() != dims.parties()) {
    throw Error(ErrorCode::DimensionMismatch,
                "tensor_product: " + std::to_string(factors.size()) +
                    " factors for " + std::to_string(dims.parties()) +
                    " parties");
  }
  ComplexMatrix acc = ComplexMatrix::Ones(1, 1);
  for (std::size_t p = 0; p < factors.size(); ++p) {
    if (factors[p].size() != dims.dim(p)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "tensor_product: factor " + std::to_string(p) +
                      " has length " + std::to_string(factors[p].size()) +
                      ", party dimension is " + std::to_string(dims.dim(p)));
    }
    acc = kron(acc, factors[p]);
  }
  return Ket::normalized(dims, ComplexVector(acc.col(0)));
}

namespace {

std::vector<bool> validate_subset(const PartyDims& dims,
                                  std::span<const std::size_t> subset) {
  std::vector<bool> in_a(dims.parties(), false);
  for (std::size_t p : subset) {
    if (p >= dims.parties() || in_a[p]) {
      throw Error(ErrorCode::InvalidBipartition,
                  "bipartition lists invalid or repeated party " +
                      std::to_string(p));
    }
    in_a[p] = true;
  }
  if (subset.empty() || subset.size() == dims.parties()) {
    throw Error(ErrorCode::InvalidBipartition,
                "bipartition must be a proper nonempty subset of parties");
  }
  return in_a;
}

}  // namespace

ComplexMatrix bipartition_matrix(const Ket& state,
                                 std::span<const std::size_t> subset) {
  const PartyDims& dims = state.party_dims();
  const auto in_a = validate_subset(dims, subset);
  std::size_t rows = 1;
  std::size_t cols = 1;
  for (std::size_t p = 0; p < dims.parties(); ++p)
    (in_a[p] ? rows : cols) *= static_cast<std::size_t>(dims.dim(p));

  ComplexMatrix m(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  const ComplexVector& amps = state.amplitudes();
  for (std::size_t idx = 0; idx < dims.total(); ++idx) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (std::size_t p = 0; p < dims.parties(); ++p) {
      const auto d = static_cast<std::size_t>(dims.dim(p));
      const auto digit = static_cast<std::size_t>(dims.digit(idx, p));
      if (in_a[p]) {
        r = r * d + digit;
      } else {
        c = c * d + digit;
      }
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        amps(static_cast<Eigen::Index>(idx));
  }
  return m;
}

RealVector schmidt_coefficients(const Ket& state,
                                std::span<const std::size_t> subset) {
  return singular_values(bipartition_matrix(state, subset));
}

ProductTest is_product_state(const Ket& state, double tol) {
  ProductTest out;
  out.is_product = true;
  const std::size_t parties = state.party_dims().parties();
  for (std::size_t p = 0; p < parties; ++p) {
    const std::size_t subset[] = {p};
    const RealVector sv = schmidt_coefficients(state, subset);
    const double second = sv.size() > 1 ? sv(1) : 0.0;
    out.second_coefficients.push_back(second);
    if (!(second < tol)) out.is_product = false;
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& op, const PartyDims& dims,
                                std::size_t party) {
  if (party >= dims.parties()) {
    throw Error(ErrorCode::InvalidParty,
                "party " + std::to_string(party) + " out of range");
  }
  const auto n = static_cast<Eigen::Index>(dims.total());
  if (op.rows() != n || op.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_transpose: operator is not " + std::to_string(n) +
                    "x" + std::to_string(n));
  }
  const std::size_t stride = dims.stride(party);
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < dims.total(); ++i) {
    const auto di = static_cast<std::size_t>(dims.digit(i, party));
    for (std::size_t j = 0; j < dims.total(); ++j) {
      const auto dj = static_cast<std::size_t>(dims.digit(j, party));
      // Swap the party's row and column digits.
      const std::size_t ti = i - di * stride + dj * stride;
      const std::size_t tj = j - dj * stride + di * stride;
      out(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(tj)) =
          op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party) {
  return partial_transpose(rho.matrix(), rho.party_dims(), party);
}

ComplexMatrix projector_onto(std::span<const Ket> kets) {
  if (kets.empty()) return ComplexMatrix();
  const auto n = static_cast<Eigen::Index>(kets.front().dim());
  ComplexMatrix cols(n, static_cast<Eigen::Index>(kets.size()));
  for (std::size_t j = 0; j < kets.size(); ++j) {
    if (kets[j].amplitudes().size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "projector over unequal kets");
    }
    cols.col(static_cast<Eigen::Index>(j)) = kets[j].amplitudes();
  }
  return cols * cols.adjoint();
}

DensityMatrix uniform_mixture(std::span<const Ket> states) {
  if (states.empty()) {
    throw Error(ErrorCode::InvalidArgument, "uniform_mixture of no states");
  }
  require_orthonormal(states, 1e-9, "uniform_mixture");
  ComplexMatrix m = projector_onto(states) / static_cast<double>(states.size());
  return DensityMatrix(states.front().party_dims(), std::move(m));
}

DensityMatrix complement_mixture(const PartyDims& dims,
                                 std::span<const Ket> excluded) {
  const std::size_t n = dims.total();
  if (excluded.size() >= n) {
    throw Error(ErrorCode::InvalidArgument,
                "complement_mixture: excluded set spans the whole space");
  }
  require_orthonormal(excluded, 1e-9, "complement_mixture");
  const auto nn = static_cast<Eigen::Index>(n);
  ComplexMatrix m = ComplexMatrix::Identity(nn, nn);
  if (!excluded.empty()) m -= projector_onto(excluded);
  m /= static_cast<double>(n - excluded.size());
  return DensityMatrix(dims, std::move(m));
}

double orthonormality_residual(std::span<const Ket> kets) {
  double worst = 0.0;
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = i; j < kets.size(); ++j) {
      const Complex g = kets[i].inner(kets[j]);
      const double dev = std::abs(i == j ? g - 1.0 : g);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

void require_orthonormal(std::span<const Ket> kets, double tol,
                         const char* what) {
  const double residual = orthonormality_residual(kets);
  if (residual > tol) {
    throw Error(ErrorCode::NotOrthonormal,
                std::string(what) + ": orthonormality residual " +
                    std::to_string(residual));
  }
}

}  // namespace entbasis
