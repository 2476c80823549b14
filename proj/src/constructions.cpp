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

#include "entbasis/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entbasis/error.hpp"

namespace entbasis {

namespace {

ComplexVector unit(int dim, int index) {
  return ComplexVector::Unit(dim, index);
}

ComplexVector local(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Complex& c : entries) v(i++) = c;
  return v;
}

Ket product_of(const PartyDims& dims, std::vector<ComplexVector> factors) {
  for (auto& f : factors) f.normalize();
  return tensor_product(dims, factors);
}

}  // namespace

Basis::Basis(PartyDims dims, std::vector<Ket> members,
             std::vector<std::string> labels, double tol)
    : dims_(std::move(dims)),
      members_(std::move(members)),
      labels_(std::move(labels)) {
  if (members_.size() > dims_.total()) {
    throw Error(ErrorCode::DimensionMismatch,
                "basis has " + std::to_string(members_.size()) +
                    " members in dimension " + std::to_string(dims_.total()));
  }
  for (const auto& m : members_) {
    if (!(m.party_dims() == dims_)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "basis member has different party dims");
    }
  }
  if (!labels_.empty() && labels_.size() != members_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "basis has " + std::to_string(labels_.size()) +
                    " labels for " + std::to_string(members_.size()) +
                    " members");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < members_.size(); ++i)
      labels_.push_back(std::to_string(i));
  }
  require_orthonormal(members_, tol, "basis");
}

Basis standard_basis(const PartyDims& dims) {
  std::vector<Ket> members;
  std::vector<std::string> labels;
  const auto n = static_cast<Eigen::Index>(dims.total());
  for (Eigen::Index i = 0; i < n; ++i) {
    members.emplace_back(dims, ComplexVector::Unit(n, i));
    std::string label = "|";
    for (std::size_t p = 0; p < dims.parties(); ++p) {
      if (p > 0) label += ',';
      label += std::to_string(dims.digit(static_cast<std::size_t>(i), p));
    }
    labels.push_back(label + ">");
  }
  return Basis(dims, std::move(members), std::move(labels));
}

Basis bell_basis() {
  const PartyDims dims({2, 2});
  const double r = std::numbers::sqrt2 / 2.0;
  auto make = [&](Complex a00, Complex a01, Complex a10, Complex a11) {
    ComplexVector v(4);
    v << a00, a01, a10, a11;
    return Ket(dims, v);
  };
  std::vector<Ket> members = {
      make(r, 0, 0, r),
      make(r, 0, 0, -r),
      make(0, r, r, 0),
      make(0, r, -r, 0),
  };
  return Basis(dims, std::move(members), {"Phi+", "Phi-", "Psi+", "Psi-"});
}

Basis tiles_3x3() {
  const PartyDims dims({3, 3});
  std::vector<Ket> members = {
      product_of(dims, {local({1, 0, 0}), local({1, -1, 0})}),
      product_of(dims, {local({1, -1, 0}), local({0, 0, 1})}),
      product_of(dims, {local({0, 0, 1}), local({0, 1, -1})}),
      product_of(dims, {local({0, 1, -1}), local({1, 0, 0})}),
      product_of(dims, {local({1, 1, 1}), local({1, 1, 1})}),
  };
  return Basis(dims, std::move(members),
               {"tile0", "tile1", "tile2", "tile3", "stopper"});
}

Basis shifts_2x2x2() {
  const PartyDims dims({2, 2, 2});
  const ComplexVector zero = local({1, 0});
  const ComplexVector one = local({0, 1});
  const ComplexVector plus = local({1, 1});
  const ComplexVector minus = local({1, -1});
  std::vector<Ket> members = {
      product_of(dims, {zero, one, plus}),
      product_of(dims, {one, plus, zero}),
      product_of(dims, {plus, zero, one}),
      product_of(dims, {minus, minus, minus}),
  };
  return Basis(dims, std::move(members), {"|0,1,+>", "|1,+,0>", "|+,0,1>",
                                          "|-,-,->"});
}

Basis gentiles1(int n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorCode::InvalidN, "n must be even and ≥ 4");
  }
  const PartyDims dims({n, n});
  const int half = n / 2;
  const Complex omega = std::polar(1.0, 4.0 * std::numbers::pi / n);

  // |omega_{m,k}> = sum_{j<n/2} omega^{jm} |j + k mod n>
  auto omega_vec = [&](int m, int k) {
    ComplexVector v = ComplexVector::Zero(n);
    for (int j = 0; j < half; ++j) v((j + k) % n) += std::pow(omega, j * m);
    return v;
  };

  std::vector<Ket> members;
  std::vector<std::string> labels;
  for (int m = 1; m < half; ++m) {
    for (int k = 0; k < n; ++k) {
      members.push_back(product_of(dims, {unit(n, k), omega_vec(m, k + 1)}));
      labels.push_back("V[" + std::to_string(m) + "," + std::to_string(k) + "]");
    }
  }
  for (int m = 1; m < half; ++m) {
    for (int k = 0; k < n; ++k) {
      members.push_back(product_of(dims, {omega_vec(m, k), unit(n, k)}));
      labels.push_back("H[" + std::to_string(m) + "," + std::to_string(k) + "]");
    }
  }
  const ComplexVector ones = ComplexVector::Ones(n);
  members.push_back(product_of(dims, {ones, ones}));
  labels.push_back("F");
  return Basis(dims, std::move(members), std::move(labels));
}

CompletedBasis complete_to_full_basis(
    const Basis& partial, const std::optional<std::vector<Ket>>& candidates) {
  const PartyDims& dims = partial.party_dims();
  const std::size_t total = dims.total();
  const auto n = static_cast<Eigen::Index>(total);
  constexpr double kResidualTol = 1e-8;

  std::vector<ComplexVector> span;
  for (const auto& m : partial.members()) span.push_back(m.amplitudes());

  std::vector<ComplexVector> added;
  if (candidates) {
    // Explicit candidates are orthogonalized in the order given.
    std::vector<ComplexVector> pool;
    for (const auto& c : *candidates) pool.push_back(c.amplitudes());
    auto gs = gram_schmidt(pool, span, kResidualTol);
    added = std::move(gs.vectors);
    if (span.size() + added.size() < total) {
      throw Error(ErrorCode::RankDeficient,
                  "candidates reach rank " +
                      std::to_string(span.size() + added.size()) + " of " +
                      std::to_string(total));
    }
    added.resize(total - span.size());
  } else {
    std::vector<bool> used(total, false);
    while (span.size() < total) {
      // Take the computational state with the largest residual.
      Eigen::Index best = -1;
      double best_norm = kResidualTol;
      ComplexVector best_residual;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        ComplexVector r = ComplexVector::Unit(n, c);
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& s : span) r -= s * s.dot(r);
        const double norm = r.norm();
        if (norm > best_norm) {
          best_norm = norm;
          best = c;
          best_residual = std::move(r);
        }
      }
      if (best < 0) {
        throw Error(ErrorCode::RankDeficient,
                    "candidates reach rank " + std::to_string(span.size()) +
                        " of " + std::to_string(total));
      }
      used[static_cast<std::size_t>(best)] = true;
      best_residual /= best_norm;
      span.push_back(best_residual);
      added.push_back(std::move(best_residual));
    }
  }

  std::vector<Ket> members = partial.members();
  std::vector<std::string> labels = partial.labels();
  for (std::size_t r = 0; r < added.size(); ++r) {
    members.push_back(Ket::normalized(dims, std::move(added[r])));
    labels.push_back("phi[" + std::to_string(r) + "]");
  }
  const std::size_t split = partial.size();
  return {Basis(dims, std::move(members), std::move(labels), 1e-9), split};
}

double completeness_residual(std::span<const Ket> kets, const PartyDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  if (!kets.empty()) sum = projector_onto(kets);
  return max_abs(sum - ComplexMatrix::Identity(n, n));
}

BasisReport verify_basis(std::span<const Ket> members, const PartyDims& dims,
                         double product_tol) {
  BasisReport r;
  r.size = members.size();
  r.total_dim = dims.total();
  r.complete = members.size() == dims.total();
  r.orthonormality_residual = orthonormality_residual(members);
  if (r.complete) r.completeness_residual = completeness_residual(members, dims);
  for (const auto& m : members) {
    const ProductTest t = is_product_state(m, product_tol);
    r.product_flags.push_back(t.is_product);
    r.second_schmidt.push_back(*std::max_element(
        t.second_coefficients.begin(), t.second_coefficients.end()));
  }
  return r;
}

BasisReport verify_basis(const Basis& b, double product_tol) {
  return verify_basis(b.members(), b.party_dims(), product_tol);
}

}  // namespace entbasis
