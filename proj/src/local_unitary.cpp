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

#include "entbasis/local_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "entbasis/error.hpp"

namespace entbasis {

LocalUnitary::LocalUnitary(PartyDims dims, std::vector<ComplexMatrix> factors)
    : dims_(std::move(dims)), factors_(std::move(factors)) {
  if (factors_.size() != dims_.parties()) {
    throw Error(ErrorCode::DimensionMismatch,
                "local unitary needs one factor per party");
  }
  for (std::size_t p = 0; p < factors_.size(); ++p) {
    const auto d = static_cast<Eigen::Index>(dims_.dim(p));
    if (factors_[p].rows() != d || factors_[p].cols() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "factor " + std::to_string(p) + " is not " +
                      std::to_string(d) + "x" + std::to_string(d));
    }
    const double dev = max_abs(factors_[p].adjoint() * factors_[p] -
                               ComplexMatrix::Identity(d, d));
    if (dev > 1e-10) {
      throw Error(ErrorCode::InvalidArgument,
                  "factor " + std::to_string(p) +
                      " is not unitary (residual " + std::to_string(dev) + ")");
    }
  }
}

LocalUnitary LocalUnitary::identity(const PartyDims& dims) {
  std::vector<ComplexMatrix> f;
  for (int d : dims.dims()) f.push_back(ComplexMatrix::Identity(d, d));
  return LocalUnitary(dims, std::move(f));
}

ComplexMatrix LocalUnitary::matrix() const {
  ComplexMatrix acc = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors_) acc = kron(acc, f);
  return acc;
}

Ket LocalUnitary::apply(const Ket& k) const {
  if (!(k.party_dims() == dims_)) {
    throw Error(ErrorCode::DimensionMismatch,
                "local unitary and ket have different party dims");
  }
  return Ket::normalized(dims_, matrix() * k.amplitudes());
}

ComplexMatrix LocalUnitary::conjugate(const ComplexMatrix& op) const {
  const ComplexMatrix g = matrix();
  return g * op * g.adjoint();
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= a > 0.0 ? rjj / a : Complex(1.0, 0.0);
  }
  return q;
}

LocalUnitary random_local_unitary(const PartyDims& dims, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 master(seq);
  std::vector<ComplexMatrix> f;
  for (int d : dims.dims()) f.push_back(haar_unitary(d, master()));
  return LocalUnitary(dims, std::move(f));
}

Basis apply_local_unitary(const LocalUnitary& g, const Basis& b) {
  if (!(g.party_dims() == b.party_dims())) {
    throw Error(ErrorCode::DimensionMismatch,
                "local unitary and basis have different party dims");
  }
  const ComplexMatrix u = g.matrix();
  std::vector<Ket> mapped;
  mapped.reserve(b.size());
  for (const auto& m : b.members())
    mapped.push_back(Ket::normalized(b.party_dims(), u * m.amplitudes()));
  return Basis(b.party_dims(), std::move(mapped), b.labels(), 1e-9);
}

LuInvarianceReport lu_invariance_check(const Basis& b, int trials,
                                       std::uint64_t seed,
                                       const SearchOptions& opts) {
  if (!b.is_complete()) {
    throw Error(ErrorCode::IncompleteBasis,
                "basis incomplete (" + std::to_string(b.size()) + " of " +
                    std::to_string(b.party_dims().total()) + ")");
  }
  LuInvarianceReport rep;
  rep.trials = trials;
  rep.base_kind = classify_basis(b, opts).kind;
  const std::size_t parties = b.party_dims().parties();
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < trials; ++t) {
    LuTrial trial;
    trial.seed = seeds();
    const LocalUnitary g = random_local_unitary(b.party_dims(), trial.seed);
    const Basis mapped = apply_local_unitary(g, b);

    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t p = 0; p < parties; ++p) {
        const std::size_t split[] = {p};
        const RealVector before = schmidt_coefficients(b.members()[i], split);
        const RealVector after = schmidt_coefficients(mapped.members()[i], split);
        trial.max_schmidt_deviation = std::max(
            trial.max_schmidt_deviation, (before - after).cwiseAbs().maxCoeff());
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Complex g0 = b.members()[i].inner(b.members()[j]);
        const Complex g1 = mapped.members()[i].inner(mapped.members()[j]);
        trial.gram_deviation = std::max(trial.gram_deviation, std::abs(g0 - g1));
      }
    }

    SearchOptions trial_opts = opts;
    trial_opts.seed = opts.seed + static_cast<std::uint64_t>(t) + 1;
    ClassificationReport c = classify_basis(mapped, trial_opts);
    trial.kind = c.kind;
    trial.agrees = c.kind == rep.base_kind;
    if (trial.agrees) {
      ++rep.agreeing;
    } else {
      rep.disagreements.push_back(std::move(c));
    }
    rep.results.push_back(trial);
  }
  return rep;
}

}  // namespace entbasis
