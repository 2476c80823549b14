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

#include <cstdint>
#include <string>
#include <vector>

#include "entbasis/classifier.hpp"
#include "entbasis/constructions.hpp"

namespace entbasis {

/// u_1 (x) ... (x) u_M, one unitary per party.
class LocalUnitary {
 public:
  /// Throws DimensionMismatch on a factor of the wrong size and
  /// InvalidArgument if a factor is not unitary within 1e-10.
  LocalUnitary(PartyDims dims, std::vector<ComplexMatrix> factors);

  static LocalUnitary identity(const PartyDims& dims);

  const PartyDims& party_dims() const noexcept { return dims_; }
  const std::vector<ComplexMatrix>& factors() const noexcept { return factors_; }

  /// The full N x N operator.
  ComplexMatrix matrix() const;

  Ket apply(const Ket& k) const;
  /// g rho g^dagger
  ComplexMatrix conjugate(const ComplexMatrix& op) const;

 private:
  PartyDims dims_;
  std::vector<ComplexMatrix> factors_;
};

/// Haar-random d x d unitary: QR of a complex Gaussian matrix with the phases
/// of diag(R) absorbed into Q.
ComplexMatrix haar_unitary(int d, std::uint64_t seed);

/// Independent Haar factors per party; deterministic in the seed.
LocalUnitary random_local_unitary(const PartyDims& dims, std::uint64_t seed);

/// Maps every member; labels are kept.
Basis apply_local_unitary(const LocalUnitary& g, const Basis& b);

struct LuTrial {
  std::uint64_t seed = 0;
  BasisKind kind = BasisKind::KindI_NoEB;
  bool agrees = false;
  double max_schmidt_deviation = 0.0;  // over members and single-party splits
  double gram_deviation = 0.0;
};

struct LuInvarianceReport {
  BasisKind base_kind = BasisKind::KindI_NoEB;
  int trials = 0;
  int agreeing = 0;
  std::vector<LuTrial> results;
  std::vector<ClassificationReport> disagreements;  // full evidence
};

/// Classifies b and its images under `trials` random local unitaries and
/// compares the kinds.
LuInvarianceReport lu_invariance_check(const Basis& b, int trials,
                                       std::uint64_t seed,
                                       const SearchOptions& opts = {});

}  // namespace entbasis
