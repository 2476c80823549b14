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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entbasis/states.hpp"

namespace entbasis {

/// An ordered orthonormal set of kets over shared party dimensions. It may
/// span only a subspace; it is complete when it has N members.
class Basis {
 public:
  /// Throws NotOrthonormal if the members deviate from orthonormality by more
  /// than `tol`. Missing labels are filled with the member index.
  Basis(PartyDims dims, std::vector<Ket> members,
        std::vector<std::string> labels = {}, double tol = 1e-10);

  const PartyDims& party_dims() const noexcept { return dims_; }
  const std::vector<Ket>& members() const noexcept { return members_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_complete() const noexcept { return members_.size() == dims_.total(); }

 private:
  PartyDims dims_;
  std::vector<Ket> members_;
  std::vector<std::string> labels_;
};

/// Computational product basis in Kronecker order.
Basis standard_basis(const PartyDims& dims);

/// The four Bell states of two qubits: Phi+, Phi-, Psi+, Psi-.
Basis bell_basis();

/// The five-member Tiles UPB of 3x3.
Basis tiles_3x3();

/// The four-member Shifts UPB of three qubits.
Basis shifts_2x2x2();

/// GenTiles1 on n x n for even n >= 4: the V_mk, H_mk (m = 1..n/2-1,
/// k = 0..n-1) and the uniform F, (n-1)^2 states in total. Each state is
/// normalized by its computed norm. Throws InvalidN otherwise.
Basis gentiles1(int n);

struct CompletedBasis {
  Basis basis;
  // Members [0, split) are the input, [split, N) the completion.
  std::size_t split = 0;
};

/// Extends an orthonormal partial basis to a complete one by Gram-Schmidt on
/// candidate vectors. Without explicit candidates, computational product
/// states are picked greedily, each time the one with the largest residual
/// against the current span, until the span is full. The input members are
/// kept verbatim as a prefix. Throws RankDeficient if the candidates cannot
/// reach full rank.
CompletedBasis complete_to_full_basis(
    const Basis& partial,
    const std::optional<std::vector<Ket>>& candidates = std::nullopt);

struct BasisReport {
  std::size_t size = 0;
  std::size_t total_dim = 0;
  bool complete = false;
  double orthonormality_residual = 0.0;  // max |G - I| entry
  // ||sum |b><b| - I||_max; only meaningful when complete.
  std::optional<double> completeness_residual;
  std::vector<bool> product_flags;
  std::vector<double> second_schmidt;  // max over single-party splits
};

BasisReport verify_basis(std::span<const Ket> members, const PartyDims& dims,
                         double product_tol = kProductTol);
BasisReport verify_basis(const Basis& b, double product_tol = kProductTol);

/// ||sum |k><k| - I||_max over the kets.
double completeness_residual(std::span<const Ket> kets, const PartyDims& dims);

}  // namespace entbasis
