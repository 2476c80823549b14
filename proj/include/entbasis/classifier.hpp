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

// Structural taxonomy of complete orthogonal bases:
//
//   Kind I      no entanglement basis among the members
//               (special cases: all product, all entangled)
//   Kind II(i)  an entanglement basis T whose complement carries an orthogonal
//               product basis, i.e. UPB | exact entanglement basis
//   Kind II(ii) an entanglement basis T whose complement mixture is not shown
//               separable: product states | entangled non-EB | EB

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entbasis/analysis.hpp"
#include "entbasis/constructions.hpp"

namespace entbasis {

enum class BasisKind { KindI_NoEB, KindII_i_CBUPB, KindII_ii_Mixed };
enum class RhoBarStatus { NotEvaluated, SeparableProven, PPTOnly_Inconclusive, NPTEntangled };

std::string_view to_string(BasisKind k) noexcept;
std::string_view to_string(RhoBarStatus s) noexcept;

/// True iff n <= N - sum(d_i - 1) - 1.
bool theorem1_dimension_bound(const PartyDims& dims, std::size_t n) noexcept;

struct ClassificationReport {
  BasisKind kind = BasisKind::KindI_NoEB;
  std::vector<std::size_t> product_members;
  std::vector<std::size_t> entangled_members;
  bool all_product = false;
  bool all_entangled = false;
  bool eb_found = false;
  std::vector<std::size_t> eb_members;  // T, as indices into the basis
  // Members dropped by greedy removal before T became product-free.
  std::vector<std::size_t> removed_members;
  bool eb_best_effort = false;  // T came from greedy removal, not the full set
  RhoBarStatus rho_bar_status = RhoBarStatus::NotEvaluated;
  std::optional<std::string> caveat;
  bool dimension_bound_holds = false;

  // Evidence.
  std::vector<double> second_schmidt;                  // per member
  std::vector<double> eb_search_overlaps;              // one per search
  std::optional<ProductSearchResult> eb_search;        // final search on T
  std::optional<UpbRecovery> recovery;
  std::vector<double> recovered_match_overlaps;        // vs members outside T
  std::optional<PptReport> rho_bar_ppt;
};

/// Classifies a complete orthonormal basis. Throws IncompleteBasis if the
/// basis has fewer than N members.
ClassificationReport classify_basis(const Basis& b,
                                    const SearchOptions& opts = {});

enum class Corollary1Verdict { EEB_Proven, NotEEB, Inconclusive };
std::string_view to_string(Corollary1Verdict v) noexcept;

struct Corollary1Result {
  Corollary1Verdict verdict = Corollary1Verdict::Inconclusive;
  EntanglementBasisTest eb_test;
  UpbRecovery recovery;
  std::optional<PptReport> rho_bar_ppt;
};

/// Decides whether an entanglement basis is exact: EEB_Proven when the
/// complement carries an orthogonal product basis, NotEEB when the complement
/// mixture fails PPT, otherwise Inconclusive. Throws PreconditionFailed naming
/// the violated condition (orthonormality, dimension bound, EB property).
Corollary1Result corollary1_check(std::span<const Ket> t,
                                  const SearchOptions& opts = {});

}  // namespace entbasis
