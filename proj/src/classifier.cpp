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

#include "entbasis/classifier.hpp"

#include <algorithm>
#include <string>

#include "entbasis/error.hpp"

namespace entbasis {

namespace {

std::vector<Ket> pick(const Basis& b, const std::vector<std::size_t>& idx) {
  std::vector<Ket> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(b.members()[i]);
  return out;
}

Subspace span_subspace(const PartyDims& dims, std::span<const Ket> kets) {
  std::vector<ComplexVector> vs;
  vs.reserve(kets.size());
  for (const auto& k : kets) vs.push_back(k.amplitudes());
  return Subspace::span_of(dims, vs);
}

}  // namespace

std::string_view to_string(BasisKind k) noexcept {
  switch (k) {
    case BasisKind::KindI_NoEB: return "KindI_NoEB";
    case BasisKind::KindII_i_CBUPB: return "KindII_i_CBUPB";
    case BasisKind::KindII_ii_Mixed: return "KindII_ii_Mixed";
  }
  return "Unknown";
}

std::string_view to_string(RhoBarStatus s) noexcept {
  switch (s) {
    case RhoBarStatus::NotEvaluated: return "NotEvaluated";
    case RhoBarStatus::SeparableProven: return "SeparableProven";
    case RhoBarStatus::PPTOnly_Inconclusive: return "PPTOnly_Inconclusive";
    case RhoBarStatus::NPTEntangled: return "NPTEntangled";
  }
  return "Unknown";
}

std::string_view to_string(Corollary1Verdict v) noexcept {
  switch (v) {
    case Corollary1Verdict::EEB_Proven: return "EEB_Proven";
    case Corollary1Verdict::NotEEB: return "NotEEB";
    case Corollary1Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

bool theorem1_dimension_bound(const PartyDims& dims, std::size_t n) noexcept {
  return n + dims.excess() + 1 <= dims.total();
}

ClassificationReport classify_basis(const Basis& b, const SearchOptions& opts) {
  const PartyDims& dims = b.party_dims();
  if (!b.is_complete()) {
    throw Error(ErrorCode::IncompleteBasis,
                "basis incomplete (" + std::to_string(b.size()) + " of " +
                    std::to_string(dims.total()) + ")");
  }
  ClassificationReport r;

  // (1) product / entangled flags.
  for (std::size_t i = 0; i < b.size(); ++i) {
    const ProductTest t = is_product_state(b.members()[i], opts.product_tol);
    r.second_schmidt.push_back(*std::max_element(t.second_coefficients.begin(),
                                                 t.second_coefficients.end()));
    (t.is_product ? r.product_members : r.entangled_members).push_back(i);
  }
  r.all_product = r.entangled_members.empty();
  r.all_entangled = r.product_members.empty();

  // (2) Nothing entangled, or nothing but entangled states: both are the
  // special cases of the first kind.
  if (r.all_product || r.all_entangled) {
    r.kind = BasisKind::KindI_NoEB;
    return r;
  }

  // (3) Look for an entanglement basis among the entangled members, removing
  // the member that overlaps most with the product state found each time.
  std::vector<std::size_t> current = r.entangled_members;
  SearchOptions step = opts;
  std::uint64_t round = 0;
  while (!current.empty()) {
    step.seed = opts.seed + 0x9E37ULL * round++;
    const std::vector<Ket> kets = pick(b, current);
    ProductSearchResult search =
        product_state_search(span_subspace(dims, kets), step);
    r.eb_search_overlaps.push_back(search.best_overlap);
    if (search.best_overlap < 1.0 - opts.margin) {
      r.eb_found = true;
      r.eb_members = current;
      r.eb_search = std::move(search);
      break;
    }
    std::size_t worst = 0;
    double worst_overlap = -1.0;
    for (std::size_t j = 0; j < current.size(); ++j) {
      const double o = std::norm(kets[j].inner(*search.best_product));
      if (o > worst_overlap) {
        worst_overlap = o;
        worst = j;
      }
    }
    r.removed_members.push_back(current[worst]);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(worst));
    r.eb_best_effort = true;
  }
  if (!r.eb_found) {
    r.kind = BasisKind::KindI_NoEB;
    return r;
  }

  // (4) The complement of T: constructive separability via UPB recovery,
  // otherwise PPT decides between "entangled" and "unknown".
  r.dimension_bound_holds = theorem1_dimension_bound(dims, r.eb_members.size());
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::find(r.eb_members.begin(), r.eb_members.end(), i) ==
        r.eb_members.end())
      rest.push_back(i);
  const std::vector<Ket> rest_kets = pick(b, rest);
  SearchOptions recovery_opts = opts;
  recovery_opts.seed = opts.seed ^ 0xC0FFEEULL;
  r.recovery = recover_upb(span_subspace(dims, rest_kets), recovery_opts);
  if (r.recovery->found) {
    r.rho_bar_status = RhoBarStatus::SeparableProven;
    r.kind = BasisKind::KindII_i_CBUPB;
    r.recovered_match_overlaps = match_overlaps(r.recovery->products, rest_kets);
    return r;
  }
  const std::vector<Ket> t_kets = pick(b, r.eb_members);
  r.rho_bar_ppt = ppt_check(complement_mixture(dims, t_kets), opts.ppt_tol);
  r.kind = BasisKind::KindII_ii_Mixed;
  if (r.rho_bar_ppt->all_psd) {
    r.rho_bar_status = RhoBarStatus::PPTOnly_Inconclusive;
    r.caveat =
        "complement mixture is PPT but no orthogonal product basis of the "
        "complement was found; separability undecided";
  } else {
    r.rho_bar_status = RhoBarStatus::NPTEntangled;
  }
  return r;
}

Corollary1Result corollary1_check(std::span<const Ket> t,
                                  const SearchOptions& opts) {
  if (t.empty()) {
    throw Error(ErrorCode::PreconditionFailed, "empty state list");
  }
  const PartyDims& dims = t.front().party_dims();
  if (orthonormality_residual(t) > 1e-9) {
    throw Error(ErrorCode::PreconditionFailed, "states are not orthonormal");
  }
  if (!theorem1_dimension_bound(dims, t.size())) {
    throw Error(ErrorCode::PreconditionFailed,
                "dimension bound violated: n = " + std::to_string(t.size()) +
                    " > " + std::to_string(dims.max_exact_entanglement_dim()));
  }
  Corollary1Result out;
  out.eb_test = is_entanglement_basis(t, opts);
  if (!out.eb_test.is_entanglement_basis) {
    throw Error(ErrorCode::PreconditionFailed,
                "not an entanglement basis (span contains a product state, "
                "overlap " +
                    std::to_string(out.eb_test.search.best_overlap) + ")");
  }
  out.recovery = recover_upb(Subspace::complement_of(dims, t), opts);
  if (out.recovery.found) {
    out.verdict = Corollary1Verdict::EEB_Proven;
    return out;
  }
  out.rho_bar_ppt = ppt_check(complement_mixture(dims, t), opts.ppt_tol);
  out.verdict = out.rho_bar_ppt->all_psd ? Corollary1Verdict::Inconclusive
                                         : Corollary1Verdict::NotEEB;
  return out;
}

}  // namespace entbasis
