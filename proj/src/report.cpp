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

#include "entbasis/report.hpp"

namespace entbasis {

namespace {

Json indices(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Json to_json(const ProductSearchResult& r) {
  Json j = {
      {"best_overlap", r.best_overlap},
      {"one_minus_overlap", 1.0 - r.best_overlap},
      {"restarts", r.restarts},
      {"max_iter", r.max_iter},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"converged_restarts", r.converged_restarts},
      {"max_sweep_drop", r.max_sweep_drop},
  };
  if (r.best_product) {
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < r.best_product->amplitudes().size(); ++i) {
      const Complex a = r.best_product->amplitudes()(i);
      amps.push_back({a.real(), a.imag()});
    }
    j["best_product"] = std::move(amps);
  }
  return j;
}

Json to_json(const UpbReport& r) {
  Json j = {
      {"size", r.size},
      {"min_size", r.min_size},
      {"all_product", r.all_product},
      {"orthonormal", r.orthonormal},
      {"orthonormality_residual", r.orthonormality_residual},
      {"min_size_bound_met", r.min_size_bound_met},
      {"complement_dim", r.complement_dim},
      {"unextendible", r.unextendible},
      {"is_upb", r.is_upb},
      {"second_schmidt", r.second_schmidt},
  };
  if (r.complement_search) j["complement_search"] = to_json(*r.complement_search);
  return j;
}

Json to_json(const UpbRecovery& r) {
  return {
      {"found", r.found},
      {"products", r.products.size()},
      {"step_overlaps", r.step_overlaps},
      {"searches", r.searches},
      {"backtracks", r.backtracks},
  };
}

Json to_json(const PptReport& r) {
  return {
      {"all_psd", r.all_psd},
      {"min_eigenvalues", r.min_eigenvalues},
      {"spectra", r.spectra},
  };
}

Json to_json(const BoundEntanglementCertificate& c) {
  return {
      {"verdict", std::string(to_string(c.verdict))},
      {"ppt", to_json(c.ppt)},
      {"range_search", to_json(c.range_search)},
  };
}

Json to_json(const ClassificationReport& r) {
  Json j = {
      {"kind", std::string(to_string(r.kind))},
      {"product_members", indices(r.product_members)},
      {"entangled_members", indices(r.entangled_members)},
      {"all_product", r.all_product},
      {"all_entangled", r.all_entangled},
      {"eb_found", r.eb_found},
      {"eb_members", indices(r.eb_members)},
      {"removed_members", indices(r.removed_members)},
      {"eb_best_effort", r.eb_best_effort},
      {"rho_bar_status", std::string(to_string(r.rho_bar_status))},
      {"dimension_bound_holds", r.dimension_bound_holds},
      {"second_schmidt", r.second_schmidt},
      {"eb_search_overlaps", r.eb_search_overlaps},
      {"recovered_match_overlaps", r.recovered_match_overlaps},
  };
  if (r.caveat) j["caveat"] = *r.caveat;
  if (r.eb_search) j["eb_search"] = to_json(*r.eb_search);
  if (r.recovery) j["recovery"] = to_json(*r.recovery);
  if (r.rho_bar_ppt) j["rho_bar_ppt"] = to_json(*r.rho_bar_ppt);
  return j;
}

Json to_json(const LuInvarianceReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.results) {
    trials.push_back({
        {"seed", t.seed},
        {"kind", std::string(to_string(t.kind))},
        {"agrees", t.agrees},
        {"max_schmidt_deviation", t.max_schmidt_deviation},
        {"gram_deviation", t.gram_deviation},
    });
  }
  Json dis = Json::array();
  for (const auto& d : r.disagreements) dis.push_back(to_json(d));
  return {
      {"base_kind", std::string(to_string(r.base_kind))},
      {"trials", r.trials},
      {"agreeing", r.agreeing},
      {"results", std::move(trials)},
      {"disagreements", std::move(dis)},
  };
}

Json to_json(const BasisReport& r) {
  Json j = {
      {"size", r.size},
      {"total_dim", r.total_dim},
      {"complete", r.complete},
      {"orthonormality_residual", r.orthonormality_residual},
      {"product_flags", r.product_flags},
      {"second_schmidt", r.second_schmidt},
  };
  if (r.completeness_residual) j["completeness_residual"] = *r.completeness_residual;
  return j;
}

Json to_json(const SearchOptions& o) {
  return {
      {"restarts", o.restarts},
      {"max_iter", o.max_iter},
      {"convergence", o.convergence},
      {"margin", o.margin},
      {"tol", o.product_tol},
      {"seed", o.seed},
  };
}

Json describe_input(const BasisFile& f) {
  Json j = {
      {"dims", f.dims.dims()},
      {"states", f.states.size()},
      {"total_dim", f.dims.total()},
  };
  if (f.partition_index) j["partition_index"] = *f.partition_index;
  return j;
}

Json envelope(const std::string& command, Json inputs, const std::string& verdict,
              Json evidence, double elapsed_ms) {
  return {
      {"command", command},
      {"inputs", std::move(inputs)},
      {"verdict", verdict},
      {"evidence", std::move(evidence)},
      {"timings", {{"total_ms", elapsed_ms}}},
  };
}

}  // namespace entbasis
