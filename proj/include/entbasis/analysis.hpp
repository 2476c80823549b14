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

// Deciding, heuristically, whether a subspace contains product states, and
// everything built on that: UPB verification and recovery, PPT checks and
// bound-entanglement certificates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entbasis/constructions.hpp"
#include "entbasis/states.hpp"

namespace entbasis {

struct SearchOptions {
  int restarts = 200;
  int max_iter = 500;
  double convergence = 1e-12;  // per-sweep objective change
  double margin = 1e-6;        // overlap >= 1 - margin counts as a product hit
  double product_tol = kProductTol;
  double ppt_tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  bool record_trace = false;
};

/// Result of maximizing <a_1 (x) ... (x) a_M| P |a_1 (x) ... (x) a_M>.
struct ProductSearchResult {
  double best_overlap = 0.0;
  std::optional<Ket> best_product;
  int restarts = 0;
  int max_iter = 0;
  int iterations = 0;  // sweeps used by the winning restart
  bool converged = false;  // winning restart stabilized before max_iter
  int converged_restarts = 0;
  // Largest decrease of the objective between consecutive sweeps over all
  // restarts; nonpositive up to round-off for a correct seesaw.
  double max_sweep_drop = 0.0;
  // Objective after each sweep of the winning restart (record_trace only).
  std::vector<double> trace;
};

/// Alternating maximization over product states, restarted from independent
/// Haar-random local vectors. Restarts are deterministic in (seed, index) and
/// may run on several threads; the best is chosen by overlap, ties by index.
ProductSearchResult product_state_search(const Subspace& subspace,
                                         const SearchOptions& opts = {});

/// One converged candidate per restart, sorted by decreasing overlap.
struct ProductCandidate {
  double overlap = 0.0;
  Ket product;
};
std::vector<ProductCandidate> product_candidates(const Subspace& subspace,
                                                 const SearchOptions& opts,
                                                 ProductSearchResult* summary);

struct EntanglementBasisTest {
  bool is_entanglement_basis = false;
  ProductSearchResult search;
};

/// Orthonormal states form an entanglement basis iff their span holds no
/// product state, decided by the search with the configured margin.
EntanglementBasisTest is_entanglement_basis(std::span<const Ket> states,
                                            const SearchOptions& opts = {});

struct UpbReport {
  std::size_t size = 0;
  std::size_t min_size = 0;
  bool all_product = false;
  bool orthonormal = false;
  bool min_size_bound_met = false;
  std::size_t complement_dim = 0;
  bool unextendible = false;  // heuristic: complement search stayed below 1 - margin
  bool is_upb = false;        // every check passes and the complement is nonempty
  std::vector<double> second_schmidt;
  double orthonormality_residual = 0.0;
  std::optional<ProductSearchResult> complement_search;
};

UpbReport verify_upb(std::span<const Ket> states,
                     const SearchOptions& opts = {});

struct UpbRecovery {
  bool found = false;
  std::vector<Ket> products;
  std::vector<double> step_overlaps;  // overlap of each accepted product
  int searches = 0;
  int backtracks = 0;
};

/// Deflation: find a product state in the working subspace, project it out,
/// repeat until nothing is left. A branch that dead-ends backtracks to the
/// next distinct candidate of the previous step. On success `products` is an
/// orthogonal product basis of the subspace.
UpbRecovery recover_upb(const Subspace& subspace,
                        const SearchOptions& opts = {});

struct PptReport {
  std::vector<double> min_eigenvalues;       // per party
  std::vector<std::vector<double>> spectra;  // per party, ascending
  bool all_psd = false;
};

PptReport ppt_check(const DensityMatrix& rho, double tol = 1e-10);

enum class CertificateVerdict {
  BoundEntangled,
  Inconclusive,
  NotPPT,
  SeparableOrUndetected,
};
std::string_view to_string(CertificateVerdict v) noexcept;

struct BoundEntanglementCertificate {
  PptReport ppt;
  ProductSearchResult range_search;
  CertificateVerdict verdict = CertificateVerdict::Inconclusive;
};

/// PPT plus a range with no product state certifies bound entanglement.
/// `rho` must be the uniform mixture of `range_basis` within 1e-9
/// (RangeMismatch otherwise). A product-free range whose search never
/// converged is reported Inconclusive.
BoundEntanglementCertificate bound_entanglement_certificate(
    const DensityMatrix& rho, std::span<const Ket> range_basis,
    const SearchOptions& opts = {});

struct RhoTildePrime {
  DensityMatrix mixture_form;     // (1/(s+n)) (sum_{T'} + sum_T)
  DensityMatrix complement_form;  // (1/(N-r)) (I - sum_S)
  double form_deviation = 0.0;    // max-entry distance between the two
  bool t_prime_is_entanglement_basis = false;
  BoundEntanglementCertificate certificate;
};

/// Uniform mixture over the entangled part of a split basis S | T' | T, where
/// S holds product states, T' entangled states and T an entanglement basis.
/// Throws PartitionInvalid when the split violates any of these.
RhoTildePrime rho_tilde_prime(const Basis& s, std::span<const Ket> t_prime,
                              std::span<const Ket> t,
                              const SearchOptions& opts = {});

/// Greedy best-overlap assignment of `found` onto `reference`; returns
/// |<found_i|reference_{a(i)}>| per found state (0 if unassigned).
std::vector<double> match_overlaps(std::span<const Ket> found,
                                   std::span<const Ket> reference);

}  // namespace entbasis
