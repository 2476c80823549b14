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

#include "entbasis/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "entbasis/error.hpp"

namespace entbasis {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

int resolve_threads(int requested, int jobs) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(t, 1, std::max(jobs, 1));
}

// Fixed data for the seesaw over one subspace.
struct SeesawProblem {
  const PartyDims& dims;
  const ComplexMatrix& columns;  // N x k orthonormal basis of the subspace
  std::vector<std::vector<int>> digits;  // digits[idx][party]

  SeesawProblem(const PartyDims& d, const ComplexMatrix& c)
      : dims(d), columns(c), digits(d.total()) {
    for (std::size_t idx = 0; idx < d.total(); ++idx) {
      digits[idx].resize(d.parties());
      for (std::size_t p = 0; p < d.parties(); ++p)
        digits[idx][p] = d.digit(idx, p);
    }
  }
};

struct RestartOutcome {
  double overlap = 0.0;
  std::vector<ComplexVector> factors;
  int iterations = 0;
  bool converged = false;
  double max_drop = 0.0;
  std::vector<double> trace;
};

ComplexVector random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

// Replaces factor `party` by the top eigenvector of the operator obtained by
// contracting the projector with every other factor. Returns the new value
// of the objective.
double update_party(const SeesawProblem& prob,
                    std::vector<ComplexVector>& factors, std::size_t party) {
  const PartyDims& dims = prob.dims;
  const auto d = static_cast<Eigen::Index>(dims.dim(party));
  const Eigen::Index k = prob.columns.cols();
  ComplexMatrix w = ComplexMatrix::Zero(d, k);
  for (std::size_t idx = 0; idx < dims.total(); ++idx) {
    const auto& dig = prob.digits[idx];
    Complex f(1.0, 0.0);
    for (std::size_t q = 0; q < dims.parties(); ++q)
      if (q != party) f *= std::conj(factors[q](dig[q]));
    w.row(dig[party]) += f * prob.columns.row(static_cast<Eigen::Index>(idx));
  }
  const ComplexMatrix m = w * w.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  factors[party] = solver.eigenvectors().col(d - 1);
  return std::max(solver.eigenvalues()(d - 1), 0.0);
}

RestartOutcome run_restart(const SeesawProblem& prob, std::uint64_t seed,
                           const SearchOptions& opts) {
  RestartOutcome out;
  std::mt19937_64 rng(seed);
  const PartyDims& dims = prob.dims;
  for (std::size_t p = 0; p < dims.parties(); ++p)
    out.factors.push_back(random_unit_vector(dims.dim(p), rng));
  if (prob.columns.cols() == 0) {
    out.converged = true;
    return out;
  }

  double previous = -1.0;
  for (int it = 0; it < opts.max_iter; ++it) {
    double value = 0.0;
    for (std::size_t p = 0; p < dims.parties(); ++p)
      value = update_party(prob, out.factors, p);
    out.iterations = it + 1;
    if (opts.record_trace) out.trace.push_back(value);
    if (previous >= 0.0) out.max_drop = std::max(out.max_drop, previous - value);
    if (previous >= 0.0 && std::abs(value - previous) < opts.convergence) {
      out.converged = true;
      previous = value;
      break;
    }
    previous = value;
  }
  return out;
}

std::vector<RestartOutcome> run_restarts(const Subspace& subspace,
                                         const SearchOptions& opts) {
  if (opts.restarts < 1) {
    throw Error(ErrorCode::InvalidArgument, "restarts must be at least 1");
  }
  if (opts.max_iter < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
  }
  const SeesawProblem prob(subspace.party_dims(), subspace.basis_matrix());
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
  const int threads = resolve_threads(opts.threads, opts.restarts);

  auto work = [&](int index) {
    outcomes[static_cast<std::size_t>(index)] = run_restart(
        prob, derive_seed(opts.seed, static_cast<std::uint64_t>(index)), opts);
  };
  if (threads == 1) {
    for (int r = 0; r < opts.restarts; ++r) work(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int r = next++; r < opts.restarts; r = next++) work(r);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Report the exact objective of the final product, not the last eigenvalue.
  for (auto& o : outcomes) {
    if (subspace.dimension() == 0) continue;
    const Ket p = tensor_product(subspace.party_dims(), o.factors);
    o.overlap = std::min(subspace.expectation(p.amplitudes()), 1.0);
  }
  return outcomes;
}

ProductSearchResult summarize(const Subspace& subspace,
                              std::vector<RestartOutcome>& outcomes,
                              const SearchOptions& opts) {
  ProductSearchResult res;
  res.restarts = opts.restarts;
  res.max_iter = opts.max_iter;
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].overlap > outcomes[best].overlap) best = i;
    if (outcomes[i].converged) ++res.converged_restarts;
    res.max_sweep_drop = std::max(res.max_sweep_drop, outcomes[i].max_drop);
  }
  RestartOutcome& b = outcomes[best];
  res.best_overlap = b.overlap;
  res.best_product = tensor_product(subspace.party_dims(), b.factors);
  res.iterations = b.iterations;
  res.converged = b.converged;
  res.trace = std::move(b.trace);
  return res;
}

// Removes the direction of `v` (projected into W) from W.
Subspace deflate(const Subspace& w, const Ket& v) {
  const ComplexMatrix& cols = w.basis_matrix();
  ComplexVector coeffs = cols.adjoint() * v.amplitudes();
  coeffs.normalize();
  const std::vector<ComplexVector> one = {coeffs};
  const auto rest =
      orthonormal_complement(one, static_cast<std::size_t>(cols.cols()), 1e-12);
  std::vector<Ket> kets;
  kets.reserve(rest.size());
  for (const auto& c : rest)
    kets.push_back(Ket::normalized(w.party_dims(), cols * c));
  return Subspace(w.party_dims(), std::move(kets));
}

struct RecoveryState {
  const SearchOptions& opts;
  int budget;
  UpbRecovery result;
};

constexpr double kDistinctTol = 1e-6;
constexpr double kOrthogonalTol = 1e-6;
constexpr std::size_t kMaxBranches = 8;

std::vector<ProductCandidate> distinct_hits(std::vector<ProductCandidate> all,
                                            double margin) {
  std::vector<ProductCandidate> hits;
  for (auto& c : all) {
    if (c.overlap < 1.0 - margin) break;  // sorted by overlap
    const bool seen = std::any_of(hits.begin(), hits.end(), [&](const auto& h) {
      return std::abs(h.product.inner(c.product)) > 1.0 - kDistinctTol;
    });
    if (!seen) hits.push_back(std::move(c));
  }
  // Members of an orthogonal product basis are orthogonal to each other, so
  // candidates orthogonal to many others are tried first.
  std::vector<int> score(hits.size(), 0);
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = 0; j < hits.size(); ++j)
      if (i != j && std::abs(hits[i].product.inner(hits[j].product)) < kOrthogonalTol)
        ++score[i];
  std::vector<std::size_t> order(hits.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score[a] > score[b];
  });
  std::vector<ProductCandidate> sorted;
  sorted.reserve(hits.size());
  for (std::size_t i : order) sorted.push_back(std::move(hits[i]));
  return sorted;
}

bool recover_step(const Subspace& w, RecoveryState& st) {
  if (w.dimension() == 0) return true;
  if (st.result.searches >= st.budget) return false;
  SearchOptions step = st.opts;
  step.seed = derive_seed(st.opts.seed, 0x5EED0000ULL +
                                            static_cast<std::uint64_t>(st.result.searches));
  step.record_trace = false;
  ++st.result.searches;
  auto hits = distinct_hits(product_candidates(w, step, nullptr), st.opts.margin);
  if (hits.size() > kMaxBranches)
    hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(kMaxBranches), hits.end());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i > 0) ++st.result.backtracks;
    st.result.products.push_back(hits[i].product);
    st.result.step_overlaps.push_back(hits[i].overlap);
    if (recover_step(deflate(w, hits[i].product), st)) return true;
    st.result.products.pop_back();
    st.result.step_overlaps.pop_back();
  }
  return false;
}

}  // namespace

std::vector<ProductCandidate> product_candidates(const Subspace& subspace,
                                                 const SearchOptions& opts,
                                                 ProductSearchResult* summary) {
  auto outcomes = run_restarts(subspace, opts);
  std::vector<ProductCandidate> out;
  out.reserve(outcomes.size());
  for (const auto& o : outcomes)
    out.push_back({o.overlap, tensor_product(subspace.party_dims(), o.factors)});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.overlap > b.overlap;
  });
  if (summary) *summary = summarize(subspace, outcomes, opts);
  return out;
}

ProductSearchResult product_state_search(const Subspace& subspace,
                                         const SearchOptions& opts) {
  auto outcomes = run_restarts(subspace, opts);
  return summarize(subspace, outcomes, opts);
}

EntanglementBasisTest is_entanglement_basis(std::span<const Ket> states,
                                            const SearchOptions& opts) {
  if (states.empty()) {
    throw Error(ErrorCode::InvalidArgument, "is_entanglement_basis: no states");
  }
  require_orthonormal(states, 1e-9, "is_entanglement_basis");
  const PartyDims& dims = states.front().party_dims();
  std::vector<ComplexVector> vs;
  for (const auto& s : states) vs.push_back(s.amplitudes());
  const Subspace span = Subspace::span_of(dims, vs);
  EntanglementBasisTest out;
  out.search = product_state_search(span, opts);
  out.is_entanglement_basis = out.search.best_overlap < 1.0 - opts.margin;
  return out;
}

UpbReport verify_upb(std::span<const Ket> states, const SearchOptions& opts) {
  UpbReport r;
  if (states.empty()) return r;
  const PartyDims& dims = states.front().party_dims();
  r.size = states.size();
  r.min_size = dims.min_upb_size();
  r.min_size_bound_met = r.size >= r.min_size;
  r.all_product = true;
  for (const auto& s : states) {
    const ProductTest t = is_product_state(s, opts.product_tol);
    r.second_schmidt.push_back(*std::max_element(t.second_coefficients.begin(),
                                                 t.second_coefficients.end()));
    r.all_product = r.all_product && t.is_product;
  }
  r.orthonormality_residual = orthonormality_residual(states);
  r.orthonormal = r.orthonormality_residual <= 1e-9;
  if (!r.orthonormal) return r;

  const Subspace complement = Subspace::complement_of(dims, states);
  r.complement_dim = complement.dimension();
  if (r.complement_dim == 0) {
    r.unextendible = true;  // nothing left to extend into
  } else {
    r.complement_search = product_state_search(complement, opts);
    r.unextendible = r.complement_search->best_overlap < 1.0 - opts.margin;
  }
  r.is_upb = r.all_product && r.orthonormal && r.min_size_bound_met &&
             r.complement_dim > 0 && r.unextendible;
  return r;
}

UpbRecovery recover_upb(const Subspace& subspace, const SearchOptions& opts) {
  RecoveryState st{opts, 4 * static_cast<int>(subspace.dimension()) + 16, {}};
  st.result.found = recover_step(subspace, st);
  if (!st.result.found) {
    st.result.products.clear();
    st.result.step_overlaps.clear();
  }
  return st.result;
}

PptReport ppt_check(const DensityMatrix& rho, double tol) {
  PptReport r;
  r.all_psd = true;
  for (std::size_t p = 0; p < rho.party_dims().parties(); ++p) {
    const RealVector ev =
        hermitian_eigenvalues(partial_transpose(rho, p), 1e-9);
    r.spectra.emplace_back(ev.begin(), ev.end());
    r.min_eigenvalues.push_back(ev.minCoeff());
    r.all_psd = r.all_psd && ev.minCoeff() >= -tol;
  }
  return r;
}

std::string_view to_string(CertificateVerdict v) noexcept {
  switch (v) {
    case CertificateVerdict::BoundEntangled: return "BoundEntangled";
    case CertificateVerdict::Inconclusive: return "Inconclusive";
    case CertificateVerdict::NotPPT: return "NotPPT";
    case CertificateVerdict::SeparableOrUndetected: return "SeparableOrUndetected";
  }
  return "Unknown";
}

BoundEntanglementCertificate bound_entanglement_certificate(
    const DensityMatrix& rho, std::span<const Ket> range_basis,
    const SearchOptions& opts) {
  if (range_basis.empty()) {
    throw Error(ErrorCode::RangeMismatch, "empty range basis");
  }
  const DensityMatrix expected = uniform_mixture(range_basis);
  const double deviation = max_abs(rho.matrix() - expected.matrix());
  if (deviation > 1e-9) {
    throw Error(ErrorCode::RangeMismatch,
                "rho differs from the uniform mixture of the range basis by " +
                    std::to_string(deviation));
  }
  BoundEntanglementCertificate c;
  c.ppt = ppt_check(rho, opts.ppt_tol);
  std::vector<ComplexVector> vs;
  for (const auto& k : range_basis) vs.push_back(k.amplitudes());
  c.range_search =
      product_state_search(Subspace::span_of(rho.party_dims(), vs), opts);
  const bool product_free = c.range_search.best_overlap < 1.0 - opts.margin;
  if (!c.ppt.all_psd) {
    c.verdict = CertificateVerdict::NotPPT;
  } else if (!product_free) {
    c.verdict = CertificateVerdict::SeparableOrUndetected;
  } else if (c.range_search.converged_restarts == 0) {
    c.verdict = CertificateVerdict::Inconclusive;
  } else {
    c.verdict = CertificateVerdict::BoundEntangled;
  }
  return c;
}

RhoTildePrime rho_tilde_prime(const Basis& s, std::span<const Ket> t_prime,
                              std::span<const Ket> t,
                              const SearchOptions& opts) {
  const PartyDims& dims = s.party_dims();
  auto invalid = [](const std::string& why) {
    return Error(ErrorCode::PartitionInvalid, "rho_tilde_prime: " + why);
  };
  if (t.empty()) throw invalid("T is empty");
  if (s.size() + t_prime.size() + t.size() != dims.total()) {
    throw invalid("parts have " +
                  std::to_string(s.size() + t_prime.size() + t.size()) +
                  " states, expected " + std::to_string(dims.total()));
  }
  std::vector<Ket> all = s.members();
  all.insert(all.end(), t_prime.begin(), t_prime.end());
  all.insert(all.end(), t.begin(), t.end());
  for (const auto& k : all)
    if (!(k.party_dims() == dims)) throw invalid("party dims differ");
  if (orthonormality_residual(all) > 1e-9) {
    throw invalid("S, T' and T are not jointly orthonormal");
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_product_state(s.members()[i], opts.product_tol).is_product)
      throw invalid("member " + std::to_string(i) + " of S is not a product");
  for (std::size_t i = 0; i < t_prime.size(); ++i)
    if (is_product_state(t_prime[i], opts.product_tol).is_product)
      throw invalid("member " + std::to_string(i) + " of T' is a product");
  if (!is_entanglement_basis(t, opts).is_entanglement_basis) {
    throw invalid("T is not an entanglement basis");
  }

  std::vector<Ket> range(t_prime.begin(), t_prime.end());
  range.insert(range.end(), t.begin(), t.end());
  DensityMatrix mixture = uniform_mixture(range);
  DensityMatrix complement = complement_mixture(dims, s.members());
  const double dev = max_abs(mixture.matrix() - complement.matrix());
  bool tp_eb = false;
  if (!t_prime.empty()) tp_eb = is_entanglement_basis(t_prime, opts).is_entanglement_basis;
  auto cert = bound_entanglement_certificate(mixture, range, opts);
  return {std::move(mixture), std::move(complement), dev, tp_eb, std::move(cert)};
}

std::vector<double> match_overlaps(std::span<const Ket> found,
                                   std::span<const Ket> reference) {
  const std::size_t nf = found.size();
  const std::size_t nr = reference.size();
  std::vector<double> score(nf * nr);
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      score[i * nr + j] = std::abs(found[i].inner(reference[j]));
  std::vector<double> out(nf, 0.0);
  std::vector<bool> used_f(nf, false), used_r(nr, false);
  for (std::size_t round = 0; round < std::min(nf, nr); ++round) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < nf; ++i) {
      if (used_f[i]) continue;
      for (std::size_t j = 0; j < nr; ++j) {
        if (!used_r[j] && score[i * nr + j] > best) {
          best = score[i * nr + j];
          bi = i;
          bj = j;
        }
      }
    }
    used_f[bi] = used_r[bj] = true;
    out[bi] = best;
  }
  return out;
}

}  // namespace entbasis
