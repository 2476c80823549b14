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

#include "entbasis/entbasis.h"

#include <chrono>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "entbasis/basis_file.hpp"
#include "entbasis/error.hpp"
#include "entbasis/report.hpp"

struct entb_basis {
  entbasis::BasisFile file;
};

namespace {

using namespace entbasis;

thread_local std::string g_last_error;

entb_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidDims:
    case ErrorCode::InvalidBipartition:
    case ErrorCode::InvalidParty:
    case ErrorCode::InvalidN:
      return ENTB_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return ENTB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotOrthonormal: return ENTB_ERR_NOT_ORTHONORMAL;
    case ErrorCode::RankDeficient: return ENTB_ERR_RANK_DEFICIENT;
    case ErrorCode::IncompleteBasis: return ENTB_ERR_INCOMPLETE_BASIS;
    case ErrorCode::RangeMismatch:
    case ErrorCode::PartitionInvalid:
    case ErrorCode::PreconditionFailed:
      return ENTB_ERR_PRECONDITION;
    case ErrorCode::ParseError: return ENTB_ERR_PARSE;
    case ErrorCode::IoError: return ENTB_ERR_IO;
    case ErrorCode::NonFinite:
    case ErrorCode::NotHermitian:
    case ErrorCode::NotNormalized:
      return ENTB_ERR_NUMERIC;
  }
  return ENTB_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
entb_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return ENTB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ENTB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ENTB_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchOptions to_options(const entb_search_options* o) {
  SearchOptions s;
  if (!o) return s;
  require(o->restarts >= 1, "restarts must be at least 1");
  require(o->max_iter >= 1, "max_iter must be at least 1");
  require(o->tol > 0.0 && o->margin > 0.0 && o->margin < 1.0,
          "tol and margin must be positive, margin below 1");
  require(o->threads >= 0, "threads must be nonnegative");
  s.restarts = o->restarts;
  s.max_iter = o->max_iter;
  s.product_tol = o->tol;
  s.margin = o->margin;
  s.seed = o->seed;
  s.threads = o->threads;
  return s;
}

entb_basis* wrap(BasisFile f) { return new entb_basis{std::move(f)}; }

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(char** out, const Json& j) { *out = dup_string(j.dump(2)); }

}  // namespace

extern "C" {

void entb_search_options_init(entb_search_options* opts) {
  if (!opts) return;
  const SearchOptions d;
  opts->restarts = d.restarts;
  opts->max_iter = d.max_iter;
  opts->tol = d.product_tol;
  opts->margin = d.margin;
  opts->seed = d.seed;
  opts->threads = d.threads;
}

const char* entb_last_error(void) { return g_last_error.c_str(); }

const char* entb_status_name(entb_status status) {
  switch (status) {
    case ENTB_OK: return "ok";
    case ENTB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ENTB_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case ENTB_ERR_NOT_ORTHONORMAL: return "not orthonormal";
    case ENTB_ERR_RANK_DEFICIENT: return "rank deficient";
    case ENTB_ERR_INCOMPLETE_BASIS: return "incomplete basis";
    case ENTB_ERR_PRECONDITION: return "precondition failed";
    case ENTB_ERR_PARSE: return "parse error";
    case ENTB_ERR_IO: return "i/o error";
    case ENTB_ERR_NUMERIC: return "numeric error";
    case ENTB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* entb_version(void) { return "1.0.0"; }

void entb_string_free(char* s) { delete[] s; }

entb_status entb_basis_generate(const char* kind, int n, const int* dims,
                                size_t num_dims, entb_basis** out) {
  return guarded([&] {
    require(kind && out, "null argument");
    const std::string k = kind;
    if (k == "standard") {
      require(dims && num_dims > 0, "standard basis needs dims");
      *out = wrap(BasisFile::from_basis(
          standard_basis(PartyDims(std::vector<int>(dims, dims + num_dims)))));
    } else if (k == "bell") {
      *out = wrap(BasisFile::from_basis(bell_basis()));
    } else if (k == "tiles") {
      *out = wrap(BasisFile::from_basis(tiles_3x3()));
    } else if (k == "shifts") {
      *out = wrap(BasisFile::from_basis(shifts_2x2x2()));
    } else if (k == "gentiles1") {
      *out = wrap(BasisFile::from_basis(gentiles1(n)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown basis kind \"" + k + "\"");
    }
  });
}

entb_status entb_basis_from_amplitudes(const int* dims, size_t num_dims,
                                       const double* amplitudes,
                                       size_t num_states, entb_basis** out) {
  return guarded([&] {
    require(dims && out && (amplitudes || num_states == 0), "null argument");
    BasisFile f;
    f.dims = PartyDims(std::vector<int>(dims, dims + num_dims));
    const std::size_t n = f.dims.total();
    for (std::size_t s = 0; s < num_states; ++s) {
      ComplexVector v(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        const double* a = amplitudes + 2 * (s * n + i);
        v(static_cast<Eigen::Index>(i)) = Complex(a[0], a[1]);
      }
      f.states.emplace_back(f.dims, std::move(v));
      f.labels.push_back(std::to_string(s));
    }
    *out = wrap(std::move(f));
  });
}

entb_status entb_basis_load(const char* path, entb_basis** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = wrap(read_basis_file(path));
  });
}

entb_status entb_basis_parse(const char* json_text, entb_basis** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = wrap(parse_basis_file(json_text));
  });
}

entb_status entb_basis_save(const entb_basis* b, const char* path) {
  return guarded([&] {
    require(b && path, "null argument");
    write_basis_file(b->file, path);
  });
}

entb_status entb_basis_serialize(const entb_basis* b, char** out_text) {
  return guarded([&] {
    require(b && out_text, "null argument");
    *out_text = dup_string(serialize_basis_file(b->file));
  });
}

void entb_basis_free(entb_basis* b) { delete b; }

size_t entb_basis_size(const entb_basis* b) { return b ? b->file.states.size() : 0; }

size_t entb_basis_total_dim(const entb_basis* b) {
  return b ? b->file.dims.total() : 0;
}

size_t entb_basis_num_parties(const entb_basis* b) {
  return b ? b->file.dims.parties() : 0;
}

int entb_basis_party_dim(const entb_basis* b, size_t party) {
  if (!b || party >= b->file.dims.parties()) return 0;
  return b->file.dims.dim(party);
}

int64_t entb_basis_partition_index(const entb_basis* b) {
  if (!b || !b->file.partition_index) return -1;
  return static_cast<int64_t>(*b->file.partition_index);
}

entb_status entb_basis_amplitude(const entb_basis* b, size_t state,
                                 size_t index, double* re, double* im) {
  return guarded([&] {
    require(b && re && im, "null argument");
    require(state < b->file.states.size(), "state index out of range");
    require(index < b->file.dims.total(), "amplitude index out of range");
    const Complex a =
        b->file.states[state].amplitudes()(static_cast<Eigen::Index>(index));
    *re = a.real();
    *im = a.imag();
  });
}

entb_status entb_basis_select(const entb_basis* b, size_t begin, size_t end,
                              entb_basis** out) {
  return guarded([&] {
    require(b && out, "null argument");
    require(begin <= end && end <= b->file.states.size(), "range out of bounds");
    BasisFile f;
    f.dims = b->file.dims;
    f.states.assign(b->file.states.begin() + static_cast<std::ptrdiff_t>(begin),
                    b->file.states.begin() + static_cast<std::ptrdiff_t>(end));
    f.labels.assign(b->file.labels.begin() + static_cast<std::ptrdiff_t>(begin),
                    b->file.labels.begin() + static_cast<std::ptrdiff_t>(end));
    *out = wrap(std::move(f));
  });
}

entb_status entb_basis_complete(const entb_basis* b, entb_basis** out) {
  return guarded([&] {
    require(b && out, "null argument");
    const CompletedBasis c = complete_to_full_basis(b->file.to_basis());
    *out = wrap(BasisFile::from_basis(c.basis, c.split));
  });
}

entb_status entb_verify_basis_json(const entb_basis* b, double tol,
                                   char** out_json) {
  return guarded([&] {
    require(b && out_json, "null argument");
    Stopwatch sw;
    const BasisReport r = verify_basis(b->file.states, b->file.dims, tol);
    emit(out_json, envelope("verify", describe_input(b->file),
                            r.complete ? "Complete" : "Partial", to_json(r),
                            sw.elapsed_ms()));
  });
}

entb_status entb_classify_json(const entb_basis* b,
                               const entb_search_options* opts,
                               char** out_json) {
  return guarded([&] {
    require(b && out_json, "null argument");
    Stopwatch sw;
    const SearchOptions o = to_options(opts);
    const ClassificationReport r = classify_basis(b->file.to_basis(), o);
    Json inputs = describe_input(b->file);
    inputs["options"] = to_json(o);
    emit(out_json, envelope("classify", std::move(inputs),
                            std::string(to_string(r.kind)), to_json(r),
                            sw.elapsed_ms()));
  });
}

entb_status entb_verify_upb_json(const entb_basis* b,
                                 const entb_search_options* opts,
                                 char** out_json) {
  return guarded([&] {
    require(b && out_json, "null argument");
    Stopwatch sw;
    const SearchOptions o = to_options(opts);
    require(!b->file.states.empty(), "no states to verify");
    const UpbReport r = verify_upb(b->file.states, o);
    Json inputs = describe_input(b->file);
    inputs["options"] = to_json(o);
    emit(out_json, envelope("verify-upb", std::move(inputs),
                            r.is_upb ? "UPB" : "NotUPB", to_json(r),
                            sw.elapsed_ms()));
  });
}

entb_status entb_certify_json(const entb_basis* b,
                              const entb_search_options* opts,
                              char** out_json) {
  return guarded([&] {
    require(b && out_json, "null argument");
    Stopwatch sw;
    const SearchOptions o = to_options(opts);
    if (b->file.states.empty()) {
      throw Error(ErrorCode::PreconditionFailed, "no states to mix");
    }
    const DensityMatrix rho = uniform_mixture(b->file.states);
    const BoundEntanglementCertificate c =
        bound_entanglement_certificate(rho, b->file.states, o);
    Json inputs = describe_input(b->file);
    inputs["options"] = to_json(o);
    emit(out_json, envelope("certify", std::move(inputs),
                            std::string(to_string(c.verdict)), to_json(c),
                            sw.elapsed_ms()));
  });
}

entb_status entb_lu_orbit_json(const entb_basis* b, int trials,
                               const entb_search_options* opts,
                               char** out_json) {
  return guarded([&] {
    require(b && out_json, "null argument");
    require(trials >= 1, "trials must be at least 1");
    Stopwatch sw;
    const SearchOptions o = to_options(opts);
    const LuInvarianceReport r =
        lu_invariance_check(b->file.to_basis(), trials, o.seed, o);
    Json inputs = describe_input(b->file);
    inputs["options"] = to_json(o);
    inputs["trials"] = trials;
    emit(out_json, envelope("lu-orbit", std::move(inputs),
                            r.agreeing == r.trials ? "Invariant" : "NotInvariant",
                            to_json(r), sw.elapsed_ms()));
  });
}

}  // extern "C"
