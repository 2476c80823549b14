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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entbasis/entbasis.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;

struct BasisDeleter {
  void operator()(entb_basis* b) const { entb_basis_free(b); }
};
using BasisPtr = std::unique_ptr<entb_basis, BasisDeleter>;

// Thrown for any input or usage problem; maps to exit code 2.
struct UsageError {
  std::string message;
};

void check(entb_status s) {
  if (s != ENTB_OK) throw UsageError{entb_last_error()};
}

BasisPtr load(const std::string& path) {
  entb_basis* b = nullptr;
  check(entb_basis_load(path.c_str(), &b));
  return BasisPtr(b);
}

json take_json(char* raw) {
  json j = json::parse(raw);
  entb_string_free(raw);
  return j;
}

std::string dims_string(const entb_basis* b) {
  std::string s = "[";
  for (size_t p = 0; p < entb_basis_num_parties(b); ++p) {
    if (p) s += ",";
    s += std::to_string(entb_basis_party_dim(b, p));
  }
  return s + "]";
}

struct CommonFlags {
  entb_search_options opts{};
  bool as_json = false;

  CommonFlags() { entb_search_options_init(&opts); }

  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", opts.restarts, "Seesaw restarts per search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", opts.max_iter, "Sweeps per restart")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opts.tol, "Product-state tolerance");
    cmd->add_option("--margin", opts.margin, "Decision margin on 1 - overlap");
    cmd->add_option("--seed", opts.seed, "Base random seed");
    cmd->add_option("--threads", opts.threads, "Restart threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--json", as_json, "Print the machine-readable report");
  }
};

void print_report(const json& report, bool as_json,
                  const std::function<void(const json&)>& human) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report["command"].get<std::string>() << ": "
            << report["verdict"].get<std::string>() << "\n";
  human(report["evidence"]);
  std::printf("time: %.1f ms\n", report["timings"]["total_ms"].get<double>());
}

void print_search(const char* name, const json& s) {
  std::printf("%s: best overlap %.15f (1 - overlap = %.3e), %d restarts, %d/%d converged\n",
              name, s["best_overlap"].get<double>(),
              s["one_minus_overlap"].get<double>(), s["restarts"].get<int>(),
              s["converged_restarts"].get<int>(), s["restarts"].get<int>());
}

void write_or_print(const entb_basis* b, const std::string& out) {
  if (out.empty()) {
    char* text = nullptr;
    check(entb_basis_serialize(b, &text));
    std::cout << text;
    entb_string_free(text);
  } else {
    check(entb_basis_save(b, out.c_str()));
  }
}

void summarize_basis(const entb_basis* b, const std::string& out, double tol) {
  char* raw = nullptr;
  check(entb_verify_basis_json(b, tol, &raw));
  const json ev = take_json(raw)["evidence"];
  int products = 0;
  for (bool f : ev["product_flags"]) products += f ? 1 : 0;
  // Summary goes to stderr when the basis itself went to stdout.
  FILE* sink = out.empty() ? stderr : stdout;
  std::fprintf(sink, "%s%zu states, dims %s, %d product / %zu entangled\n",
               out.empty() ? "" : ("wrote " + out + ": ").c_str(),
               entb_basis_size(b), dims_string(b).c_str(), products,
               entb_basis_size(b) - static_cast<size_t>(products));
  std::fprintf(sink, "orthonormality residual %.3e", 
               ev["orthonormality_residual"].get<double>());
  if (ev.contains("completeness_residual"))
    std::fprintf(sink, ", completeness residual %.3e",
                 ev["completeness_residual"].get<double>());
  std::fprintf(sink, "\n");
  const int64_t split = entb_basis_partition_index(b);
  if (split >= 0) std::fprintf(sink, "partition index m = %lld\n", static_cast<long long>(split));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal product and entanglement bases: construction, "
               "completion, classification and bound-entanglement checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a named basis");
  std::string gen_kind;
  int gen_n = 4;
  std::vector<int> gen_dims = {2, 2};
  std::string gen_out;
  gen->add_option("kind", gen_kind, "standard | bell | tiles | shifts | gentiles1")
      ->required()
      ->check(CLI::IsMember({"standard", "bell", "tiles", "shifts", "gentiles1"}));
  gen->add_option("--n", gen_n, "Local dimension for gentiles1 (even, >= 4)");
  gen->add_option("--dims", gen_dims, "Party dimensions for standard")->delimiter(',');
  gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

  // complete
  auto* comp = app.add_subcommand("complete", "Complete a partial basis");
  std::string comp_in, comp_out;
  comp->add_option("input", comp_in, "Basis file")->required();
  comp->add_option("-o,--out", comp_out, "Output file (default: stdout)");

  // classify
  auto* cls = app.add_subcommand("classify", "Classify a complete basis");
  std::string cls_in;
  CommonFlags cls_flags;
  cls->add_option("input", cls_in, "Basis file")->required();
  cls_flags.attach(cls);

  // verify-upb
  auto* vupb = app.add_subcommand("verify-upb", "Check that the states form a UPB");
  std::string vupb_in;
  CommonFlags vupb_flags;
  vupb->add_option("input", vupb_in, "Basis file")->required();
  vupb_flags.attach(vupb);

  // certify
  auto* cert = app.add_subcommand(
      "certify", "Bound-entanglement certificate for the uniform mixture of the states");
  std::string cert_in, cert_part = "all";
  CommonFlags cert_flags;
  cert->add_option("input", cert_in, "Basis file")->required();
  cert->add_option("--part", cert_part,
                   "Which states to mix: all, prefix (before the partition index) "
                   "or completion (from the partition index on)")
      ->check(CLI::IsMember({"all", "prefix", "completion"}));
  cert_flags.attach(cert);

  // lu-orbit
  auto* lu = app.add_subcommand("lu-orbit", "Classify random local-unitary images");
  std::string lu_in;
  int lu_trials = 20;
  CommonFlags lu_flags;
  lu->add_option("input", lu_in, "Complete basis file")->required();
  lu->add_option("--trials", lu_trials, "Number of random local unitaries")
      ->check(CLI::PositiveNumber);
  lu_flags.attach(lu);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      entb_basis* raw = nullptr;
      check(entb_basis_generate(gen_kind.c_str(), gen_n, gen_dims.data(),
                                gen_dims.size(), &raw));
      BasisPtr b(raw);
      write_or_print(b.get(), gen_out);
      summarize_basis(b.get(), gen_out, 1e-8);
    } else if (*comp) {
      BasisPtr in = load(comp_in);
      entb_basis* raw = nullptr;
      check(entb_basis_complete(in.get(), &raw));
      BasisPtr b(raw);
      write_or_print(b.get(), comp_out);
      summarize_basis(b.get(), comp_out, 1e-8);
    } else if (*cls) {
      BasisPtr b = load(cls_in);
      char* raw = nullptr;
      check(entb_classify_json(b.get(), &cls_flags.opts, &raw));
      json rep = take_json(raw);
      rep["inputs"]["path"] = cls_in;
      print_report(rep, cls_flags.as_json, [](const json& ev) {
        std::cout << "product members: " << ev["product_members"].size()
                  << ", entangled members: " << ev["entangled_members"].size()
                  << "\n";
        std::cout << "entanglement basis found: "
                  << (ev["eb_found"].get<bool>() ? "yes" : "no");
        if (ev["eb_found"].get<bool>())
          std::cout << " (" << ev["eb_members"].size() << " members"
                    << (ev["eb_best_effort"].get<bool>() ? ", greedy" : "") << ")";
        std::cout << "\n";
        std::cout << "complement mixture: " << ev["rho_bar_status"].get<std::string>()
                  << "\n";
        if (ev.contains("eb_search")) print_search("EB search", ev["eb_search"]);
        if (ev.contains("recovery"))
          std::cout << "UPB recovery: "
                    << (ev["recovery"]["found"].get<bool>() ? "found " : "failed ")
                    << ev["recovery"]["products"].get<int>() << " products in "
                    << ev["recovery"]["searches"].get<int>() << " searches\n";
        if (ev.contains("caveat"))
          std::cout << "caveat: " << ev["caveat"].get<std::string>() << "\n";
      });
    } else if (*vupb) {
      BasisPtr b = load(vupb_in);
      char* raw = nullptr;
      check(entb_verify_upb_json(b.get(), &vupb_flags.opts, &raw));
      json rep = take_json(raw);
      rep["inputs"]["path"] = vupb_in;
      print_report(rep, vupb_flags.as_json, [](const json& ev) {
        std::cout << "m = " << ev["size"] << " (minimum " << ev["min_size"]
                  << ", bound met: " << ev["min_size_bound_met"] << ")\n";
        std::cout << "all product: " << ev["all_product"]
                  << ", orthonormal: " << ev["orthonormal"]
                  << ", complement dimension: " << ev["complement_dim"]
                  << ", unextendible: " << ev["unextendible"] << "\n";
        if (ev.contains("complement_search"))
          print_search("complement search", ev["complement_search"]);
      });
    } else if (*cert) {
      BasisPtr b = load(cert_in);
      if (cert_part != "all") {
        const int64_t split = entb_basis_partition_index(b.get());
        if (split < 0) throw UsageError{"--part needs a file with a partition index"};
        entb_basis* sel = nullptr;
        const auto m = static_cast<size_t>(split);
        if (cert_part == "prefix") {
          check(entb_basis_select(b.get(), 0, m, &sel));
        } else {
          check(entb_basis_select(b.get(), m, entb_basis_size(b.get()), &sel));
        }
        b.reset(sel);
      }
      char* raw = nullptr;
      check(entb_certify_json(b.get(), &cert_flags.opts, &raw));
      json rep = take_json(raw);
      rep["inputs"]["path"] = cert_in;
      rep["inputs"]["part"] = cert_part;
      print_report(rep, cert_flags.as_json, [](const json& ev) {
        std::cout << "partial-transpose min eigenvalues:";
        for (const auto& v : ev["ppt"]["min_eigenvalues"])
          std::printf(" %.3e", v.get<double>());
        std::cout << " (PPT: " << ev["ppt"]["all_psd"] << ")\n";
        print_search("range search", ev["range_search"]);
      });
    } else if (*lu) {
      BasisPtr b = load(lu_in);
      char* raw = nullptr;
      check(entb_lu_orbit_json(b.get(), lu_trials, &lu_flags.opts, &raw));
      json rep = take_json(raw);
      rep["inputs"]["path"] = lu_in;
      print_report(rep, lu_flags.as_json, [](const json& ev) {
        std::cout << ev["agreeing"] << "/" << ev["trials"]
                  << " invariant, base kind "
                  << ev["base_kind"].get<std::string>() << "\n";
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return 0;
}
