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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "entbasis/entbasis.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct BasisDeleter {
  void operator()(entb_basis* b) const { entb_basis_free(b); }
};
using BasisPtr = std::unique_ptr<entb_basis, BasisDeleter>;

BasisPtr generate(const char* kind, int n = 0) {
  entb_basis* b = nullptr;
  EXPECT_EQ(entb_basis_generate(kind, n, nullptr, 0, &b), ENTB_OK)
      << entb_last_error();
  return BasisPtr(b);
}

json take_json(char* text) {
  json j = json::parse(text);
  entb_string_free(text);
  return j;
}

entb_search_options quick_options() {
  entb_search_options o;
  entb_search_options_init(&o);
  o.restarts = 60;
  o.seed = 3;
  return o;
}

TEST(CApi, OptionsDefaults) {
  entb_search_options o;
  entb_search_options_init(&o);
  EXPECT_EQ(o.restarts, 200);
  EXPECT_EQ(o.max_iter, 500);
  EXPECT_DOUBLE_EQ(o.tol, 1e-8);
  EXPECT_DOUBLE_EQ(o.margin, 1e-6);
  EXPECT_STRNE(entb_version(), "");
  EXPECT_STREQ(entb_status_name(ENTB_ERR_PARSE), "parse error");
}

TEST(CApi, GenerateAndInspect) {
  auto g = generate("gentiles1", 4);
  EXPECT_EQ(entb_basis_size(g.get()), 9u);
  EXPECT_EQ(entb_basis_total_dim(g.get()), 16u);
  EXPECT_EQ(entb_basis_num_parties(g.get()), 2u);
  EXPECT_EQ(entb_basis_party_dim(g.get(), 1), 4);
  EXPECT_EQ(entb_basis_partition_index(g.get()), -1);
  double re = 0, im = 0;
  ASSERT_EQ(entb_basis_amplitude(g.get(), 0, 1, &re, &im), ENTB_OK);
  EXPECT_NEAR(re, 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(entb_basis_amplitude(g.get(), 9, 0, &re, &im),
            ENTB_ERR_INVALID_ARGUMENT);

  int dims[] = {2, 3};
  entb_basis* s = nullptr;
  ASSERT_EQ(entb_basis_generate("standard", 0, dims, 2, &s), ENTB_OK);
  EXPECT_EQ(entb_basis_size(s), 6u);
  entb_basis_free(s);
}

TEST(CApi, GenerateErrors) {
  entb_basis* b = nullptr;
  EXPECT_EQ(entb_basis_generate("gentiles1", 3, nullptr, 0, &b),
            ENTB_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(entb_last_error()).find("n must be even"),
            std::string::npos);
  EXPECT_EQ(b, nullptr);
  EXPECT_EQ(entb_basis_generate("nonsense", 0, nullptr, 0, &b),
            ENTB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(entb_basis_generate("bell", 0, nullptr, 0, nullptr),
            ENTB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, FromAmplitudes) {
  int dims[] = {2, 2};
  const double amps[] = {1, 0, 0, 0, 0, 0, 0, 0,   //
                         0, 0, 0, 0, 0, 0, 1, 0};  //
  entb_basis* b = nullptr;
  ASSERT_EQ(entb_basis_from_amplitudes(dims, 2, amps, 2, &b), ENTB_OK);
  EXPECT_EQ(entb_basis_size(b), 2u);
  entb_basis_free(b);
  const double unnormalized[] = {1, 0, 1, 0, 0, 0, 0, 0};
  EXPECT_NE(entb_basis_from_amplitudes(dims, 2, unnormalized, 1, &b), ENTB_OK);
}

TEST(CApi, SerializeParseRoundTrip) {
  auto g = generate("tiles");
  char* text = nullptr;
  ASSERT_EQ(entb_basis_serialize(g.get(), &text), ENTB_OK);
  entb_basis* p = nullptr;
  ASSERT_EQ(entb_basis_parse(text, &p), ENTB_OK);
  char* again = nullptr;
  ASSERT_EQ(entb_basis_serialize(p, &again), ENTB_OK);
  EXPECT_STREQ(text, again);
  entb_string_free(text);
  entb_string_free(again);
  entb_basis_free(p);

  EXPECT_EQ(entb_basis_parse("{not json", &p), ENTB_ERR_PARSE);
  EXPECT_NE(std::string(entb_last_error()).find("invalid JSON"),
            std::string::npos);
  EXPECT_EQ(entb_basis_load("/nonexistent/x.json", &p), ENTB_ERR_IO);
}

TEST(CApi, SaveAndLoad) {
  const auto path =
      (std::filesystem::temp_directory_path() / "entbasis_capi.json").string();
  auto g = generate("shifts");
  ASSERT_EQ(entb_basis_save(g.get(), path.c_str()), ENTB_OK);
  entb_basis* l = nullptr;
  ASSERT_EQ(entb_basis_load(path.c_str(), &l), ENTB_OK);
  std::remove(path.c_str());
  EXPECT_EQ(entb_basis_size(l), 4u);
  EXPECT_EQ(entb_basis_num_parties(l), 3u);
  entb_basis_free(l);
}

TEST(CApi, CompleteAndSelect) {
  auto g = generate("gentiles1", 4);
  entb_basis* c = nullptr;
  ASSERT_EQ(entb_basis_complete(g.get(), &c), ENTB_OK);
  BasisPtr full(c);
  EXPECT_EQ(entb_basis_size(c), 16u);
  EXPECT_EQ(entb_basis_partition_index(c), 9);
  entb_basis* tail = nullptr;
  ASSERT_EQ(entb_basis_select(c, 9, 16, &tail), ENTB_OK);
  EXPECT_EQ(entb_basis_size(tail), 7u);
  EXPECT_EQ(entb_basis_partition_index(tail), -1);
  entb_basis_free(tail);
  EXPECT_EQ(entb_basis_select(c, 10, 9, &tail), ENTB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ReportsShareTheEnvelope) {
  auto opts = quick_options();
  auto tiles = generate("tiles");
  entb_basis* c = nullptr;
  ASSERT_EQ(entb_basis_complete(tiles.get(), &c), ENTB_OK);
  BasisPtr full(c);

  char* out = nullptr;
  ASSERT_EQ(entb_classify_json(c, &opts, &out), ENTB_OK);
  json cls = take_json(out);
  EXPECT_EQ(cls["command"], "classify");
  EXPECT_EQ(cls["verdict"], "KindII_i_CBUPB");
  for (const char* key : {"inputs", "evidence", "timings"})
    EXPECT_TRUE(cls.contains(key)) << key;

  ASSERT_EQ(entb_verify_upb_json(tiles.get(), &opts, &out), ENTB_OK);
  json upb = take_json(out);
  EXPECT_EQ(upb["verdict"], "UPB");

  entb_basis* t = nullptr;
  ASSERT_EQ(entb_basis_select(c, 5, 9, &t), ENTB_OK);
  BasisPtr tp(t);
  ASSERT_EQ(entb_certify_json(t, &opts, &out), ENTB_OK);
  EXPECT_EQ(take_json(out)["verdict"], "BoundEntangled");

  auto bell = generate("bell");
  ASSERT_EQ(entb_lu_orbit_json(bell.get(), 4, &opts, &out), ENTB_OK);
  EXPECT_EQ(take_json(out)["verdict"], "Invariant");

  ASSERT_EQ(entb_verify_basis_json(bell.get(), 1e-8, &out), ENTB_OK);
  EXPECT_EQ(take_json(out)["command"], "verify");
}

TEST(CApi, ClassifyIncomplete) {
  auto g = generate("gentiles1", 4);
  char* out = nullptr;
  EXPECT_EQ(entb_classify_json(g.get(), nullptr, &out),
            ENTB_ERR_INCOMPLETE_BASIS);
  EXPECT_STREQ(entb_last_error(), "basis incomplete (9 of 16)");
  EXPECT_EQ(out, nullptr);
}

TEST(CApi, NullHandles) {
  char* out = nullptr;
  EXPECT_EQ(entb_classify_json(nullptr, nullptr, &out),
            ENTB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(entb_basis_size(nullptr), 0u);
  entb_basis_free(nullptr);
}

}  // namespace
