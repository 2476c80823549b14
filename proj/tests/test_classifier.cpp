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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "entbasis/classifier.hpp"
#include "entbasis/constructions.hpp"
#include "entbasis/error.hpp"
#include "support.hpp"

namespace entbasis {
namespace {

using testing::basis_ket;
using testing::random_product;
using testing::random_vector;

SearchOptions quick(std::uint64_t seed = 1) {
  SearchOptions o;
  o.restarts = 60;
  o.seed = seed;
  return o;
}

Basis completed(const Basis& b) { return complete_to_full_basis(b).basis; }

// One random product state followed by a Haar-like orthonormal basis of its
// complement; every other member is entangled.
Basis random_mixed_basis(const PartyDims& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Ket p = random_product(d, rng);
  std::vector<Ket> one{p};
  auto comp = Subspace::complement_of(d, one);
  const auto k = static_cast<Eigen::Index>(comp.dimension());
  ComplexMatrix g(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    g.col(j) = random_vector(static_cast<std::size_t>(k), rng);
  ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
  ComplexMatrix rot = comp.basis_matrix() * q;
  std::vector<Ket> members{p};
  for (Eigen::Index j = 0; j < k; ++j)
    members.push_back(Ket::normalized(d, rot.col(j)));
  return Basis(d, members, {}, 1e-9);
}

std::vector<Ket> members_at(const Basis& b, const std::vector<std::size_t>& idx) {
  std::vector<Ket> out;
  for (auto i : idx) out.push_back(b.members()[i]);
  return out;
}

TEST(DimensionBound, Arithmetic) {
  EXPECT_TRUE(theorem1_dimension_bound(PartyDims({2, 2}), 1));
  EXPECT_FALSE(theorem1_dimension_bound(PartyDims({2, 2}), 2));
  EXPECT_TRUE(theorem1_dimension_bound(PartyDims({3, 3}), 4));
  EXPECT_FALSE(theorem1_dimension_bound(PartyDims({3, 3}), 5));
  EXPECT_TRUE(theorem1_dimension_bound(PartyDims({4, 4}), 9));
  EXPECT_FALSE(theorem1_dimension_bound(PartyDims({4, 4}), 10));
  EXPECT_TRUE(theorem1_dimension_bound(PartyDims({2, 2, 2}), 4));
}

TEST(Classify, AllProductBasesAreKindI) {
  for (const PartyDims& d :
       {PartyDims({2, 2}), PartyDims({3, 3}), PartyDims({2, 2, 2})}) {
    auto r = classify_basis(standard_basis(d), quick());
    EXPECT_EQ(r.kind, BasisKind::KindI_NoEB);
    EXPECT_TRUE(r.all_product);
    EXPECT_FALSE(r.eb_found);
  }
}

TEST(Classify, BellIsKindI) {
  auto r = classify_basis(bell_basis(), quick());
  EXPECT_EQ(r.kind, BasisKind::KindI_NoEB);
  EXPECT_TRUE(r.all_entangled);
  EXPECT_EQ(r.rho_bar_status, RhoBarStatus::NotEvaluated);
}

void expect_cbupb(const Basis& upb, std::uint64_t seed) {
  auto c = complete_to_full_basis(upb);
  auto r = classify_basis(c.basis, quick(seed));
  ASSERT_EQ(r.kind, BasisKind::KindII_i_CBUPB);
  EXPECT_EQ(r.rho_bar_status, RhoBarStatus::SeparableProven);
  EXPECT_FALSE(r.eb_best_effort);
  std::vector<std::size_t> expect_t(c.basis.size() - c.split);
  std::iota(expect_t.begin(), expect_t.end(), c.split);
  EXPECT_EQ(r.eb_members, expect_t);
  EXPECT_TRUE(r.dimension_bound_holds);
  ASSERT_EQ(r.recovered_match_overlaps.size(), upb.size());
  for (double m : r.recovered_match_overlaps) EXPECT_GT(m, 1 - 1e-6);
  // Minimum-size UPBs leave the largest possible EEB.
  if (upb.size() == upb.party_dims().min_upb_size())
    EXPECT_EQ(r.eb_members.size(),
              upb.party_dims().max_exact_entanglement_dim());
}

TEST(Classify, CompletedTilesIsCbupb) { expect_cbupb(tiles_3x3(), 1); }
TEST(Classify, CompletedShiftsIsCbupb) { expect_cbupb(shifts_2x2x2(), 2); }
TEST(Classify, CompletedGenTiles1IsCbupb) { expect_cbupb(gentiles1(4), 3); }

TEST(Classify, RandomMixedBasisIsKindTwoNpt) {
  const PartyDims d({3, 3});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Basis b = random_mixed_basis(d, seed);
    auto r = classify_basis(b, quick(seed));
    ASSERT_EQ(r.kind, BasisKind::KindII_ii_Mixed) << "seed " << seed;
    EXPECT_EQ(r.rho_bar_status, RhoBarStatus::NPTEntangled);
    EXPECT_TRUE(r.eb_best_effort);
    EXPECT_TRUE(r.rho_bar_ppt.has_value());
    EXPECT_FALSE(r.rho_bar_ppt->all_psd);

    // No orthogonal product basis of the complement of T, with a fresh seed.
    auto comp = Subspace::complement_of(d, members_at(b, r.eb_members));
    SearchOptions o = quick(seed + 1000);
    o.restarts = 200;
    EXPECT_FALSE(recover_upb(comp, o).found);
  }
}

TEST(Classify, TwoQubitSingletonIsPptOnly) {
  // {|00>, |11>, Psi+, Psi-}: T shrinks to one Bell state whose complement
  // mixture is PPT, but 2x2 admits no UPB to recover.
  const PartyDims d({2, 2});
  auto bell = bell_basis();
  std::vector<Ket> m{basis_ket(d, 0), basis_ket(d, 3), bell.members()[2],
                     bell.members()[3]};
  auto r = classify_basis(Basis(d, m), quick());
  EXPECT_EQ(r.kind, BasisKind::KindII_ii_Mixed);
  EXPECT_EQ(r.rho_bar_status, RhoBarStatus::PPTOnly_Inconclusive);
  EXPECT_TRUE(r.caveat.has_value());
  EXPECT_EQ(r.eb_members.size(), 1u);
  EXPECT_EQ(r.removed_members.size(), 1u);
}

TEST(Classify, IncompleteBasis) {
  try {
    classify_basis(gentiles1(4), quick());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteBasis);
    EXPECT_STREQ(e.what(), "basis incomplete (9 of 16)");
  }
}

Basis permuted(const Basis& b, std::uint64_t seed) {
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  return Basis(b.party_dims(), members_at(b, idx), {}, 1e-9);
}

Basis rephased(const Basis& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<Ket> out;
  for (const auto& k : b.members())
    out.emplace_back(b.party_dims(),
                     ComplexVector(std::polar(1.0, angle(rng)) * k.amplitudes()));
  return Basis(b.party_dims(), out, {}, 1e-9);
}

TEST(Classify, InvariantUnderPermutationAndPhase) {
  const std::vector<Basis> fixtures{
      bell_basis(), standard_basis(PartyDims({3, 3})), completed(tiles_3x3()),
      completed(shifts_2x2x2()), random_mixed_basis(PartyDims({3, 3}), 1)};
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const BasisKind base = classify_basis(fixtures[f], quick()).kind;
    for (std::uint64_t s : {5u, 6u}) {
      EXPECT_EQ(classify_basis(permuted(fixtures[f], s), quick(s)).kind, base)
          << "fixture " << f << " permutation " << s;
      EXPECT_EQ(classify_basis(rephased(fixtures[f], s), quick(s)).kind, base)
          << "fixture " << f << " phases " << s;
    }
  }
}

std::vector<Ket> completion_of(const Basis& upb) {
  auto c = complete_to_full_basis(upb);
  return {c.basis.members().begin() + static_cast<long>(c.split),
          c.basis.members().end()};
}

TEST(Corollary1, TilesAndGenTilesComplementsAreExact) {
  for (const Basis& upb : {tiles_3x3(), gentiles1(4)}) {
    auto t = completion_of(upb);
    auto r = corollary1_check(t, quick());
    EXPECT_EQ(r.verdict, Corollary1Verdict::EEB_Proven);
    EXPECT_EQ(r.recovery.products.size(), upb.size());
    // Consistency with the classifier on the full basis.
    EXPECT_EQ(classify_basis(completed(upb), quick()).kind,
              BasisKind::KindII_i_CBUPB);
  }
}

TEST(Corollary1, RandomFourDimensionalSubspaceIsNotExact) {
  const PartyDims d({3, 3});
  std::mt19937_64 rng(77);
  std::vector<ComplexVector> raw;
  for (int k = 0; k < 4; ++k) raw.push_back(random_vector(9, rng));
  auto t = Subspace::span_of(d, raw).basis();
  auto r = corollary1_check(t, quick());
  EXPECT_EQ(r.verdict, Corollary1Verdict::NotEEB);
  ASSERT_TRUE(r.rho_bar_ppt.has_value());
  EXPECT_FALSE(r.rho_bar_ppt->all_psd);
}

TEST(Corollary1, Preconditions) {
  auto bell = bell_basis();
  auto expect_precondition = [](std::span<const Ket> t, const char* msg) {
    try {
      corollary1_check(t, quick());
      FAIL() << msg;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
      EXPECT_NE(std::string(e.what()).find(msg), std::string::npos) << e.what();
    }
  };
  std::vector<Ket> dup{bell.members()[0], bell.members()[0]};
  expect_precondition(dup, "not orthonormal");
  std::vector<Ket> pair{bell.members()[0], bell.members()[1]};
  expect_precondition(pair, "dimension bound violated: n = 2 > 1");

  const PartyDims d({3, 3});
  ComplexVector a = ComplexVector::Zero(9), b = ComplexVector::Zero(9);
  a(0) = a(4) = 1 / std::sqrt(2.0);
  b(0) = 1 / std::sqrt(2.0);
  b(4) = -1 / std::sqrt(2.0);
  std::vector<Ket> not_eb{Ket(d, a), Ket(d, b)};
  expect_precondition(not_eb, "not an entanglement basis");
}

}  // namespace
}  // namespace entbasis
