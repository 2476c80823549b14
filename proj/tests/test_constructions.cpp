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
#include <complex>
#include <numbers>
#include <vector>

#include "entbasis/constructions.hpp"
#include "entbasis/error.hpp"
#include "support.hpp"

namespace entbasis {
namespace {

using testing::basis_ket;

// GenTiles1 written directly from the tile formula with explicit exponentials,
// kept separate from the library's construction.
std::vector<ComplexVector> gentiles1_oracle(int n) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<ComplexVector> out;
  auto tile = [&](int m, int shift) {
    ComplexVector w = ComplexVector::Zero(n);
    for (int j = 0; j < n / 2; ++j)
      w((j + shift) % n) = std::exp(Complex(0.0, two_pi * 2.0 * j * m / n));
    return w;
  };
  for (int m = 1; m < n / 2; ++m)
    for (int k = 0; k < n; ++k) {
      ComplexVector v = ComplexVector::Zero(n * n);
      ComplexVector w = tile(m, k + 1);
      for (int b = 0; b < n; ++b) v(k * n + b) = w(b);
      out.push_back(v.normalized());
    }
  for (int m = 1; m < n / 2; ++m)
    for (int k = 0; k < n; ++k) {
      ComplexVector v = ComplexVector::Zero(n * n);
      ComplexVector w = tile(m, k);
      for (int a = 0; a < n; ++a) v(a * n + k) = w(a);
      out.push_back(v.normalized());
    }
  out.push_back(ComplexVector::Constant(n * n, 1.0 / n));
  return out;
}

TEST(Fixtures, StandardAndBell) {
  auto s = standard_basis(PartyDims({2, 3}));
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.labels()[4], "|1,1>");
  auto r = verify_basis(s);
  EXPECT_LT(r.orthonormality_residual, 1e-12);
  for (bool p : r.product_flags) EXPECT_TRUE(p);

  auto b = verify_basis(bell_basis());
  EXPECT_TRUE(b.complete);
  EXPECT_LT(b.orthonormality_residual, 1e-12);
  EXPECT_LT(*b.completeness_residual, 1e-12);
  for (bool p : b.product_flags) EXPECT_FALSE(p);
}

TEST(Fixtures, BellCombinationIsProduct) {
  // (Phi+ + Phi-)/sqrt2 = |00>.
  auto b = bell_basis();
  ComplexVector v =
      (b.members()[0].amplitudes() + b.members()[1].amplitudes()) /
      std::sqrt(2.0);
  EXPECT_TRUE(is_product_state(Ket(b.party_dims(), v)).is_product);
}

TEST(Fixtures, TilesAndShiftsAreMinimalProductSets) {
  for (const Basis& b : {tiles_3x3(), shifts_2x2x2()}) {
    auto r = verify_basis(b);
    EXPECT_LT(r.orthonormality_residual, 1e-12);
    for (bool p : r.product_flags) EXPECT_TRUE(p);
    EXPECT_EQ(b.size(), b.party_dims().min_upb_size());
  }
}

TEST(GenTiles1, CountsAndProducts) {
  for (int n : {4, 6, 8}) {
    auto g = gentiles1(n);
    EXPECT_EQ(g.size(), static_cast<std::size_t>((n - 1) * (n - 1)));
    auto r = verify_basis(g);
    EXPECT_LT(r.orthonormality_residual, 1e-10);
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_TRUE(r.product_flags[i]) << g.labels()[i];
      EXPECT_LT(r.second_schmidt[i], 1e-10);
    }
  }
}

TEST(GenTiles1, MatchesIndependentFormula) {
  for (int n : {4, 6, 8}) {
    auto g = gentiles1(n);
    auto oracle = gentiles1_oracle(n);
    ASSERT_EQ(oracle.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_LT((g.members()[i].amplitudes() - oracle[i]).norm(), 1e-12)
          << "n = " << n << " " << g.labels()[i];
  }
}

TEST(GenTiles1, FirstVerticalTileByHand) {
  auto g = gentiles1(4);
  EXPECT_EQ(g.labels()[0], "V[1,0]");
  const auto& a = g.members()[0].amplitudes();
  for (int i = 0; i < 16; ++i) {
    double expect = i == 1 ? 1 / std::sqrt(2.0) : i == 2 ? -1 / std::sqrt(2.0) : 0;
    EXPECT_NEAR(std::abs(a(i) - expect), 0.0, 1e-15);
  }
}

TEST(GenTiles1, RejectsOddOrSmallN) {
  for (int n : {-2, 0, 2, 3, 5, 7}) {
    try {
      gentiles1(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidN);
      EXPECT_STREQ(e.what(), "n must be even and ≥ 4");
    }
  }
}

TEST(Completion, GenTilesCompletionIsEntangledAndComplete) {
  for (int n : {4, 6, 8}) {
    auto g = gentiles1(n);
    auto c = complete_to_full_basis(g);
    const std::size_t total = static_cast<std::size_t>(n * n);
    ASSERT_EQ(c.basis.size(), total);
    EXPECT_EQ(c.split, g.size());
    EXPECT_EQ(total - c.split, static_cast<std::size_t>(2 * n - 1));
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_EQ(c.basis.members()[i].amplitudes(), g.members()[i].amplitudes());
    EXPECT_LT(completeness_residual(c.basis.members(), c.basis.party_dims()),
              1e-10);
    auto r = verify_basis(c.basis);
    for (std::size_t i = c.split; i < total; ++i)
      EXPECT_GT(r.second_schmidt[i], 0.01) << "n = " << n << " member " << i;
  }
}

TEST(Completion, TilesAndShiftsCompletionsAreEntangled) {
  for (const Basis& b : {tiles_3x3(), shifts_2x2x2()}) {
    auto c = complete_to_full_basis(b);
    EXPECT_LT(completeness_residual(c.basis.members(), c.basis.party_dims()),
              1e-10);
    auto r = verify_basis(c.basis);
    for (std::size_t i = c.split; i < c.basis.size(); ++i)
      EXPECT_GT(r.second_schmidt[i], 0.01);
  }
}

TEST(Completion, AlreadyCompleteIsUnchanged) {
  auto b = bell_basis();
  auto c = complete_to_full_basis(b);
  EXPECT_EQ(c.split, 4u);
  EXPECT_EQ(c.basis.size(), 4u);
}

TEST(Completion, ExplicitCandidatesInOrder) {
  auto t = tiles_3x3();
  const auto& d = t.party_dims();
  std::vector<Ket> diag;
  for (std::size_t r = 0; r < 9; ++r) diag.push_back(basis_ket(d, r));
  auto c = complete_to_full_basis(t, diag);
  EXPECT_EQ(c.basis.size(), 9u);
  EXPECT_LT(completeness_residual(c.basis.members(), d), 1e-10);
  // First added vector is the first candidate with a nonzero residual,
  // projected and normalized.
  ComplexVector r = basis_ket(d, 0).amplitudes();
  for (const auto& m : t.members()) r -= m.amplitudes() * m.amplitudes().dot(r);
  r.normalize();
  EXPECT_LT((c.basis.members()[5].amplitudes() - r).norm(), 1e-12);

  std::vector<Ket> too_few(diag.begin(), diag.begin() + 2);
  try {
    complete_to_full_basis(t, too_few);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(Basis, RejectsNonOrthogonalMembers) {
  const PartyDims d({2, 2});
  std::vector<Ket> m{basis_ket(d, 0), basis_ket(d, 0)};
  try {
    Basis(d, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOrthonormal);
  }
}

TEST(VerifyBasis, PartialHasNoCompletenessResidual) {
  auto r = verify_basis(gentiles1(4));
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.completeness_residual.has_value());
  EXPECT_EQ(r.size, 9u);
  EXPECT_EQ(r.total_dim, 16u);
}

}  // namespace
}  // namespace entbasis
