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

#include <cstdint>
#include <random>
#include <vector>

#include "entbasis/numeric.hpp"
#include "entbasis/states.hpp"

namespace entbasis::testing {

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

inline Ket random_product(const PartyDims& dims, std::mt19937_64& rng) {
  std::vector<ComplexVector> factors;
  for (int d : dims.dims()) {
    ComplexVector f = random_vector(static_cast<std::size_t>(d), rng);
    factors.push_back(f / f.norm());
  }
  return tensor_product(dims, factors);
}

inline Ket basis_ket(const PartyDims& dims, std::size_t index) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return Ket(dims, v);
}

inline std::vector<Ket> kets_of(const PartyDims& dims,
                                const std::vector<ComplexVector>& vs) {
  std::vector<Ket> out;
  for (const auto& v : vs) out.push_back(Ket::normalized(dims, v));
  return out;
}

}  // namespace entbasis::testing
