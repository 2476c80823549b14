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

// JSON basis files:
//
//   {
//     "format_version": "1.0",
//     "dims": [4, 4],
//     "labels": ["V[1,0]", ...],
//     "states": [[[re, im], [re, im], ...], ...],
//     "metadata": {"partition_index": 9}      // optional
//   }
//
// Amplitudes are in Kronecker order (party 1 slowest) and are written with 17
// significant digits so that a write/read cycle reproduces every double.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entbasis/constructions.hpp"

namespace entbasis {

inline constexpr const char* kBasisFormatVersion = "1.0";

struct BasisFile {
  std::string format_version = kBasisFormatVersion;
  PartyDims dims{{2, 2}};
  std::vector<std::string> labels;
  std::vector<Ket> states;  // unit norm, not necessarily orthogonal
  std::optional<std::size_t> partition_index;

  static BasisFile from_basis(const Basis& b,
                              std::optional<std::size_t> partition = {});

  /// Throws NotOrthonormal when the states are not an orthonormal set.
  Basis to_basis(double tol = 1e-9) const;
};

/// Throws ParseError with a diagnostic naming the offending field.
BasisFile parse_basis_file(const std::string& text);
std::string serialize_basis_file(const BasisFile& file);

/// Throws IoError if the file cannot be read or written.
BasisFile read_basis_file(const std::string& path);
void write_basis_file(const BasisFile& file, const std::string& path);

}  // namespace entbasis
