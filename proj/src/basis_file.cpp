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

#include "entbasis/basis_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entbasis/error.hpp"
#include "json.hpp"

namespace entbasis {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "basis file: " + what);
}

void append_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFinite, "cannot serialize a non-finite amplitude");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

BasisFile BasisFile::from_basis(const Basis& b,
                                std::optional<std::size_t> partition) {
  BasisFile f;
  f.dims = b.party_dims();
  f.labels = b.labels();
  f.states = b.members();
  f.partition_index = partition;
  return f;
}

Basis BasisFile::to_basis(double tol) const {
  return Basis(dims, states, labels, tol);
}

BasisFile parse_basis_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level is not an object");

  BasisFile f;
  if (doc.contains("format_version")) {
    if (!doc["format_version"].is_string())
      parse_fail("\"format_version\" is not a string");
    f.format_version = doc["format_version"].get<std::string>();
    if (f.format_version.rfind("1.", 0) != 0)
      parse_fail("unsupported format_version \"" + f.format_version + "\"");
  }

  if (!doc.contains("dims") || !doc["dims"].is_array())
    parse_fail("missing \"dims\" array");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) parse_fail("\"dims\" entries must be integers");
    dims.push_back(d.get<int>());
  }
  try {
    f.dims = PartyDims(dims);
  } catch (const Error& e) {
    parse_fail(std::string("bad \"dims\": ") + e.what());
  }
  const std::size_t n = f.dims.total();

  if (!doc.contains("states") || !doc["states"].is_array())
    parse_fail("missing \"states\" array");
  std::size_t si = 0;
  for (const auto& s : doc["states"]) {
    const std::string where = "state " + std::to_string(si);
    if (!s.is_array() || s.size() != n) {
      parse_fail(where + " must hold " + std::to_string(n) + " amplitudes");
    }
    ComplexVector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = s[i];
      if (!a.is_array() || a.size() != 2 || !a[0].is_number() ||
          !a[1].is_number()) {
        parse_fail(where + ", amplitude " + std::to_string(i) +
                   " is not a [real, imaginary] pair");
      }
      v(static_cast<Eigen::Index>(i)) = Complex(a[0].get<double>(), a[1].get<double>());
    }
    try {
      f.states.emplace_back(f.dims, std::move(v));
    } catch (const Error& e) {
      parse_fail(where + ": " + e.what());
    }
    ++si;
  }

  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) parse_fail("\"labels\" is not an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) parse_fail("\"labels\" entries must be strings");
      f.labels.push_back(l.get<std::string>());
    }
    if (f.labels.size() != f.states.size()) {
      parse_fail(std::to_string(f.labels.size()) + " labels for " +
                 std::to_string(f.states.size()) + " states");
    }
  } else {
    for (std::size_t i = 0; i < f.states.size(); ++i)
      f.labels.push_back(std::to_string(i));
  }

  if (doc.contains("metadata")) {
    const auto& meta = doc["metadata"];
    if (!meta.is_object()) parse_fail("\"metadata\" is not an object");
    if (meta.contains("partition_index")) {
      const auto& p = meta["partition_index"];
      if (!p.is_number_unsigned() || p.get<std::size_t>() > f.states.size())
        parse_fail("\"partition_index\" out of range");
      f.partition_index = p.get<std::size_t>();
    }
  }
  return f;
}

std::string serialize_basis_file(const BasisFile& file) {
  std::string out = "{\n  \"format_version\": ";
  out += json(file.format_version).dump();
  out += ",\n  \"dims\": [";
  for (std::size_t p = 0; p < file.dims.parties(); ++p) {
    if (p) out += ", ";
    out += std::to_string(file.dims.dim(p));
  }
  out += "],\n  \"labels\": [";
  for (std::size_t i = 0; i < file.labels.size(); ++i) {
    if (i) out += ", ";
    out += json(file.labels[i]).dump();
  }
  out += "],\n  \"states\": [";
  for (std::size_t s = 0; s < file.states.size(); ++s) {
    out += s ? ",\n    [" : "\n    [";
    const ComplexVector& v = file.states[s].amplitudes();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += '[';
      append_double(out, v(i).real());
      out += ", ";
      append_double(out, v(i).imag());
      out += ']';
    }
    out += ']';
  }
  out += file.states.empty() ? "]" : "\n  ]";
  if (file.partition_index) {
    out += ",\n  \"metadata\": {\"partition_index\": ";
    out += std::to_string(*file.partition_index);
    out += '}';
  }
  out += "\n}\n";
  return out;
}

BasisFile read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_basis_file(ss.str());
}

void write_basis_file(const BasisFile& file, const std::string& path) {
  const std::string text = serialize_basis_file(file);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace entbasis
