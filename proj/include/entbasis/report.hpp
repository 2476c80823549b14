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

// JSON renderings of analysis results. Every command report shares one
// envelope: {command, inputs, verdict, evidence, timings}.

#include <string>

#include "entbasis/analysis.hpp"
#include "entbasis/basis_file.hpp"
#include "entbasis/classifier.hpp"
#include "entbasis/local_unitary.hpp"
#include "json.hpp"

namespace entbasis {

using Json = nlohmann::json;

Json to_json(const ProductSearchResult& r);
Json to_json(const UpbReport& r);
Json to_json(const UpbRecovery& r);
Json to_json(const PptReport& r);
Json to_json(const BoundEntanglementCertificate& c);
Json to_json(const ClassificationReport& r);
Json to_json(const LuInvarianceReport& r);
Json to_json(const BasisReport& r);
Json to_json(const SearchOptions& o);

/// Summary of an input basis file: dims, state count, partition index.
Json describe_input(const BasisFile& f);

Json envelope(const std::string& command, Json inputs, const std::string& verdict,
              Json evidence, double elapsed_ms);

}  // namespace entbasis
