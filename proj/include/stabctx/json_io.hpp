// Copyright 2026 The stabctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "stabctx/bounds.hpp"
#include "stabctx/contextuality.hpp"
#include "stabctx/partition.hpp"
#include "stabctx/tableau.hpp"

namespace stabctx::io {

/// Embedded in every top-level object payload; bumped on any incompatible
/// schema change.
inline constexpr const char *kSchemaVersion = "1";

using json = nlohmann::json;

// State: {"n": 2, "generators": ["+XI", "+IX"]} with canonical generator
// order. State-set files are JSON arrays of such records.
json state_to_json(const tableau::StabilizerState &s);
tableau::StabilizerState state_from_json(const json &j);

json state_set_to_json(const partition::StateSet &s);
partition::StateSet state_set_from_json(const json &j);

// Certificates carry the schema version and mirror DisjointnessCertificate
// exactly, so third parties can re-verify without this library's search code.
json certificate_to_json(const partition::DisjointnessCertificate &cert);
partition::DisjointnessCertificate certificate_from_json(const json &j);

json partition_evidence_to_json(const partition::PartitionEvidence &ev);

json ncva_result_to_json(const contextuality::NcvaResult &result);

json bound_report_to_json(const std::vector<bounds::BoundReport> &rows);

/// Parses a file; throws std::runtime_error with a path-prefixed message on
/// I/O or JSON errors, std::invalid_argument on schema violations.
json load_json_file(const std::string &path);
void save_json_file(const std::string &path, const json &j);

}  // namespace stabctx::io
