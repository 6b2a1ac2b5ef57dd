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

#include "stabctx/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stabctx::io {

namespace {

const char *outcome_key(int b) {
    return b == 0 ? "+1" : "-1";
}

json certificate_node_to_json(const partition::DisjointnessCertificate &cert) {
    using Kind = partition::DisjointnessCertificate::Kind;
    json j;
    switch (cert.kind) {
        case Kind::orthogonal_pair:
            j["type"] = "orthogonal_pair";
            j["pair"] = {cert.pair_indices.first, cert.pair_indices.second};
            break;
        case Kind::partitioning_observable: {
            j["type"] = "partitioning_observable";
            j["observable"] = pauli::format_observable(*cert.observable);
            json pairs = json::object();
            for (std::size_t b = 0; b < cert.branch_pairs.size(); ++b) {
                if (cert.branch_pairs[b]) {
                    pairs[outcome_key(static_cast<int>(b))] = {cert.branch_pairs[b]->first,
                                                               cert.branch_pairs[b]->second};
                } else {
                    pairs[outcome_key(static_cast<int>(b))] = nullptr;
                }
            }
            j["branch_pairs"] = std::move(pairs);
            break;
        }
        case Kind::recursive_branch: {
            j["type"] = "recursive_branch";
            j["observable"] = pauli::format_observable(*cert.observable);
            json branches = json::object();
            for (std::size_t b = 0; b < cert.branch_children.size(); ++b) {
                if (cert.branch_children[b]) {
                    branches[outcome_key(static_cast<int>(b))] =
                        certificate_node_to_json(*cert.branch_children[b]);
                } else {
                    branches[outcome_key(static_cast<int>(b))] = nullptr;
                }
            }
            j["branches"] = std::move(branches);
            break;
        }
    }
    return j;
}

partition::DisjointnessCertificate certificate_node_from_json(const json &j) {
    using Kind = partition::DisjointnessCertificate::Kind;
    partition::DisjointnessCertificate cert;
    std::string type = j.at("type").get<std::string>();
    if (type == "orthogonal_pair") {
        cert.kind = Kind::orthogonal_pair;
        const json &pair = j.at("pair");
        cert.pair_indices = {pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>()};
    } else if (type == "partitioning_observable") {
        cert.kind = Kind::partitioning_observable;
        cert.observable = pauli::parse_observable(j.at("observable").get<std::string>());
        const json &pairs = j.at("branch_pairs");
        for (int b = 0; b < 2; ++b) {
            const json &entry = pairs.at(outcome_key(b));
            if (entry.is_null()) {
                cert.branch_pairs.push_back(std::nullopt);
            } else {
                cert.branch_pairs.push_back(std::make_pair(entry.at(0).get<std::size_t>(),
                                                           entry.at(1).get<std::size_t>()));
            }
        }
    } else if (type == "recursive_branch") {
        cert.kind = Kind::recursive_branch;
        cert.observable = pauli::parse_observable(j.at("observable").get<std::string>());
        const json &branches = j.at("branches");
        for (int b = 0; b < 2; ++b) {
            const json &entry = branches.at(outcome_key(b));
            if (entry.is_null()) {
                cert.branch_children.push_back(nullptr);
            } else {
                cert.branch_children.push_back(
                    std::make_shared<partition::DisjointnessCertificate>(
                        certificate_node_from_json(entry)));
            }
        }
    } else {
        throw std::invalid_argument("unknown certificate node type \"" + type + "\"");
    }
    return cert;
}

void check_schema_version(const json &j) {
    std::string version = j.at("schema_version").get<std::string>();
    if (version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version \"" + version + "\"");
    }
}

}  // namespace

json state_to_json(const tableau::StabilizerState &s) {
    json gens = json::array();
    for (const auto &g : s.generators()) {
        gens.push_back(pauli::format_observable(g));
    }
    return json{{"n", s.num_qubits()}, {"generators", std::move(gens)}};
}

tableau::StabilizerState state_from_json(const json &j) {
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::string> gens;
    for (const auto &g : j.at("generators")) {
        gens.push_back(g.get<std::string>());
    }
    tableau::StabilizerState s = tableau::state_from_strings(gens);
    if (s.num_qubits() != n) {
        throw std::invalid_argument("state record: generator length does not match n");
    }
    return s;
}

json state_set_to_json(const partition::StateSet &s) {
    json arr = json::array();
    for (const auto &state : s.states) {
        arr.push_back(state_to_json(state));
    }
    return arr;
}

partition::StateSet state_set_from_json(const json &j) {
    // Accept both a bare array of state records and the wrapped
    // {"schema_version", "states"} form.
    const json *arr = &j;
    if (j.is_object()) {
        check_schema_version(j);
        arr = &j.at("states");
    }
    if (!arr->is_array() || arr->empty()) {
        throw std::invalid_argument("state set must be a nonempty JSON array");
    }
    std::vector<tableau::StabilizerState> states;
    for (const auto &entry : *arr) {
        states.push_back(state_from_json(entry));
    }
    return partition::make_state_set(std::move(states));
}

json certificate_to_json(const partition::DisjointnessCertificate &cert) {
    return json{{"schema_version", kSchemaVersion}, {"root", certificate_node_to_json(cert)}};
}

partition::DisjointnessCertificate certificate_from_json(const json &j) {
    check_schema_version(j);
    return certificate_node_from_json(j.at("root"));
}

json partition_evidence_to_json(const partition::PartitionEvidence &ev) {
    json branches = json::array();
    for (std::size_t b = 0; b < ev.branches.size(); ++b) {
        json branch;
        branch["outcome"] = ev.branches[b].outcome;
        json posts = json::array();
        for (const auto &p : ev.branches[b].post_states) {
            posts.push_back(state_to_json(p));
        }
        branch["post_states"] = std::move(posts);
        json mapping = json::array();
        for (const auto &idx : ev.branches[b].input_to_post) {
            if (idx) {
                mapping.push_back(*idx);
            } else {
                mapping.push_back(nullptr);
            }
        }
        branch["input_to_post"] = std::move(mapping);
        if (ev.orthogonal_pairs[b]) {
            branch["orthogonal_pair"] = {ev.orthogonal_pairs[b]->first,
                                         ev.orthogonal_pairs[b]->second};
        } else {
            branch["orthogonal_pair"] = nullptr;
        }
        branch["exempt"] = static_cast<bool>(ev.exempt[b]);
        branches.push_back(std::move(branch));
    }
    return json{{"schema_version", kSchemaVersion},
                {"partitioning", ev.partitioning},
                {"branches", std::move(branches)}};
}

json ncva_result_to_json(const contextuality::NcvaResult &result) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["feasible"] = result.feasible;
    if (result.feasible) {
        json assignment = json::object();
        for (const auto &[obs, value] : result.assignment) {
            assignment[pauli::format_observable(obs)] = value;
        }
        j["assignment"] = std::move(assignment);
    } else {
        j["witness_equations"] = result.witness_equations;
    }
    return j;
}

json bound_report_to_json(const std::vector<bounds::BoundReport> &rows) {
    json arr = json::array();
    for (const auto &row : rows) {
        json r;
        r["n"] = row.n;
        r["state_count"] = row.state_count.str();
        r["overlap_cap_m"] = row.overlap_cap_m.str();
        r["lower_bound_bits"] = row.lower_bound_bits;
        r["gk_bits"] = row.gk_bits;
        r["asymptote_bits"] = row.asymptote_bits;
        r["asymptote_ratio"] = row.asymptote_ratio;
        r["source"] = row.source;
        arr.push_back(std::move(r));
    }
    return json{{"schema_version", kSchemaVersion}, {"rows", std::move(arr)}};
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(path + ": cannot open for reading");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_json_file(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error(path + ": cannot open for writing");
    }
    out << j.dump(2) << "\n";
}

}  // namespace stabctx::io
