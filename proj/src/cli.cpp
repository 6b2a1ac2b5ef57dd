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

#include "stabctx/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stabctx/bounds.hpp"
#include "stabctx/contextuality.hpp"
#include "stabctx/json_io.hpp"
#include "stabctx/partition.hpp"
#include "stabctx/pauli.hpp"
#include "stabctx/tableau.hpp"

namespace stabctx::cli {

namespace {

using io::json;
using partition::BranchMode;
using partition::StateSet;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json &j, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        io::save_json_file(out_path, j);
    }
}

BranchMode parse_mode(const std::string &mode) {
    if (mode == "literal") {
        return BranchMode::literal;
    }
    if (mode == "refined") {
        return BranchMode::refined;
    }
    throw CLI::ValidationError("--mode", "must be 'literal' or 'refined'");
}

int default_workers() {
    if (const char *env = std::getenv("STABCTX_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    return 1;
}

int cmd_enumerate(std::size_t n, const std::string &format, const std::string &out_path,
                  std::ostream &out) {
    auto states = tableau::enumerate_states(n);
    if (format == "table") {
        for (const auto &s : states) {
            out << s.key() << "\n";
        }
        out << "total: " << states.size() << "\n";
        return kExitOk;
    }
    json arr = json::array();
    for (const auto &s : states) {
        arr.push_back(io::state_to_json(s));
    }
    json j{{"schema_version", io::kSchemaVersion},
           {"n", n},
           {"count", states.size()},
           {"states", std::move(arr)}};
    emit(j, out_path, out);
    return kExitOk;
}

int cmd_partition_check(const std::string &set_path, const std::string &obs_text,
                        BranchMode mode, const std::string &out_path, std::ostream &out) {
    StateSet s = io::state_set_from_json(io::load_json_file(set_path));
    auto o = pauli::canonical_sign(pauli::parse_observable(obs_text));
    auto ev = partition::is_partitioning(s, o, mode);
    json j = io::partition_evidence_to_json(ev);
    j["observable"] = pauli::format_observable(o);
    j["mode"] = mode == BranchMode::literal ? "literal" : "refined";
    emit(j, out_path, out);
    return kExitOk;
}

int cmd_max_set(std::size_t n, BranchMode mode, bool allow_sampling, std::uint64_t seed,
                std::size_t budget, const std::string &out_path, std::ostream &out) {
    if (n == 3 && !allow_sampling) {
        throw BudgetExceeded(
            "max-set at n=3 is not exhaustive; pass --allow-sampling with an explicit "
            "--budget to run the randomized search");
    }
    auto result = partition::max_overlap_set_search(n, mode, allow_sampling, seed, budget);
    BranchMode other = mode == BranchMode::literal ? BranchMode::refined : BranchMode::literal;
    auto cross = partition::max_overlap_set_search(n, other, allow_sampling, seed, budget);
    json witnesses = json::array();
    for (const auto &w : result.witnesses) {
        witnesses.push_back(io::state_set_to_json(w));
    }
    json other_mode{{"mode", other == BranchMode::literal ? "literal" : "refined"},
                    {"m", cross.m},
                    {"exhaustive", cross.exhaustive},
                    {"witness_count", cross.witnesses.size()}};
    if (!cross.witnesses.empty()) {
        other_mode["example_witness"] = io::state_set_to_json(cross.witnesses.front());
    }
    json j{{"schema_version", io::kSchemaVersion},
           {"n", n},
           {"mode", mode == BranchMode::literal ? "literal" : "refined"},
           {"m", result.m},
           {"exhaustive", result.exhaustive},
           {"outside_theorem_scope", result.outside_theorem_scope},
           {"witnesses", std::move(witnesses)},
           {"other_mode", std::move(other_mode)},
           {"modes_disagree", result.m != cross.m}};
    emit(j, out_path, out);
    return kExitOk;
}

int cmd_certify(const std::string &set_path, std::size_t depth, const std::string &check_path,
                const std::string &out_path, std::ostream &out, std::ostream &err) {
    StateSet s = io::state_set_from_json(io::load_json_file(set_path));
    if (!check_path.empty()) {
        auto cert = io::certificate_from_json(io::load_json_file(check_path));
        bool ok = partition::check_certificate(s, cert);
        out << (ok ? "certificate: VALID" : "certificate: INVALID") << "\n";
        return ok ? kExitOk : kExitVerificationFailure;
    }
    auto cert = partition::certify_disjoint(s, depth);
    if (!cert) {
        err << "no certificate found within depth budget " << depth << "\n";
        return kExitBudgetExceeded;
    }
    emit(io::certificate_to_json(*cert), out_path, out);
    return kExitOk;
}

int cmd_ncva(const std::string &obs_path, const std::string &out_path, std::ostream &out) {
    json input = io::load_json_file(obs_path);
    if (!input.is_array()) {
        throw std::invalid_argument("ncva input must be a JSON array of observable strings");
    }
    std::vector<pauli::PauliObservable> obs;
    for (const auto &entry : input) {
        obs.push_back(pauli::parse_observable(entry.get<std::string>()));
    }
    emit(io::ncva_result_to_json(contextuality::ncva_exists(obs)), out_path, out);
    return kExitOk;
}

int cmd_bounds(std::size_t n_max, const std::string &format, const std::string &out_path,
               std::ostream &out) {
    auto rows = bounds::bound_report(2, n_max);
    if (format == "table") {
        out << bounds::format_report_table(rows);
        return kExitOk;
    }
    emit(io::bound_report_to_json(rows), out_path, out);
    return kExitOk;
}

// Built-in fixture suite: self-contained, deterministic, no external data.
int cmd_verify(std::ostream &out) {
    bool all_ok = true;
    auto report = [&](const std::string &name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };

    for (std::size_t n = 1; n <= 3; ++n) {
        auto states = tableau::enumerate_states(n);
        bool ok = bounds::BigInt(states.size()) == bounds::count_states(n);
        report("enumeration count n=" + std::to_string(n), ok);
    }

    StateSet pbr = partition::pbr_set();
    auto yy = pauli::parse_observable("+YY");
    auto ev = partition::is_partitioning(pbr, yy, BranchMode::literal);
    report("pbr set: YY is partitioning", ev.partitioning);

    StateSet five = partition::nonpartitionable_five_set();
    report("five-state set: pairwise non-orthogonal", partition::pairwise_non_orthogonal(five));
    report("five-state set: no partitioning measurement (literal)",
           !partition::find_partitioning(five, partition::CandidatePool::all,
                                         BranchMode::literal)
                .has_value());
    report("five-state set: no partitioning measurement (refined)",
           !partition::find_partitioning(five, partition::CandidatePool::all,
                                         BranchMode::refined)
                .has_value());

    auto pm = contextuality::peres_mermin_square();
    report("magic square: no value assignment", !contextuality::ncva_exists(pm).feasible);
    bool deletions_ok = true;
    for (std::size_t skip = 0; skip < pm.size(); ++skip) {
        std::vector<pauli::PauliObservable> reduced;
        for (std::size_t i = 0; i < pm.size(); ++i) {
            if (i != skip) {
                reduced.push_back(pm[i]);
            }
        }
        deletions_ok = deletions_ok && contextuality::ncva_exists(reduced).feasible;
    }
    report("magic square: every 8-element subset assignable", deletions_ok);

    auto cert = partition::certify_disjoint(pbr, 0);
    report("pbr set: disjointness certificate verifies",
           cert.has_value() && partition::check_certificate(pbr, *cert));

    auto rows = bounds::bound_report(2, 3);
    bool bounds_ok = rows[0].gk_bits == 10 &&
                     std::abs(rows[0].lower_bound_bits - std::log2(12.0)) < 1e-9 &&
                     rows[1].gk_bits == 21 &&
                     std::abs(rows[1].lower_bound_bits - std::log2(72.0)) < 1e-9;
    report("bound report n=2,3 arithmetic", bounds_ok);

    out << (all_ok ? "verify: OK" : "verify: FAILED") << "\n";
    return all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"exact stabilizer sub-theory simulation, partitioning-measurement search, "
                 "and classical-memory lower-bound reports"};
    app.require_subcommand(1);

    std::string mode_text = "literal";
    std::uint64_t seed = 0;
    int workers = default_workers();
    std::string out_path;
    app.add_option("--mode", mode_text, "branch semantics: literal|refined")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();
    app.add_option("--workers", workers, "worker count (results are worker-count independent)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write JSON output to this path instead of stdout");

    auto *enumerate = app.add_subcommand("enumerate", "list all n-qubit stabilizer states");
    std::size_t enum_n = 2;
    std::string enum_format = "json";
    enumerate->add_option("n", enum_n, "qubit count (1..3)")->required();
    enumerate->add_option("--format", enum_format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    auto *pcheck = app.add_subcommand("partition-check",
                                      "test one observable for the partitioning property");
    std::string set_path;
    std::string obs_text;
    pcheck->add_option("--set", set_path, "state-set JSON file")->required();
    pcheck->add_option("--observable", obs_text, "observable, e.g. +YY")->required();

    auto *maxset = app.add_subcommand("max-set",
                                      "largest pairwise-overlapping set without a "
                                      "partitioning measurement");
    std::size_t max_n = 2;
    bool allow_sampling = false;
    std::size_t budget = 20;
    maxset->add_option("--n", max_n, "qubit count")->required();
    maxset->add_flag("--allow-sampling", allow_sampling,
                     "permit the non-exhaustive randomized search (required for n=3)");
    maxset->add_option("--budget", budget, "restart budget for the randomized search")
        ->capture_default_str();

    auto *certify = app.add_subcommand("certify", "produce or check a disjoint-support "
                                                  "certificate for a state set");
    std::string certify_set;
    std::string check_path;
    std::size_t depth = 2;
    certify->add_option("--set", certify_set, "state-set JSON file")->required();
    certify->add_option("--depth", depth, "recursion depth budget")->capture_default_str();
    certify->add_option("--check", check_path, "verify this certificate file instead of searching");

    auto *ncva = app.add_subcommand("ncva", "decide existence of a non-contextual value "
                                            "assignment for an observable set");
    std::string obs_path;
    ncva->add_option("--obs", obs_path, "JSON array of observable strings")->required();

    auto *bounds_cmd = app.add_subcommand("bounds", "memory lower-bound report");
    std::size_t n_max = 5;
    std::string bounds_format = "table";
    bounds_cmd->add_option("--n-max", n_max, "largest qubit count in the report")
        ->capture_default_str();
    bounds_cmd->add_option("--format", bounds_format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    auto *verify = app.add_subcommand("verify", "run the built-in fixture suite");
    (void)verify;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            std::ostringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            return cmd_enumerate(enum_n, enum_format, out_path, out);
        }
        if (*pcheck) {
            return cmd_partition_check(set_path, obs_text, parse_mode(mode_text), out_path, out);
        }
        if (*maxset) {
            return cmd_max_set(max_n, parse_mode(mode_text), allow_sampling, seed, budget,
                               out_path, out);
        }
        if (*certify) {
            return cmd_certify(certify_set, depth, check_path, out_path, out, err);
        }
        if (*ncva) {
            return cmd_ncva(obs_path, out_path, out);
        }
        if (*bounds_cmd) {
            return cmd_bounds(n_max, bounds_format, out_path, out);
        }
        if (*verify) {
            return cmd_verify(out);
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace stabctx::cli
