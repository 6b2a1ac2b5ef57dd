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

#include "stabctx/partition.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "stabctx/contextuality.hpp"

using namespace stabctx;
using partition::BranchMode;
using partition::CandidatePool;
using partition::StateSet;
using pauli::PauliObservable;
using tableau::StabilizerState;

namespace {

StabilizerState state(const std::vector<std::string> &gens) {
    return tableau::state_from_strings(gens);
}

std::set<std::string> obs_strings(const std::vector<PauliObservable> &obs) {
    std::set<std::string> out;
    for (const auto &o : obs) {
        out.insert(pauli::format_observable(o));
    }
    return out;
}

// Random pairwise-non-orthogonal set of the requested size, greedy with
// restarts.
StateSet random_overlapping_set(const std::vector<StabilizerState> &pool, std::size_t size,
                                std::mt19937_64 &rng) {
    while (true) {
        std::vector<StabilizerState> current;
        for (int attempts = 0; attempts < 4000 && current.size() < size; ++attempts) {
            const StabilizerState &cand = pool[rng() % pool.size()];
            bool ok = true;
            for (const auto &s : current) {
                if (s == cand || is_orthogonal(s, cand)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                current.push_back(cand);
            }
        }
        if (current.size() == size) {
            return partition::make_state_set(std::move(current));
        }
    }
}

}  // namespace

TEST_CASE("make_state_set dedups and validates") {
    auto s = partition::make_state_set({state({"+Z"}), state({"+Z"}), state({"+X"})});
    CHECK(s.size() == 2);
    CHECK_THROWS_AS(partition::make_state_set({}), std::invalid_argument);
    CHECK_THROWS_AS(partition::make_state_set({state({"+Z"}), state({"+ZI", "+IZ"})}),
                    std::invalid_argument);
}

TEST_CASE("pbr_set fixture") {
    StateSet pbr = partition::pbr_set();
    CHECK(pbr.size() == 4);
    CHECK(partition::pairwise_non_orthogonal(pbr));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            double ov = oracle::overlap(pbr.states[i], pbr.states[j]);
            CHECK((std::abs(ov - 0.25) < 1e-9 || std::abs(ov - 0.5) < 1e-9));
        }
    }
}

TEST_CASE("eigen_observables") {
    auto single = partition::eigen_observables(
        partition::make_state_set({state({"+Z"})}));
    CHECK(obs_strings(single) == std::set<std::string>{"+Z"});

    auto pair = partition::eigen_observables(
        partition::make_state_set({state({"+Z"}), state({"-Z"})}));
    CHECK(obs_strings(pair) == std::set<std::string>{"+Z"});

    auto pbr = partition::eigen_observables(partition::pbr_set());
    CHECK(obs_strings(pbr) ==
          std::set<std::string>{"+ZI", "+IZ", "+ZZ", "+IX", "+ZX", "+XI", "+XZ", "+XX"});

    // Cross-check each listed observable really has an eigenstate in the set:
    // expectation +-1 on some member.
    for (const auto &o : pbr) {
        bool found = false;
        for (const auto &s : partition::pbr_set().states) {
            if (tableau::expectation(s, o) != 0) {
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("commuting_products") {
    auto pbr_eigen = partition::eigen_observables(partition::pbr_set());
    auto closure = partition::commuting_products(pbr_eigen);
    CHECK(obs_strings(closure).count("+YY") == 1);

    auto x_only = partition::commuting_products({pauli::parse_observable("+X")});
    CHECK(obs_strings(x_only) == std::set<std::string>{"+X"});

    auto xi_ix = partition::commuting_products(
        {pauli::parse_observable("+XI"), pauli::parse_observable("+IX")});
    CHECK(obs_strings(xi_ix) == std::set<std::string>{"+XI", "+IX", "+XX"});
}

TEST_CASE("magic square equals the pbr eigenclosure observables plus YY") {
    auto pbr_eigen = partition::eigen_observables(partition::pbr_set());
    std::vector<PauliObservable> expected = pbr_eigen;
    expected.push_back(pauli::parse_observable("+YY"));
    std::sort(expected.begin(), expected.end());
    CHECK(expected == contextuality::peres_mermin_square());
}

TEST_CASE("post_measurement_sets") {
    StateSet pbr = partition::pbr_set();
    auto yy = pauli::parse_observable("+YY");
    auto branches = partition::post_measurement_sets(pbr, yy);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].outcome == +1);
    CHECK(branches[1].outcome == -1);
    auto plus_keys = std::set<std::string>{};
    for (const auto &p : branches[0].post_states) {
        plus_keys.insert(p.key());
    }
    CHECK(plus_keys.count(state({"+YY", "+ZZ"}).key()) == 1);
    CHECK(plus_keys.count(state({"+YY", "+XX"}).key()) == 1);
    CHECK(branches[1].post_states.size() >= 2);

    auto eigen = partition::post_measurement_sets(
        partition::make_state_set({state({"+Z"})}), pauli::parse_observable("+Z"));
    CHECK(eigen[0].post_states.size() == 1);
    CHECK(eigen[1].post_states.empty());
    CHECK_FALSE(eigen[1].input_to_post[0].has_value());

    // ZI on the PBR set merges |+0> -> |00> and |++> -> |0+>.
    auto zi = partition::post_measurement_sets(pbr, pauli::parse_observable("+ZI"));
    CHECK(zi[0].post_states.size() == 2);
    std::set<std::string> zi_keys;
    for (const auto &p : zi[0].post_states) {
        zi_keys.insert(p.key());
    }
    CHECK(zi_keys.count(state({"+ZI", "+IZ"}).key()) == 1);
    CHECK(zi_keys.count(state({"+ZI", "+IX"}).key()) == 1);
    for (const auto &idx : zi[0].input_to_post) {
        CHECK(idx.has_value());
    }
}

TEST_CASE("post states contain the outcome-signed observable") {
    std::mt19937_64 rng(3);
    auto states = tableau::enumerate_states(2);
    auto obs = pauli::all_canonical_observables(2);
    for (int trial = 0; trial < 100; ++trial) {
        StateSet s = random_overlapping_set(states, 3, rng);
        const auto &o = obs[rng() % obs.size()];
        auto branches = partition::post_measurement_sets(s, o);
        for (const auto &branch : branches) {
            auto target = branch.outcome > 0 ? o : o.negated();
            for (const auto &p : branch.post_states) {
                CHECK(tableau::expectation(p, target) == +1);
            }
        }
    }
}

TEST_CASE("is_partitioning worked examples") {
    StateSet pbr = partition::pbr_set();
    auto ev = partition::is_partitioning(pbr, pauli::parse_observable("+YY"),
                                         BranchMode::literal);
    CHECK(ev.partitioning);
    for (const auto &pair : ev.orthogonal_pairs) {
        REQUIRE(pair.has_value());
    }

    CHECK_FALSE(partition::is_partitioning(pbr, pauli::parse_observable("+ZI"),
                                           BranchMode::literal)
                    .partitioning);

    StateSet zero_one = partition::make_state_set({state({"+Z"}), state({"-Z"})});
    CHECK_FALSE(partition::is_partitioning(zero_one, pauli::parse_observable("+Z"),
                                           BranchMode::literal)
                    .partitioning);
    // Refined mode exempts both branches: each outcome is impossible for one
    // of the two states.
    CHECK(partition::is_partitioning(zero_one, pauli::parse_observable("+Z"),
                                     BranchMode::refined)
              .partitioning);
}

TEST_CASE("partitioning evidence re-checks through is_orthogonal") {
    std::mt19937_64 rng(17);
    auto states = tableau::enumerate_states(2);
    for (int trial = 0; trial < 100; ++trial) {
        StateSet s = random_overlapping_set(states, 4, rng);
        auto hit = partition::find_partitioning(s, CandidatePool::all, BranchMode::literal);
        if (!hit) {
            continue;
        }
        const auto &ev = hit->second;
        for (std::size_t b = 0; b < ev.branches.size(); ++b) {
            REQUIRE(ev.orthogonal_pairs[b].has_value());
            auto [i, j] = *ev.orthogonal_pairs[b];
            CHECK(is_orthogonal(ev.branches[b].post_states[i], ev.branches[b].post_states[j]));
        }
    }
}

TEST_CASE("find_partitioning") {
    StateSet pbr = partition::pbr_set();
    auto hit = partition::find_partitioning(pbr, CandidatePool::all, BranchMode::literal);
    REQUIRE(hit.has_value());
    // YY is among the hits even if an earlier candidate wins the scan.
    CHECK(partition::is_partitioning(pbr, pauli::parse_observable("+YY"), BranchMode::literal)
              .partitioning);

    StateSet five = partition::nonpartitionable_five_set();
    CHECK(partition::pairwise_non_orthogonal(five));
    CHECK_FALSE(
        partition::find_partitioning(five, CandidatePool::all, BranchMode::literal).has_value());
    CHECK_FALSE(
        partition::find_partitioning(five, CandidatePool::all, BranchMode::refined).has_value());

    // Single-qubit sets never partition: branches are singletons.
    StateSet triple = partition::make_state_set(
        {state({"+Z"}), state({"+X"}), state({"+Y"})});
    CHECK_FALSE(
        partition::find_partitioning(triple, CandidatePool::all, BranchMode::literal).has_value());
}

TEST_CASE("partitioning is monotone under adding states") {
    std::mt19937_64 rng(23);
    auto states = tableau::enumerate_states(2);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        StateSet s = random_overlapping_set(states, 2 + rng() % 3, rng);
        const StabilizerState &extra = states[rng() % states.size()];
        if (s.contains(extra)) {
            continue;
        }
        std::vector<StabilizerState> bigger = s.states;
        bigger.push_back(extra);
        StateSet super = partition::make_state_set(std::move(bigger));
        if (partition::find_partitioning(s, CandidatePool::all, BranchMode::literal)) {
            CHECK(partition::find_partitioning(super, CandidatePool::all, BranchMode::literal)
                      .has_value());
            ++checked;
        }
        if (partition::find_partitioning(s, CandidatePool::all, BranchMode::refined)) {
            CHECK(partition::find_partitioning(super, CandidatePool::all, BranchMode::refined)
                      .has_value());
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("branch semantics disagree on a six-state set") {
    // Pairwise overlapping, no literal partitioning measurement, yet ZY
    // partitions it under refined semantics: the fourth state stabilizes +ZY,
    // exempting the -1 branch, while the +1 branch maps the third and fifth
    // states to orthogonal posts.
    StateSet six = partition::make_state_set({
        state({"+XI", "+IX"}),
        state({"+XI", "+IY"}),
        state({"+XI", "+IZ"}),
        state({"+XX", "+ZY"}),
        state({"+XY", "+ZZ"}),
        state({"+XZ", "+ZX"}),
    });
    CHECK(partition::pairwise_non_orthogonal(six));
    CHECK_FALSE(
        partition::find_partitioning(six, CandidatePool::all, BranchMode::literal).has_value());

    auto zy = pauli::parse_observable("+ZY");
    auto ev = partition::is_partitioning(six, zy, BranchMode::refined);
    CHECK(ev.partitioning);
    CHECK(ev.exempt[1]);
    CHECK(ev.orthogonal_pairs[0].has_value());
}

TEST_CASE("singleton-branch lemma: sets above size 3 spread under some local Pauli") {
    std::mt19937_64 rng(31);
    auto states = tableau::enumerate_states(2);
    for (int trial = 0; trial < 200; ++trial) {
        StateSet s = random_overlapping_set(states, 4 + rng() % 2, rng);
        bool found = false;
        for (const auto &o : pauli::all_canonical_observables(2)) {
            int weight = 0;
            for (auto l : o.letters()) {
                if (l != pauli::Letter::I) {
                    ++weight;
                }
            }
            if (weight != 1) {
                continue;
            }
            for (const auto &branch : partition::post_measurement_sets(s, o)) {
                if (branch.post_states.size() >= 2) {
                    found = true;
                }
            }
            if (found) {
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("theorem2 bridge") {
    StateSet pbr = partition::pbr_set();
    auto yy = pauli::parse_observable("+YY");
    auto report = partition::theorem2_bridge(pbr, yy);
    CHECK(report.contextual);
    CHECK(report.partitioning);
    CHECK_FALSE(report.violation);

    StateSet small = partition::make_state_set({state({"+Z"}), state({"+X"})});
    auto z = pauli::parse_observable("+Z");
    auto small_report = partition::theorem2_bridge(small, z);
    CHECK_FALSE(small_report.contextual);
    CHECK_FALSE(small_report.violation);

    CHECK_THROWS_AS(partition::theorem2_bridge(small, pauli::parse_observable("+Y")),
                    std::invalid_argument);
}

TEST_CASE("theorem2 bridge: per-observable implication fails, existential form holds") {
    // The eigen observables of this pairwise-overlapping set embed a magic
    // square on their own, so adding IX keeps the system contextual even
    // though IX does not partition the set. XY does, so the existential form
    // of the theorem is intact and no violation is flagged.
    StateSet s = partition::make_state_set({
        state({"+XY", "+ZZ"}),
        state({"-XX", "+ZZ"}),
        state({"-XZ", "+ZY"}),
        state({"-YI", "-IZ"}),
        state({"-ZI", "-IX"}),
    });
    CHECK(partition::pairwise_non_orthogonal(s));
    auto report = partition::theorem2_bridge(s, pauli::parse_observable("+IX"));
    CHECK(report.contextual);
    CHECK_FALSE(report.partitioning);
    CHECK(report.closure_has_partitioning);
    CHECK_FALSE(report.violation);
    CHECK(partition::is_partitioning(s, pauli::parse_observable("+XY"), BranchMode::refined)
              .partitioning);
}

TEST_CASE("theorem2 bridge holds on random sets") {
    std::mt19937_64 rng(41);
    auto states = tableau::enumerate_states(2);
    for (int trial = 0; trial < 50; ++trial) {
        StateSet s = random_overlapping_set(states, 2 + rng() % 4, rng);
        auto closure = partition::commuting_products(partition::eigen_observables(s));
        for (const auto &o : closure) {
            CHECK_FALSE(partition::theorem2_bridge(s, o).violation);
        }
    }
}

TEST_CASE("certificates") {
    StateSet zero_one = partition::make_state_set({state({"+Z"}), state({"-Z"})});
    auto cert = partition::certify_disjoint(zero_one, 0);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == partition::DisjointnessCertificate::Kind::orthogonal_pair);
    CHECK(partition::check_certificate(zero_one, *cert));

    StateSet pbr = partition::pbr_set();
    auto pbr_cert = partition::certify_disjoint(pbr, 0);
    REQUIRE(pbr_cert.has_value());
    CHECK(pbr_cert->kind == partition::DisjointnessCertificate::Kind::partitioning_observable);
    CHECK(partition::check_certificate(pbr, *pbr_cert));

    // A certificate issued for one set must not validate against another.
    CHECK_FALSE(partition::check_certificate(zero_one, *pbr_cert));

    // The five-state fixture has no certificate at any depth: its common
    // support is allowed to be non-empty.
    StateSet five = partition::nonpartitionable_five_set();
    CHECK_FALSE(partition::certify_disjoint(five, 1).has_value());
}

TEST_CASE("max overlap search at n=1") {
    for (auto mode : {BranchMode::literal, BranchMode::refined}) {
        auto result = partition::max_overlap_set_search(1, mode);
        CHECK(result.m == 3);
        CHECK(result.exhaustive);
        CHECK(result.outside_theorem_scope);
        for (const auto &w : result.witnesses) {
            CHECK(partition::pairwise_non_orthogonal(w));
        }
    }
}

TEST_CASE("max overlap search guards") {
    CHECK_THROWS_AS(partition::max_overlap_set_search(3, BranchMode::literal, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(partition::max_overlap_set_search(4, BranchMode::literal, true),
                    std::invalid_argument);
}
