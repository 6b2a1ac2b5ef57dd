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
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "stabctx/contextuality.hpp"

namespace stabctx::partition {

using pauli::PauliOperator;
using tableau::BornProb;
using tableau::MeasurementResult;

bool StateSet::contains(const StabilizerState &s) const {
    return std::binary_search(states.begin(), states.end(), s);
}

StateSet make_state_set(std::vector<StabilizerState> states) {
    if (states.empty()) {
        throw std::invalid_argument("state set must be nonempty");
    }
    std::size_t n = states[0].num_qubits();
    for (const StabilizerState &s : states) {
        if (s.num_qubits() != n) {
            throw std::invalid_argument("mixed qubit counts in state set");
        }
    }
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return StateSet{n, std::move(states)};
}

bool pairwise_non_orthogonal(const StateSet &s) {
    for (std::size_t i = 0; i < s.states.size(); ++i) {
        for (std::size_t j = i + 1; j < s.states.size(); ++j) {
            if (is_orthogonal(s.states[i], s.states[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PauliObservable> eigen_observables(const StateSet &s) {
    if (s.states.empty()) {
        throw std::invalid_argument("eigen_observables of empty set");
    }
    std::set<PauliObservable> out;
    for (const StabilizerState &state : s.states) {
        for (const PauliOperator &g : state.group_elements()) {
            if (g.is_identity_letters()) {
                continue;
            }
            out.insert(canonical_sign(PauliObservable(g)));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<PauliObservable> commuting_products(const std::vector<PauliObservable> &obs) {
    std::set<PauliObservable> out;
    for (const PauliObservable &o : obs) {
        out.insert(canonical_sign(o));
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            if (!commutes(obs[i].op(), obs[j].op())) {
                continue;
            }
            PauliOperator prod = multiply(obs[i].op(), obs[j].op());
            if (prod.is_identity_letters()) {
                continue;
            }
            out.insert(canonical_sign(PauliObservable(std::move(prod))));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<OutcomeBranch> post_measurement_sets(const StateSet &s, const PauliObservable &o) {
    std::vector<OutcomeBranch> branches;
    for (int outcome : {+1, -1}) {
        OutcomeBranch branch{o, outcome, {}, {}};
        std::vector<std::optional<StabilizerState>> posts;
        posts.reserve(s.states.size());
        for (const StabilizerState &state : s.states) {
            MeasurementResult r = measure_update(state, o, outcome);
            if (r.probability == BornProb::zero) {
                posts.push_back(std::nullopt);
            } else {
                posts.push_back(std::move(r.post_state));
            }
        }
        for (const auto &p : posts) {
            if (p) {
                branch.post_states.push_back(*p);
            }
        }
        std::sort(branch.post_states.begin(), branch.post_states.end());
        branch.post_states.erase(
            std::unique(branch.post_states.begin(), branch.post_states.end()),
            branch.post_states.end());
        for (const auto &p : posts) {
            if (!p) {
                branch.input_to_post.push_back(std::nullopt);
            } else {
                auto it = std::lower_bound(branch.post_states.begin(),
                                           branch.post_states.end(), *p);
                branch.input_to_post.push_back(
                    static_cast<std::size_t>(it - branch.post_states.begin()));
            }
        }
        branches.push_back(std::move(branch));
    }
    return branches;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> find_orthogonal_pair(
    const std::vector<StabilizerState> &states) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (is_orthogonal(states[i], states[j])) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

PartitionEvidence is_partitioning(const StateSet &s, const PauliObservable &o, BranchMode mode) {
    if (s.size() < 2) {
        throw std::invalid_argument("is_partitioning needs at least two states");
    }
    if (s.n != o.num_qubits()) {
        throw std::invalid_argument("qubit count mismatch");
    }
    PartitionEvidence ev;
    ev.branches = post_measurement_sets(s, o);
    ev.partitioning = true;
    for (const OutcomeBranch &branch : ev.branches) {
        bool covers_all = true;
        for (const auto &idx : branch.input_to_post) {
            if (!idx) {
                covers_all = false;
                break;
            }
        }
        bool exempt = mode == BranchMode::refined && !covers_all;
        ev.exempt.push_back(exempt);
        auto pair = find_orthogonal_pair(branch.post_states);
        ev.orthogonal_pairs.push_back(pair);
        if (exempt) {
            continue;
        }
        if (branch.post_states.empty() || !pair) {
            ev.partitioning = false;
        }
    }
    return ev;
}

std::optional<std::pair<PauliObservable, PartitionEvidence>> find_partitioning(
    const StateSet &s, CandidatePool pool, BranchMode mode) {
    std::vector<PauliObservable> candidates;
    if (pool == CandidatePool::all) {
        candidates = pauli::all_canonical_observables(s.n);
    } else {
        candidates = commuting_products(eigen_observables(s));
    }
    for (const PauliObservable &o : candidates) {
        PartitionEvidence ev = is_partitioning(s, o, mode);
        if (ev.partitioning) {
            return std::make_pair(o, std::move(ev));
        }
    }
    return std::nullopt;
}

namespace {

constexpr std::size_t kNoPost = static_cast<std::size_t>(-1);

// Precomputed tables over the full enumerated state list, so the search inner
// loop works on indices only.
struct SearchContext {
    std::vector<StabilizerState> all;
    std::vector<PauliObservable> candidates;
    std::vector<std::vector<bool>> orth;  // all x all
    // post[obs][outcome 0:+1, 1:-1][state] = post state index, kNoPost if
    // the outcome has probability zero.
    std::vector<std::array<std::vector<std::size_t>, 2>> post;

    explicit SearchContext(std::size_t n) {
        all = tableau::enumerate_states(n);
        candidates = pauli::all_canonical_observables(n);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < all.size(); ++i) {
            index[all[i].key()] = i;
        }
        orth.assign(all.size(), std::vector<bool>(all.size(), false));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                bool o = is_orthogonal(all[i], all[j]);
                orth[i][j] = o;
                orth[j][i] = o;
            }
        }
        post.resize(candidates.size());
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            for (int b = 0; b < 2; ++b) {
                int outcome = b == 0 ? +1 : -1;
                post[t][b].resize(all.size());
                for (std::size_t i = 0; i < all.size(); ++i) {
                    MeasurementResult r = measure_update(all[i], candidates[t], outcome);
                    post[t][b][i] = r.post_state ? index.at(r.post_state->key()) : kNoPost;
                }
            }
        }
    }

    bool has_partitioning(const std::vector<std::size_t> &set, BranchMode mode) const {
        if (set.size() < 2) {
            return false;
        }
        std::vector<std::size_t> posts;
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            bool all_branches = true;
            for (int b = 0; b < 2 && all_branches; ++b) {
                posts.clear();
                bool covers_all = true;
                for (std::size_t i : set) {
                    std::size_t p = post[t][b][i];
                    if (p == kNoPost) {
                        covers_all = false;
                    } else if (std::find(posts.begin(), posts.end(), p) == posts.end()) {
                        posts.push_back(p);
                    }
                }
                if (mode == BranchMode::refined && !covers_all) {
                    continue;  // exempt branch
                }
                bool has_pair = false;
                for (std::size_t a = 0; a < posts.size() && !has_pair; ++a) {
                    for (std::size_t c = a + 1; c < posts.size(); ++c) {
                        if (orth[posts[a]][posts[c]]) {
                            has_pair = true;
                            break;
                        }
                    }
                }
                if (!has_pair) {
                    all_branches = false;
                }
            }
            if (all_branches) {
                return true;
            }
        }
        return false;
    }
};

// DFS over index-increasing pairwise-non-orthogonal sets, pruning subtrees as
// soon as a partitioning measurement exists (partitioning is monotone under
// adding states).
void dfs_max_overlap(const SearchContext &ctx, BranchMode mode,
                     std::vector<std::size_t> &current, std::size_t next,
                     MaxOverlapResult &best) {
    if (current.size() > best.m) {
        best.m = current.size();
        best.witnesses.clear();
    }
    if (current.size() == best.m && !current.empty()) {
        std::vector<StabilizerState> states;
        for (std::size_t i : current) {
            states.push_back(ctx.all[i]);
        }
        best.witnesses.push_back(make_state_set(std::move(states)));
    }
    for (std::size_t j = next; j < ctx.all.size(); ++j) {
        bool ok = true;
        for (std::size_t i : current) {
            if (ctx.orth[i][j]) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        current.push_back(j);
        if (!ctx.has_partitioning(current, mode)) {
            dfs_max_overlap(ctx, mode, current, j + 1, best);
        }
        current.pop_back();
    }
}

}  // namespace

MaxOverlapResult max_overlap_set_search(std::size_t n, BranchMode mode, bool allow_sampling,
                                        std::uint64_t seed, std::size_t sample_budget) {
    if (n == 3 && !allow_sampling) {
        throw std::invalid_argument("n=3 search requires the sampling budget flag");
    }
    if (n < 1 || n > 3) {
        throw std::invalid_argument("max_overlap_set_search supports 1 <= n <= 3");
    }
    SearchContext ctx(n);

    MaxOverlapResult best;
    best.outside_theorem_scope = n == 1;
    if (n <= 2) {
        best.exhaustive = true;
        std::vector<std::size_t> current;
        dfs_max_overlap(ctx, mode, current, 0, best);
        return best;
    }

    // n = 3: randomized greedy growth, explicitly non-exhaustive.
    best.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < sample_budget; ++trial) {
        std::vector<std::size_t> order(ctx.all.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> current;
        for (std::size_t idx : order) {
            bool ok = true;
            for (std::size_t i : current) {
                if (ctx.orth[i][idx]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            current.push_back(idx);
            if (ctx.has_partitioning(current, mode)) {
                current.pop_back();
            }
        }
        if (current.size() > best.m) {
            best.m = current.size();
            best.witnesses.clear();
            std::vector<StabilizerState> states;
            for (std::size_t i : current) {
                states.push_back(ctx.all[i]);
            }
            best.witnesses.push_back(make_state_set(std::move(states)));
        }
    }
    return best;
}

std::optional<DisjointnessCertificate> certify_disjoint(const StateSet &s,
                                                        std::size_t depth_budget) {
    if (s.size() < 2) {
        throw std::invalid_argument("certify_disjoint needs at least two states");
    }

    if (auto pair = find_orthogonal_pair(s.states)) {
        DisjointnessCertificate cert;
        cert.kind = DisjointnessCertificate::Kind::orthogonal_pair;
        cert.pair_indices = *pair;
        return cert;
    }

    if (auto hit = find_partitioning(s, CandidatePool::all, BranchMode::literal)) {
        DisjointnessCertificate cert;
        cert.kind = DisjointnessCertificate::Kind::partitioning_observable;
        cert.observable = hit->first;
        cert.branch_pairs = hit->second.orthogonal_pairs;
        return cert;
    }

    if (depth_budget == 0) {
        return std::nullopt;
    }

    for (const PauliObservable &o : pauli::all_canonical_observables(s.n)) {
        std::vector<OutcomeBranch> branches = post_measurement_sets(s, o);
        std::vector<std::shared_ptr<const DisjointnessCertificate>> children;
        bool ok = true;
        for (const OutcomeBranch &branch : branches) {
            if (branch.post_states.empty()) {
                children.push_back(nullptr);
                continue;
            }
            if (branch.post_states.size() < 2) {
                ok = false;
                break;
            }
            auto child = certify_disjoint(make_state_set(branch.post_states), depth_budget - 1);
            if (!child) {
                ok = false;
                break;
            }
            children.push_back(std::make_shared<DisjointnessCertificate>(std::move(*child)));
        }
        if (!ok) {
            continue;
        }
        DisjointnessCertificate cert;
        cert.kind = DisjointnessCertificate::Kind::recursive_branch;
        cert.observable = o;
        cert.branch_children = std::move(children);
        return cert;
    }
    return std::nullopt;
}

bool check_certificate(const StateSet &s, const DisjointnessCertificate &cert) {
    switch (cert.kind) {
        case DisjointnessCertificate::Kind::orthogonal_pair: {
            auto [i, j] = cert.pair_indices;
            return i < s.size() && j < s.size() && i != j &&
                   is_orthogonal(s.states[i], s.states[j]);
        }
        case DisjointnessCertificate::Kind::partitioning_observable: {
            if (!cert.observable || cert.observable->num_qubits() != s.n ||
                cert.branch_pairs.size() != 2) {
                return false;
            }
            std::vector<OutcomeBranch> branches = post_measurement_sets(s, *cert.observable);
            for (std::size_t b = 0; b < 2; ++b) {
                const auto &pair = cert.branch_pairs[b];
                const auto &posts = branches[b].post_states;
                if (posts.empty() || !pair) {
                    return false;
                }
                auto [i, j] = *pair;
                if (i >= posts.size() || j >= posts.size() || i == j ||
                    !is_orthogonal(posts[i], posts[j])) {
                    return false;
                }
            }
            return true;
        }
        case DisjointnessCertificate::Kind::recursive_branch: {
            if (!cert.observable || cert.observable->num_qubits() != s.n ||
                cert.branch_children.size() != 2) {
                return false;
            }
            std::vector<OutcomeBranch> branches = post_measurement_sets(s, *cert.observable);
            for (std::size_t b = 0; b < 2; ++b) {
                const auto &posts = branches[b].post_states;
                if (posts.empty()) {
                    if (cert.branch_children[b] != nullptr) {
                        return false;
                    }
                    continue;
                }
                if (cert.branch_children[b] == nullptr || posts.size() < 2) {
                    return false;
                }
                if (!check_certificate(make_state_set(posts), *cert.branch_children[b])) {
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

Theorem2Report theorem2_bridge(const StateSet &s, const PauliObservable &o) {
    std::vector<PauliObservable> eig = eigen_observables(s);
    std::vector<PauliObservable> closure = commuting_products(eig);
    PauliObservable canon = canonical_sign(o);
    if (!std::binary_search(closure.begin(), closure.end(), canon)) {
        throw std::invalid_argument("observable is not in the commuting-product closure");
    }
    std::vector<PauliObservable> extended = eig;
    extended.push_back(canon);
    Theorem2Report report;
    report.contextual = !contextuality::ncva_exists(extended).feasible;
    report.partitioning = is_partitioning(s, canon, BranchMode::refined).partitioning;
    if (report.contextual) {
        for (const PauliObservable &cand : closure) {
            if (is_partitioning(s, cand, BranchMode::refined).partitioning) {
                report.closure_has_partitioning = true;
                break;
            }
        }
    }
    report.violation = report.contextual && !report.closure_has_partitioning;
    return report;
}

StateSet pbr_set() {
    return make_state_set({
        tableau::state_from_strings({"+ZI", "+IZ"}),  // |00>
        tableau::state_from_strings({"+ZI", "+IX"}),  // |0+>
        tableau::state_from_strings({"+XI", "+IZ"}),  // |+0>
        tableau::state_from_strings({"+XI", "+IX"}),  // |++>
    });
}

StateSet nonpartitionable_five_set() {
    return make_state_set({
        tableau::state_from_strings({"+XI", "+IX"}),
        tableau::state_from_strings({"+ZI", "+IZ"}),
        tableau::state_from_strings({"+XI", "+IZ"}),
        tableau::state_from_strings({"+YI", "+IX"}),
        tableau::state_from_strings({"+ZZ", "+YX"}),
    });
}

}  // namespace stabctx::partition
