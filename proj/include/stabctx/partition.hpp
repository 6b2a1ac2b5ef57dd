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

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "stabctx/pauli.hpp"
#include "stabctx/tableau.hpp"

namespace stabctx::partition {

using pauli::PauliObservable;
using tableau::StabilizerState;

/// Deduplicated, deterministically ordered collection of same-n stabilizer
/// states; the object of partitioning and overlap analysis.
struct StateSet {
    std::size_t n = 0;
    std::vector<StabilizerState> states;  // sorted by key, no duplicates

    std::size_t size() const { return states.size(); }
    bool contains(const StabilizerState &s) const;
};

/// Sorts, dedups, and checks uniform qubit count. Throws on empty input or
/// mixed n.
StateSet make_state_set(std::vector<StabilizerState> states);

/// True iff no two states in the set are orthogonal.
bool pairwise_non_orthogonal(const StateSet &s);

/// Observables with at least one eigenstate in the set: canonical-sign P such
/// that +P or -P lies in some state's stabilizer group. Sorted, identity
/// excluded. Throws on empty set.
std::vector<PauliObservable> eigen_observables(const StateSet &s);

/// Closure under products of commuting pairs: the input observables plus
/// every canonical_sign(A*B) for commuting A,B with non-identity product.
std::vector<PauliObservable> commuting_products(const std::vector<PauliObservable> &obs);

/// Post-measurement image of a state set for one outcome of one observable.
struct OutcomeBranch {
    PauliObservable observable;
    int outcome = 0;
    std::vector<StabilizerState> post_states;  // deduped, sorted
    /// For each input state index: index into post_states, or nullopt when
    /// this outcome has probability zero for that input.
    std::vector<std::optional<std::size_t>> input_to_post;
};

/// Both outcome branches (+1 then -1) for measuring o on every state of s.
std::vector<OutcomeBranch> post_measurement_sets(const StateSet &s, const PauliObservable &o);

/// Branch semantics for the partitioning predicate. The two readings disagree
/// at n=2: the maximum pairwise-overlapping set with no partitioning
/// measurement has size 6 under literal but 5 under refined, and 5 is the
/// value the memory bound uses. Refined is also the reading the simulation
/// argument supports: an internal state in every input's support can only
/// produce outcomes that are possible for every input, so a branch that is
/// impossible for some input never receives it.
enum class BranchMode : std::uint8_t {
    /// Every branch must be nonempty and contain an orthogonal post pair.
    literal,
    /// Branches whose outcome is impossible for at least one input state are
    /// exempt from the orthogonal-pair requirement.
    refined,
};

/// Decision plus re-checkable evidence for the partitioning predicate.
struct PartitionEvidence {
    bool partitioning = false;
    std::vector<OutcomeBranch> branches;
    /// Per branch: indices into post_states of an orthogonal pair, when one
    /// exists.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> orthogonal_pairs;
    /// Per branch: true when the branch was exempted (refined mode only).
    std::vector<bool> exempt;
};

/// The partitioning-measurement predicate: every (non-exempt) outcome branch
/// of o on s contains at least one pair of orthogonal post states.
PartitionEvidence is_partitioning(const StateSet &s, const PauliObservable &o, BranchMode mode);

enum class CandidatePool : std::uint8_t {
    all,           // every canonical non-identity Pauli (4^n - 1)
    eigenclosure,  // commuting_products(eigen_observables(s))
};

/// Scans candidates in lexicographic order, returns the first partitioning
/// observable with its evidence, or nullopt.
std::optional<std::pair<PauliObservable, PartitionEvidence>> find_partitioning(
    const StateSet &s, CandidatePool pool, BranchMode mode);

/// Result of the maximum-overlap search: the largest cardinality of a
/// pairwise-non-orthogonal state set with no partitioning measurement.
struct MaxOverlapResult {
    std::size_t m = 0;
    std::vector<StateSet> witnesses;  // all maximum sets found (n=2: exhaustive)
    bool exhaustive = false;
    bool outside_theorem_scope = false;  // n=1: no partitioning exists at all
};

/// Exhaustive DFS at n <= 2; n = 3 only with allow_sampling (randomized,
/// non-exhaustive, labeled as such). Prunes on the monotone partitioning
/// property. Throws for unsupported n.
MaxOverlapResult max_overlap_set_search(std::size_t n, BranchMode mode,
                                        bool allow_sampling = false,
                                        std::uint64_t seed = 0,
                                        std::size_t sample_budget = 20);

/// Checkable proof tree that a state set has empty common support in any
/// simulation: an orthogonal pair, a partitioning observable, or recursion
/// into every nonempty outcome branch of some observable.
struct DisjointnessCertificate {
    enum class Kind : std::uint8_t { orthogonal_pair, partitioning_observable, recursive_branch };

    Kind kind = Kind::orthogonal_pair;

    // orthogonal_pair
    std::pair<std::size_t, std::size_t> pair_indices{0, 0};

    // partitioning_observable / recursive_branch
    std::optional<PauliObservable> observable;
    // partitioning_observable: per-outcome orthogonal post-pair indices
    // (+1 branch first, -1 second); absent entries mean the branch is empty.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> branch_pairs;
    // recursive_branch: child certificate per outcome; absent when the branch
    // is empty.
    std::vector<std::shared_ptr<const DisjointnessCertificate>> branch_children;
};

/// Searches for a certificate: orthogonal pair first, then a partitioning
/// observable, then recursive branching down to depth_budget. Nullopt if the
/// budget is exhausted. Throws for singleton sets.
std::optional<DisjointnessCertificate> certify_disjoint(const StateSet &s,
                                                        std::size_t depth_budget);

/// Re-verification without search: checks every claim a certificate makes
/// against the set it was issued for.
bool check_certificate(const StateSet &s, const DisjointnessCertificate &cert);

/// Cross-check of "contextual implies partitioning" for one observable from
/// the eigenclosure of s. The per-observable implication is false in general
/// (a set whose eigen observables alone embed a magic square is contextual
/// regardless of which product is added, yet that product need not partition
/// the set), so the violation flag tracks the existential form the proof
/// actually supports: contextual implies SOME closure observable partitions
/// s under refined branch semantics.
struct Theorem2Report {
    bool contextual = false;               // ncva infeasible on eigen_observables(s) + o
    bool partitioning = false;             // is_partitioning(s, o, refined)
    bool closure_has_partitioning = false; // some closure observable partitions s
                                           // (refined); only scanned when contextual
    bool violation = false;                // contextual && !closure_has_partitioning
};

/// Throws std::invalid_argument if o is not in commuting_products of the
/// eigen observables of s.
Theorem2Report theorem2_bridge(const StateSet &s, const PauliObservable &o);

/// The four product states {|00>, |0+>, |+0>, |++>}.
StateSet pbr_set();

/// The two-qubit five-state fixture with pairwise overlap and no partitioning
/// measurement, witnessing the brute-force bound of 5.
StateSet nonpartitionable_five_set();

}  // namespace stabctx::partition
