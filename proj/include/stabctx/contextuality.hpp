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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "stabctx/pauli.hpp"

namespace stabctx::contextuality {

using pauli::PauliObservable;

/// One GF(2) equation var[a] + var[b] + var[c] = rhs, arising from a
/// commuting pair whose product (up to sign) is also in the observable set.
/// Variables encode observable values as +1 -> 0, -1 -> 1.
struct Gf2Equation {
    std::array<std::size_t, 3> vars;  // sorted, distinct indices
    std::uint8_t rhs = 0;

    bool operator==(const Gf2Equation &other) const = default;
    bool operator<(const Gf2Equation &other) const {
        return std::tie(vars, rhs) < std::tie(other.vars, other.rhs);
    }
};

/// Linearized multiplicative constraints for a non-contextual value
/// assignment over a fixed observable set.
struct ConstraintSystem {
    std::vector<PauliObservable> observables;  // canonical sign, sorted, deduped
    std::vector<Gf2Equation> equations;        // deduped, sorted
};

/// Builds one equation per commuting pair (A, B) in the set whose product
/// +-C has C in the set. The three pairs of a product line all linearize to
/// the same equation, so lines contribute exactly once. Pairs whose product
/// falls outside the set are unconstrained. Throws on mixed qubit counts.
ConstraintSystem build_constraints(const std::vector<PauliObservable> &obs);

/// Outcome of the NCVA decision: either a satisfying +-1 assignment, or an
/// infeasibility witness listing equation indices whose GF(2) sum is 0 = 1.
struct NcvaResult {
    bool feasible = false;
    std::map<PauliObservable, int> assignment;  // only when feasible
    std::vector<std::size_t> witness_equations;  // only when infeasible
};

/// Decides existence of a non-contextual value assignment by exact GF(2)
/// elimination over build_constraints(obs). A missing assignment is a proof
/// of contextuality for the set.
NcvaResult ncva_exists(const std::vector<PauliObservable> &obs);

/// The nine two-qubit observables of the Peres-Mermin magic square, canonical
/// signs, sorted.
std::vector<PauliObservable> peres_mermin_square();

}  // namespace stabctx::contextuality
