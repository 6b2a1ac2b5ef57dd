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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stabctx/pauli.hpp"

namespace stabctx::tableau {

using pauli::PauliObservable;
using pauli::PauliOperator;

/// Measurement probability of a single Pauli observable on a pure stabilizer
/// state. These are the only values that can occur; tracked exactly, never as
/// floating point.
enum class BornProb : std::uint8_t { zero, half, one };

double born_prob_value(BornProb p);

/// A pure n-qubit stabilizer state, stored as its canonical generator list:
/// n pairwise-commuting independent signed Paulis, row-reduced over GF(2) in
/// a fixed column order (for qubit 0..n-1: X bit then Z bit) with signs
/// propagated exactly. Two generator lists for the same state always produce
/// identical stored forms, so equality is structural.
class StabilizerState {
  public:
    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliObservable> &generators() const { return gens_; }

    /// All 2^n stabilizer group elements (subset products of the
    /// generators, including +Identity), with exact signs.
    std::vector<PauliOperator> group_elements() const;

    /// "+XI,+IX" style key; also the deterministic sort order for state
    /// collections.
    std::string key() const;

    bool operator==(const StabilizerState &other) const = default;
    bool operator<(const StabilizerState &other) const;

    friend StabilizerState canonicalize(const std::vector<PauliObservable> &gens);

  private:
    StabilizerState(std::size_t n, std::vector<PauliObservable> gens)
        : n_(n), gens_(std::move(gens)) {}

    std::size_t n_ = 0;
    std::vector<PauliObservable> gens_;
};

/// Builds the unique canonical state from a full generator list (exactly n
/// observables for n qubits). Throws std::invalid_argument if the list is
/// non-commuting, dependent, or inconsistent (some subset product is
/// -Identity).
StabilizerState canonicalize(const std::vector<PauliObservable> &gens);

/// Convenience: parse generator strings and canonicalize.
StabilizerState state_from_strings(const std::vector<std::string> &gens);

bool state_equals(const StabilizerState &a, const StabilizerState &b);

/// Exact Tr(rho sigma) = 0 test: true iff some Pauli P appears with opposite
/// signs in the two stabilizer groups.
bool is_orthogonal(const StabilizerState &a, const StabilizerState &b);

struct MeasurementResult {
    BornProb probability = BornProb::zero;
    std::optional<StabilizerState> post_state;  // absent iff probability zero
};

/// Outcome-conditioned stabilizer measurement update. outcome is +1 or -1.
/// Deterministic cases keep the state; the random case replaces one
/// anticommuting generator by outcome*o and repairs the rest.
MeasurementResult measure_update(const StabilizerState &s, const PauliObservable &o, int outcome);

/// +1 / -1 when o is deterministic on s, 0 otherwise.
int expectation(const StabilizerState &s, const PauliObservable &o);

/// Seedable sampling driver over measure_update. Same rng state, same trace.
struct SampleResult {
    int outcome = 0;
    MeasurementResult result;
};
SampleResult sample_measurement(const StabilizerState &s, const PauliObservable &o,
                                std::mt19937_64 &rng);

/// All pure n-qubit stabilizer states, canonical, deduplicated, in
/// deterministic (key) order. Guarded to n <= 3; the counts are
/// 6 / 60 / 1080.
std::vector<StabilizerState> enumerate_states(std::size_t n);

}  // namespace stabctx::tableau
