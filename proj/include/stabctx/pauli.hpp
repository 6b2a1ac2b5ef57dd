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
#include <string>
#include <vector>

namespace stabctx::pauli {

/// Single-qubit Pauli letter. Ordering I < X < Y < Z matches the character
/// ordering of 'I','X','Y','Z' and is the ordering used everywhere a
/// deterministic scan of observables is required.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_to_char(Letter l);
Letter letter_from_char(char c);

/// An element of the n-qubit Pauli group: i^phase_exp * (tensor product of
/// letters). Phases are tracked exactly as an exponent of i mod 4, never as
/// floating point. Hermitian iff phase_exp is 0 or 2.
struct PauliOperator {
    std::vector<Letter> letters;
    std::uint8_t phase_exp = 0;  // mod 4

    std::size_t num_qubits() const { return letters.size(); }
    bool is_identity_letters() const;
    bool is_hermitian() const { return phase_exp == 0 || phase_exp == 2; }

    bool operator==(const PauliOperator &other) const = default;
};

/// Identity operator on n qubits.
PauliOperator identity_operator(std::size_t n);

/// Exact group product a*b with phase tracking. Throws std::invalid_argument
/// on dimension mismatch.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// True iff a and b commute: the number of positions where the letters differ
/// and neither is I must be even.
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// A Hermitian, non-identity Pauli with sign +1 or -1; the unit of
/// measurement and of stabilizer generator lists. The underlying operator
/// always has phase_exp in {0, 2} (sign = (-1)^(phase_exp/2)).
class PauliObservable {
  public:
    /// Throws std::invalid_argument if op is non-Hermitian or +-Identity.
    explicit PauliObservable(PauliOperator op);

    const PauliOperator &op() const { return op_; }
    const std::vector<Letter> &letters() const { return op_.letters; }
    std::size_t num_qubits() const { return op_.num_qubits(); }
    int sign() const { return op_.phase_exp == 0 ? +1 : -1; }

    PauliObservable negated() const;

    bool operator==(const PauliObservable &other) const = default;
    /// Lexicographic on (letters, sign with + before -); gives the canonical
    /// deterministic scan order.
    bool operator<(const PauliObservable &other) const;

  private:
    PauliOperator op_;
};

/// Parses "+YY", "-XZ", ... Sign prefix is mandatory on output but optional
/// on input (absent means +). Throws std::invalid_argument on bad characters,
/// empty strings, or identity letters.
PauliObservable parse_observable(const std::string &text);

/// Formats with an explicit sign prefix, e.g. "+YY". Round-trips with
/// parse_observable.
std::string format_observable(const PauliObservable &o);

/// The sign-+1 representative of {o, -o}. Measuring P and -P is the same
/// experiment with relabeled outcomes, so measurement labels are always
/// canonicalized through this.
PauliObservable canonical_sign(const PauliObservable &o);

/// All 4^n - 1 canonical-sign (positive) non-identity observables on n
/// qubits, in lexicographic letter order.
std::vector<PauliObservable> all_canonical_observables(std::size_t n);

}  // namespace stabctx::pauli
