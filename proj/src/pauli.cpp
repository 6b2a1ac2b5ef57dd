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

#include "stabctx/pauli.hpp"

#include <stdexcept>

namespace stabctx::pauli {

namespace {

// Single-qubit products: a*b = i^phase * letter.
// Indexed [a][b] with I=0, X=1, Y=2, Z=3.
constexpr Letter kMulLetter[4][4] = {
    {Letter::I, Letter::X, Letter::Y, Letter::Z},
    {Letter::X, Letter::I, Letter::Z, Letter::Y},
    {Letter::Y, Letter::Z, Letter::I, Letter::X},
    {Letter::Z, Letter::Y, Letter::X, Letter::I},
};

// X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up i^3.
constexpr std::uint8_t kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

void require_same_dims(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli operators act on different qubit counts");
    }
}

}  // namespace

char letter_to_char(Letter l) {
    return "IXYZ"[static_cast<int>(l)];
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Y':
            return Letter::Y;
        case 'Z':
            return Letter::Z;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
    }
}

bool PauliOperator::is_identity_letters() const {
    for (Letter l : letters) {
        if (l != Letter::I) {
            return false;
        }
    }
    return true;
}

PauliOperator identity_operator(std::size_t n) {
    return PauliOperator{std::vector<Letter>(n, Letter::I), 0};
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    require_same_dims(a, b);
    PauliOperator out;
    out.letters.reserve(a.num_qubits());
    unsigned phase = a.phase_exp + b.phase_exp;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        int la = static_cast<int>(a.letters[q]);
        int lb = static_cast<int>(b.letters[q]);
        out.letters.push_back(kMulLetter[la][lb]);
        phase += kMulPhase[la][lb];
    }
    out.phase_exp = static_cast<std::uint8_t>(phase % 4);
    return out;
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    require_same_dims(a, b);
    int anticommuting = 0;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        Letter la = a.letters[q];
        Letter lb = b.letters[q];
        if (la != Letter::I && lb != Letter::I && la != lb) {
            ++anticommuting;
        }
    }
    return anticommuting % 2 == 0;
}

PauliObservable::PauliObservable(PauliOperator op) : op_(std::move(op)) {
    if (!op_.is_hermitian()) {
        throw std::invalid_argument("observable must be Hermitian (phase_exp 0 or 2)");
    }
    if (op_.is_identity_letters()) {
        throw std::invalid_argument("identity is not an observable");
    }
    if (op_.letters.empty()) {
        throw std::invalid_argument("observable must act on at least one qubit");
    }
}

PauliObservable PauliObservable::negated() const {
    PauliOperator op = op_;
    op.phase_exp = static_cast<std::uint8_t>((op.phase_exp + 2) % 4);
    return PauliObservable(std::move(op));
}

bool PauliObservable::operator<(const PauliObservable &other) const {
    if (op_.letters != other.op_.letters) {
        return op_.letters < other.op_.letters;
    }
    return op_.phase_exp < other.op_.phase_exp;
}

PauliObservable parse_observable(const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("empty observable string");
    }
    std::size_t start = 0;
    std::uint8_t phase = 0;
    if (text[0] == '+' || text[0] == '-') {
        phase = text[0] == '-' ? 2 : 0;
        start = 1;
    }
    if (start == text.size()) {
        throw std::invalid_argument("observable string has no letters: \"" + text + "\"");
    }
    PauliOperator op;
    op.phase_exp = phase;
    op.letters.reserve(text.size() - start);
    for (std::size_t i = start; i < text.size(); ++i) {
        op.letters.push_back(letter_from_char(text[i]));
    }
    return PauliObservable(std::move(op));
}

std::string format_observable(const PauliObservable &o) {
    std::string out;
    out.reserve(o.num_qubits() + 1);
    out.push_back(o.sign() > 0 ? '+' : '-');
    for (Letter l : o.letters()) {
        out.push_back(letter_to_char(l));
    }
    return out;
}

PauliObservable canonical_sign(const PauliObservable &o) {
    return o.sign() > 0 ? o : o.negated();
}

std::vector<PauliObservable> all_canonical_observables(std::size_t n) {
    std::vector<PauliObservable> out;
    std::size_t total = 1;
    for (std::size_t q = 0; q < n; ++q) {
        total *= 4;
    }
    out.reserve(total - 1);
    for (std::size_t code = 1; code < total; ++code) {
        PauliOperator op;
        op.letters.assign(n, Letter::I);
        std::size_t rem = code;
        // Base-4 digits, most significant digit = qubit 0, so the emitted
        // order is lexicographic in the string form.
        for (std::size_t q = n; q-- > 0;) {
            op.letters[q] = static_cast<Letter>(rem % 4);
            rem /= 4;
        }
        out.emplace_back(std::move(op));
    }
    return out;
}

}  // namespace stabctx::pauli
