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

#include "stabctx/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stabctx::tableau {

using pauli::Letter;

namespace {

// Symplectic bit columns, qubit-major with X before Z.
bool column_bit(const PauliOperator &op, std::size_t col) {
    Letter l = op.letters[col / 2];
    if (col % 2 == 0) {
        return l == Letter::X || l == Letter::Y;
    }
    return l == Letter::Z || l == Letter::Y;
}

struct ReducedRows {
    std::vector<PauliOperator> rows;  // RREF order, no identity rows
    bool inconsistent = false;        // some subset product was -Identity
};

// Full row reduction over GF(2) with exact sign propagation via Pauli
// multiplication. Input rows must pairwise commute for signs to stay in
// {+1,-1}.
ReducedRows reduce_rows(std::vector<PauliOperator> rows, std::size_t n) {
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < 2 * n && pivot < rows.size(); ++col) {
        std::size_t hit = rows.size();
        for (std::size_t r = pivot; r < rows.size(); ++r) {
            if (column_bit(rows[r], col)) {
                hit = r;
                break;
            }
        }
        if (hit == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[hit]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot && column_bit(rows[r], col)) {
                rows[r] = multiply(rows[r], rows[pivot]);
            }
        }
        ++pivot;
    }
    ReducedRows out;
    out.rows.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (std::size_t r = pivot; r < rows.size(); ++r) {
        if (rows[r].phase_exp != 0) {
            out.inconsistent = true;
        }
    }
    return out;
}

void require_same_n(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("qubit count mismatch");
    }
}

}  // namespace

double born_prob_value(BornProb p) {
    switch (p) {
        case BornProb::zero:
            return 0.0;
        case BornProb::half:
            return 0.5;
        case BornProb::one:
            return 1.0;
    }
    return 0.0;
}

std::vector<PauliOperator> StabilizerState::group_elements() const {
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << n_);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n_); ++mask) {
        PauliOperator acc = pauli::identity_operator(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (mask & (std::size_t{1} << i)) {
                acc = multiply(acc, gens_[i].op());
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::string StabilizerState::key() const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += format_observable(gens_[i]);
    }
    return out;
}

bool StabilizerState::operator<(const StabilizerState &other) const {
    return key() < other.key();
}

StabilizerState canonicalize(const std::vector<PauliObservable> &gens) {
    if (gens.empty()) {
        throw std::invalid_argument("empty generator list");
    }
    std::size_t n = gens[0].num_qubits();
    if (gens.size() != n) {
        throw std::invalid_argument("need exactly n generators for an n-qubit state");
    }
    std::vector<PauliOperator> rows;
    rows.reserve(n);
    for (const PauliObservable &g : gens) {
        require_same_n(g.num_qubits(), n);
        rows.push_back(g.op());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!commutes(rows[i], rows[j])) {
                throw std::invalid_argument("generators do not pairwise commute");
            }
        }
    }
    ReducedRows reduced = reduce_rows(std::move(rows), n);
    if (reduced.inconsistent) {
        throw std::invalid_argument("inconsistent generator list (-Identity in the group)");
    }
    if (reduced.rows.size() < n) {
        throw std::invalid_argument("dependent generator list");
    }
    std::vector<PauliObservable> canon;
    canon.reserve(n);
    for (PauliOperator &row : reduced.rows) {
        canon.emplace_back(std::move(row));
    }
    return StabilizerState(n, std::move(canon));
}

StabilizerState state_from_strings(const std::vector<std::string> &gens) {
    std::vector<PauliObservable> parsed;
    parsed.reserve(gens.size());
    for (const std::string &g : gens) {
        parsed.push_back(pauli::parse_observable(g));
    }
    return canonicalize(parsed);
}

bool state_equals(const StabilizerState &a, const StabilizerState &b) {
    require_same_n(a.num_qubits(), b.num_qubits());
    return a == b;
}

bool is_orthogonal(const StabilizerState &a, const StabilizerState &b) {
    require_same_n(a.num_qubits(), b.num_qubits());
    std::map<std::vector<Letter>, std::uint8_t> signs;
    for (const PauliOperator &g : b.group_elements()) {
        signs[g.letters] = g.phase_exp;
    }
    for (const PauliOperator &g : a.group_elements()) {
        auto it = signs.find(g.letters);
        if (it != signs.end() && it->second != g.phase_exp) {
            return true;
        }
    }
    return false;
}

MeasurementResult measure_update(const StabilizerState &s, const PauliObservable &o,
                                 int outcome) {
    require_same_n(s.num_qubits(), o.num_qubits());
    if (outcome != +1 && outcome != -1) {
        throw std::invalid_argument("outcome must be +1 or -1");
    }
    PauliObservable target = outcome > 0 ? o : o.negated();

    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
        if (!commutes(s.generators()[i].op(), o.op())) {
            anti.push_back(i);
        }
    }

    if (anti.empty()) {
        // o commutes with the full (maximal) group, so +-o is a member.
        for (const PauliOperator &g : s.group_elements()) {
            if (g.letters == o.letters()) {
                if (g == target.op()) {
                    return MeasurementResult{BornProb::one, s};
                }
                return MeasurementResult{BornProb::zero, std::nullopt};
            }
        }
        throw std::logic_error("commuting observable missing from maximal stabilizer group");
    }

    std::vector<PauliObservable> new_gens;
    new_gens.reserve(s.num_qubits());
    const PauliObservable &pivot = s.generators()[anti[0]];
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
        if (i == anti[0]) {
            continue;
        }
        const PauliObservable &g = s.generators()[i];
        if (commutes(g.op(), o.op())) {
            new_gens.push_back(g);
        } else {
            new_gens.emplace_back(multiply(g.op(), pivot.op()));
        }
    }
    new_gens.push_back(target);
    return MeasurementResult{BornProb::half, canonicalize(new_gens)};
}

int expectation(const StabilizerState &s, const PauliObservable &o) {
    require_same_n(s.num_qubits(), o.num_qubits());
    for (const PauliOperator &g : s.group_elements()) {
        if (g.letters == o.letters()) {
            int gsign = g.phase_exp == 0 ? +1 : -1;
            return gsign * o.sign();
        }
    }
    return 0;
}

SampleResult sample_measurement(const StabilizerState &s, const PauliObservable &o,
                                std::mt19937_64 &rng) {
    MeasurementResult plus = measure_update(s, o, +1);
    switch (plus.probability) {
        case BornProb::one:
            return SampleResult{+1, std::move(plus)};
        case BornProb::zero:
            return SampleResult{-1, measure_update(s, o, -1)};
        case BornProb::half: {
            int outcome = (rng() & 1) ? +1 : -1;
            if (outcome > 0) {
                return SampleResult{+1, std::move(plus)};
            }
            return SampleResult{-1, measure_update(s, o, -1)};
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<StabilizerState> enumerate_states(std::size_t n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("enumerate_states supports 1 <= n <= 3");
    }

    std::vector<PauliObservable> candidates;
    for (const PauliObservable &o : pauli::all_canonical_observables(n)) {
        candidates.push_back(o);
        candidates.push_back(o.negated());
    }

    // Grow canonical partial generator groups one level at a time,
    // deduplicating by reduced-row key so each subgroup is visited once.
    std::map<std::string, std::vector<PauliOperator>> level;
    level.emplace("", std::vector<PauliOperator>{});
    for (std::size_t depth = 0; depth < n; ++depth) {
        std::map<std::string, std::vector<PauliOperator>> next;
        for (const auto &[key, rows] : level) {
            for (const PauliObservable &c : candidates) {
                bool ok = true;
                for (const PauliOperator &row : rows) {
                    if (!commutes(row, c.op())) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                std::vector<PauliOperator> extended = rows;
                extended.push_back(c.op());
                ReducedRows reduced = reduce_rows(std::move(extended), n);
                if (reduced.inconsistent || reduced.rows.size() != depth + 1) {
                    continue;
                }
                std::string new_key;
                for (const PauliOperator &row : reduced.rows) {
                    new_key += format_observable(PauliObservable(row));
                    new_key.push_back(',');
                }
                next.emplace(std::move(new_key), std::move(reduced.rows));
            }
        }
        level = std::move(next);
    }

    std::vector<StabilizerState> out;
    out.reserve(level.size());
    for (auto &[key, rows] : level) {
        std::vector<PauliObservable> gens;
        gens.reserve(rows.size());
        for (PauliOperator &row : rows) {
            gens.emplace_back(std::move(row));
        }
        out.push_back(canonicalize(gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stabctx::tableau
