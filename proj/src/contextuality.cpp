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

#include "stabctx/contextuality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stabctx::contextuality {

using pauli::PauliOperator;

ConstraintSystem build_constraints(const std::vector<PauliObservable> &obs) {
    ConstraintSystem sys;
    sys.observables = obs;
    for (PauliObservable &o : sys.observables) {
        o = canonical_sign(o);
    }
    std::sort(sys.observables.begin(), sys.observables.end());
    sys.observables.erase(std::unique(sys.observables.begin(), sys.observables.end()),
                          sys.observables.end());
    if (sys.observables.empty()) {
        return sys;
    }
    std::size_t n = sys.observables[0].num_qubits();
    for (const PauliObservable &o : sys.observables) {
        if (o.num_qubits() != n) {
            throw std::invalid_argument("mixed qubit counts in observable set");
        }
    }

    std::set<Gf2Equation> equations;
    for (std::size_t i = 0; i < sys.observables.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.observables.size(); ++j) {
            const PauliObservable &a = sys.observables[i];
            const PauliObservable &b = sys.observables[j];
            if (!commutes(a.op(), b.op())) {
                continue;
            }
            PauliOperator prod = multiply(a.op(), b.op());
            if (prod.is_identity_letters()) {
                continue;  // b = +-a cannot happen after dedup; skip regardless
            }
            PauliObservable signed_prod{prod};
            PauliObservable c = canonical_sign(signed_prod);
            auto it = std::lower_bound(sys.observables.begin(), sys.observables.end(), c);
            if (it == sys.observables.end() || !(*it == c)) {
                continue;
            }
            std::size_t k = static_cast<std::size_t>(it - sys.observables.begin());
            Gf2Equation eq;
            eq.vars = {i, j, k};
            std::sort(eq.vars.begin(), eq.vars.end());
            eq.rhs = signed_prod.sign() < 0 ? 1 : 0;
            equations.insert(eq);
        }
    }
    sys.equations.assign(equations.begin(), equations.end());
    return sys;
}

NcvaResult ncva_exists(const std::vector<PauliObservable> &obs) {
    ConstraintSystem sys = build_constraints(obs);
    std::size_t num_vars = sys.observables.size();

    // Working rows: coefficient bitset + rhs, plus the set of original
    // equation indices combined into the row (for the infeasibility witness).
    struct Row {
        std::vector<std::uint64_t> coeffs;
        std::uint8_t rhs = 0;
        std::vector<std::uint64_t> origin;
    };
    std::size_t coeff_words = (num_vars + 63) / 64;
    std::size_t origin_words = (sys.equations.size() + 63) / 64;

    std::vector<Row> rows;
    rows.reserve(sys.equations.size());
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        Row row;
        row.coeffs.assign(coeff_words, 0);
        row.origin.assign(origin_words, 0);
        for (std::size_t v : sys.equations[e].vars) {
            row.coeffs[v / 64] ^= std::uint64_t{1} << (v % 64);
        }
        row.rhs = sys.equations[e].rhs;
        row.origin[e / 64] |= std::uint64_t{1} << (e % 64);
        rows.push_back(std::move(row));
    }

    auto coeff_bit = [&](const Row &row, std::size_t v) {
        return (row.coeffs[v / 64] >> (v % 64)) & 1;
    };
    auto add_row = [&](Row &dst, const Row &src) {
        for (std::size_t w = 0; w < coeff_words; ++w) {
            dst.coeffs[w] ^= src.coeffs[w];
        }
        for (std::size_t w = 0; w < origin_words; ++w) {
            dst.origin[w] ^= src.origin[w];
        }
        dst.rhs ^= src.rhs;
    };

    std::vector<std::size_t> pivot_var;  // per eliminated row
    std::size_t rank = 0;
    for (std::size_t v = 0; v < num_vars && rank < rows.size(); ++v) {
        std::size_t hit = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (coeff_bit(rows[r], v)) {
                hit = r;
                break;
            }
        }
        if (hit == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[hit]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && coeff_bit(rows[r], v)) {
                add_row(rows[r], rows[rank]);
            }
        }
        pivot_var.push_back(v);
        ++rank;
    }

    NcvaResult result;
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r].rhs) {
            result.feasible = false;
            for (std::size_t e = 0; e < sys.equations.size(); ++e) {
                if ((rows[r].origin[e / 64] >> (e % 64)) & 1) {
                    result.witness_equations.push_back(e);
                }
            }
            return result;
        }
    }

    result.feasible = true;
    std::vector<std::uint8_t> values(num_vars, 0);  // free variables -> +1
    for (std::size_t r = 0; r < rank; ++r) {
        values[pivot_var[r]] = rows[r].rhs;  // RREF: non-pivot coeffs are free vars, all 0
    }
    for (std::size_t v = 0; v < num_vars; ++v) {
        result.assignment[sys.observables[v]] = values[v] ? -1 : +1;
    }
    return result;
}

std::vector<PauliObservable> peres_mermin_square() {
    std::vector<PauliObservable> out;
    for (const char *text : {"+ZI", "+IZ", "+ZZ", "+IX", "+XI", "+XX", "+ZX", "+XZ", "+YY"}) {
        out.push_back(pauli::parse_observable(text));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stabctx::contextuality
