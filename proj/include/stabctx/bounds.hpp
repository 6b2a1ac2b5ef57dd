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

#include <boost/multiprecision/cpp_int.hpp>

namespace stabctx::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of pure n-qubit stabilizer states: 2^n * prod_{j=1..n}(2^j + 1).
BigInt count_states(std::size_t n);

/// Largest number of states a single internal simulation state can support:
/// 5 * 3^(n-2), valid for n >= 2. Throws for n < 2 (the n = 1 value of 3 sits
/// outside the recursive argument and is reported separately).
BigInt overlap_cap(std::size_t n);

/// log2 of a positive big integer, accurate to ~1e-12 relative.
double log2_big(const BigInt &value);

/// Memory lower-bound row for one qubit count.
struct BoundReport {
    std::size_t n = 0;
    BigInt state_count;        // |S|
    BigInt overlap_cap_m;      // m
    double lower_bound_bits = 0.0;  // log2(|S| / m)
    std::uint64_t gk_bits = 0;      // n(2n+1), the tableau simulation cost
    double asymptote_bits = 0.0;    // n(n-1)/2
    double asymptote_ratio = 0.0;   // lower_bound_bits / asymptote_bits
    std::string source;             // "formula" or "search"
};

/// One row per n in [n_from, n_to], m from the closed form. The n = 2 row can
/// be re-sourced from the exhaustive search by callers.
std::vector<BoundReport> bound_report(std::size_t n_from, std::size_t n_to);

/// Aligned text table of the report rows.
std::string format_report_table(const std::vector<BoundReport> &rows);

}  // namespace stabctx::bounds
