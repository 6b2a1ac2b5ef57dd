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

#include "stabctx/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace stabctx::bounds {

BigInt count_states(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("count_states requires n >= 1");
    }
    BigInt total = BigInt(1) << n;
    for (std::size_t j = 1; j <= n; ++j) {
        total *= (BigInt(1) << j) + 1;
    }
    return total;
}

BigInt overlap_cap(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("overlap_cap requires n >= 2");
    }
    BigInt cap = 5;
    for (std::size_t i = 2; i < n; ++i) {
        cap *= 3;
    }
    return cap;
}

double log2_big(const BigInt &value) {
    if (value <= 0) {
        throw std::invalid_argument("log2 of non-positive value");
    }
    std::size_t bits = boost::multiprecision::msb(value);
    if (bits <= 62) {
        return std::log2(value.convert_to<double>());
    }
    // Top 53 bits as mantissa, remainder as exponent shift.
    std::size_t shift = bits - 52;
    BigInt top = value >> shift;
    return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

std::vector<BoundReport> bound_report(std::size_t n_from, std::size_t n_to) {
    if (n_from < 2 || n_to < n_from) {
        throw std::invalid_argument("bound_report requires 2 <= n_from <= n_to");
    }
    std::vector<BoundReport> rows;
    rows.reserve(n_to - n_from + 1);
    for (std::size_t n = n_from; n <= n_to; ++n) {
        BoundReport row;
        row.n = n;
        row.state_count = count_states(n);
        row.overlap_cap_m = overlap_cap(n);
        row.lower_bound_bits = log2_big(row.state_count) - log2_big(row.overlap_cap_m);
        row.gk_bits = static_cast<std::uint64_t>(n) * (2 * n + 1);
        row.asymptote_bits = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
        row.asymptote_ratio = row.lower_bound_bits / row.asymptote_bits;
        row.source = "formula";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_report_table(const std::vector<BoundReport> &rows) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(28) << "|S|" << std::setw(16) << "m"
        << std::setw(14) << "bound_bits" << std::setw(10) << "gk_bits" << std::setw(14)
        << "n(n-1)/2" << std::setw(10) << "ratio" << std::setw(10) << "source" << "\n";
    for (const BoundReport &row : rows) {
        std::ostringstream count;
        count << row.state_count;
        std::string count_str = count.str();
        if (count_str.size() > 26) {
            count_str = count_str.substr(0, 10) + "..e" +
                        std::to_string(count_str.size() - 1);
        }
        std::ostringstream cap;
        cap << row.overlap_cap_m;
        out << std::setw(4) << row.n << std::setw(28) << count_str << std::setw(16)
            << cap.str() << std::setw(14) << std::fixed << std::setprecision(3)
            << row.lower_bound_bits << std::setw(10) << row.gk_bits << std::setw(14)
            << std::setprecision(1) << row.asymptote_bits << std::setw(10)
            << std::setprecision(4) << row.asymptote_ratio << std::setw(10) << row.source
            << "\n";
    }
    return out.str();
}

}  // namespace stabctx::bounds
