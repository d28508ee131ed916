// Copyright 2026 The binform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "binform/linalg.hpp"

#include <utility>

namespace binform {

namespace {

// Reduces m to row echelon form in place; returns the pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && is_zero(m[p][c])) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][c])) continue;
            const Rational f = m[r][c];
            for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m)
{
    if (m.empty()) return 0;
    return eliminate(m, m[0].size()).size();
}

std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b)
{
    if (a.size() != b.size()) throw DomainError("right-hand side length does not match the matrix");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    const auto pivots = eliminate(a, n + 1);
    if (!pivots.empty() && pivots.back() == n) throw DomainError("inconsistent linear system");
    if (pivots.size() != n) throw DomainError("linear system has no unique solution");
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
    return x;
}

} // namespace binform
