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

#include "binform/poly_matrix.hpp"

#include <utility>

#include "binform/parallel.hpp"

namespace binform {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : PolyMatrix(rows, cols, std::vector<MPoly>(rows * cols))
{
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

namespace {

MPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row)
{
    const std::size_t n = m.rows();
    if (row + 1 == n) return m(row, cols[0]);
    MPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const MPoly& a = m(row, cols[k]);
        if (a.is_zero()) continue;
        const std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        MPoly minor = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        if (k % 2 == 0) acc += a * minor;
        else acc -= a * minor;
    }
    return acc;
}

} // namespace

MPoly det_cofactor(const PolyMatrix& m)
{
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cofactor_rec(m, cols, 0);
}

MPoly det_fraction_free(const PolyMatrix& m)
{
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n < 4) return det_cofactor(m);

    PolyMatrix a = m;
    bool negate = false;
    MPoly previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return MPoly::zero_over(m(0, 0).variables());
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
            negate = !negate;
        }
        const std::size_t width = n - k - 1;
        const MPoly& pivot = a(k, k);
        parallel_for(width * width, [&](std::size_t idx) {
            const std::size_t i = k + 1 + idx / width;
            const std::size_t j = k + 1 + idx % width;
            MPoly num = a(i, j) * pivot - a(i, k) * a(k, j);
            a(i, j) = exact_div(num, previous);
        });
        previous = a(k, k);
    }
    MPoly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace binform
