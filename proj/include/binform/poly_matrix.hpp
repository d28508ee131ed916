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

#pragma once

#include <cstddef>
#include <vector>

#include "binform/mpoly.hpp"

namespace binform {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols);
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MPoly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    MPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<MPoly>& entries() const { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MPoly> entries_;
};

/// Determinant by Bareiss fraction-free elimination: every intermediate
/// entry is a minor of the input, so each step divides exactly by the
/// previous pivot. Matrices smaller than 4x4 use cofactor expansion.
/// Throws DomainError for non-square input.
MPoly det_fraction_free(const PolyMatrix& m);

/// Laplace expansion along the first row.
MPoly det_cofactor(const PolyMatrix& m);

} // namespace binform
