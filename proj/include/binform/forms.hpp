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

#include <string>
#include <string_view>
#include <vector>

#include "binform/mpoly.hpp"
#include "binform/poly_matrix.hpp"

namespace binform {

/// Names of the two form variables.
inline const std::string x1_name = "x1";
inline const std::string x2_name = "x2";

/// Binary form F(x) = sum_i a_i x1^(p-i) x2^i of order p, with polynomial
/// coefficients so that generic and numeric forms share one type. No
/// binomial factors are folded into the coefficients.
class BinaryForm {
public:
    explicit BinaryForm(std::vector<MPoly> coeffs);

    static BinaryForm from_rationals(const std::vector<Rational>& coeffs);
    /// Generic form of order p with coefficients named prefix0 .. prefixp.
    static BinaryForm generic(unsigned order, const std::string& prefix = "a");
    /// Reads the coefficients of a homogeneous polynomial in x1, x2.
    static BinaryForm from_mpoly(const MPoly& f, unsigned order);
    /// Comma-separated rational coefficient list "a0,a1,...,ap".
    static BinaryForm parse(std::string_view text);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }
    const MPoly& operator[](std::size_t i) const { return coeffs_[i]; }

    /// True when every coefficient is a constant.
    bool is_numeric() const;
    bool is_zero() const;
    std::vector<Rational> rational_coeffs() const;

    MPoly to_mpoly() const;
    std::string to_string() const;

    BinaryForm operator*(const Rational& c) const;
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<MPoly> coeffs_;
};

/// Product of two forms.
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

/// Invertible 2x2 rational matrix acting on (x1, x2).
class GroupElement {
public:
    GroupElement(Rational g11, Rational g12, Rational g21, Rational g22);

    static GroupElement identity() { return {1, 0, 0, 1}; }

    const Rational& g11() const { return g11_; }
    const Rational& g12() const { return g12_; }
    const Rational& g21() const { return g21_; }
    const Rational& g22() const { return g22_; }
    const Rational& determinant() const { return det_; }

    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

private:
    Rational g11_, g12_, g21_, g22_, det_;
};

/// Degree / order / weight bookkeeping of a covariant of an order-p form,
/// tied together by d p = 2 w + r.
struct CovariantMeta {
    unsigned degree;
    unsigned order;
    unsigned weight;
    unsigned source_order;

    /// Builds the metadata, deriving the weight; throws on parity violations.
    static CovariantMeta of(unsigned degree, unsigned source_order, unsigned order);
};

/// w = (d p - r) / 2; throws DomainError when d p - r is negative or odd.
unsigned weight_of(unsigned d, unsigned p, unsigned r);

/// (gF)(x) = F(g^-1 x).
BinaryForm act(const GroupElement& g, const BinaryForm& f);

/// k-th transvectant (F, G)_k with the prefactor (p-k)!(q-k)!/(p! q!).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, unsigned k);

/// Sylvester determinant of the two coefficient vectors.
MPoly resultant(const BinaryForm& f, const BinaryForm& g);

/// The (p+q) x (p+q) Sylvester matrix: q shifted rows of F, then p of G.
PolyMatrix sylvester_matrix(const BinaryForm& f, const BinaryForm& g);

BinaryForm partial_x1(const BinaryForm& f);
BinaryForm partial_x2(const BinaryForm& f);

/// (-1)^(p(p-1)/2) / p^(p-2) * Res(dF/dx1, dF/dx2), which equals the
/// product of squared root brackets. Requires order >= 2.
MPoly discriminant(const BinaryForm& f);

} // namespace binform
