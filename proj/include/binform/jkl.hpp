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

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "binform/mpoly.hpp"

namespace binform {

/// Exponent triple of the monomial L^l K^k J^j.
struct JKLExponent {
    unsigned l = 0;
    unsigned k = 0;
    unsigned j = 0;

    /// Degree in the quintic's coefficients: 12 l + 8 k + 4 j.
    unsigned degree() const { return 12 * l + 8 * k + 4 * j; }
    std::string to_string() const;

    friend auto operator<=>(const JKLExponent&, const JKLExponent&) = default;
    friend JKLExponent operator+(const JKLExponent& a, const JKLExponent& b)
    {
        return {a.l + b.l, a.k + b.k, a.j + b.j};
    }
};

/// Element of the free polynomial ring Q[J, K, L]. Terms iterate with the
/// L exponent descending, then K, then J.
class JKLPolynomial {
public:
    using TermMap = std::map<JKLExponent, Rational, std::greater<>>;

    JKLPolynomial() = default;
    static JKLPolynomial monomial(JKLExponent e, const Rational& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const JKLExponent& e) const;
    /// True when every term has degree d (vacuously true for zero).
    bool is_homogeneous(unsigned d) const;

    JKLPolynomial& add(const JKLExponent& e, const Rational& c);
    friend JKLPolynomial operator+(const JKLPolynomial& a, const JKLPolynomial& b);
    friend JKLPolynomial operator-(const JKLPolynomial& a, const JKLPolynomial& b);
    friend JKLPolynomial operator*(const JKLPolynomial& a, const JKLPolynomial& b);
    friend JKLPolynomial operator*(const JKLPolynomial& a, const Rational& c);
    friend bool operator==(const JKLPolynomial& a, const JKLPolynomial& b) { return a.terms_ == b.terms_; }

    /// Substitutes concrete values (or polynomials) for J, K, L.
    Rational evaluate(const Rational& J, const Rational& K, const Rational& L) const;
    MPoly evaluate(const MPoly& J, const MPoly& K, const MPoly& L) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace binform
