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

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binform/rational.hpp"

namespace binform {

/// Raised when an operation names a variable outside a polynomial's universe.
class UnknownVariable : public DomainError {
public:
    using DomainError::DomainError;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Every polynomial carries a variable universe: a sorted list of at most
/// eight names. Exponents are packed one byte per variable into a 64-bit
/// word, first variable in the most significant byte, so lexicographic
/// comparison is an integer comparison. Terms are kept sorted in descending
/// graded-lexicographic order and zero coefficients are never stored.
/// Binary operations work on the union of the operands' universes.
class MPoly {
public:
    static constexpr std::size_t max_variables = 8;
    static constexpr unsigned max_exponent = 255;

    struct Term {
        std::uint64_t exps = 0;
        Rational coeff;
    };

    using Universe = std::shared_ptr<const std::vector<std::string>>;

    MPoly();
    MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MPoly(long c);             // NOLINT(google-explicit-constructor)

    static MPoly variable(const std::string& name);
    static MPoly monomial(const std::string& name, unsigned exponent, const Rational& c = 1);
    static MPoly zero_over(std::span<const std::string> names);

    /// Parses the text format `c*v1^e1*v2^e2 + ...`. Coefficients may be
    /// written `p/q`; parentheses, `*`, `/` (by constants) and `^` are
    /// accepted. `extra` widens the universe beyond the names that appear.
    static MPoly parse(std::string_view text, std::span<const std::string> extra = {});

    const std::vector<std::string>& variables() const { return *vars_; }
    const Universe& universe() const { return vars_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws DomainError otherwise.
    Rational constant_value() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;

    bool has_variable(std::string_view name) const;
    std::size_t variable_index(std::string_view name) const;
    unsigned exponent(const Term& t, std::size_t var_index) const;
    std::vector<unsigned> exponents(const Term& t) const;

    unsigned degree(std::string_view var) const;
    unsigned total_degree() const;
    /// True when every term has total degree `d`.
    bool is_homogeneous(unsigned d) const;

    /// Same polynomial over a universe extended with `names`.
    MPoly with_variables(std::span<const std::string> names) const;
    /// Same polynomial with unused variables removed from the universe.
    MPoly compact() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    MPoly& operator/=(const Rational& c);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const Rational& c);
    friend MPoly operator*(const Rational& c, const MPoly& a) { return a * c; }
    friend MPoly operator/(const MPoly& a, const Rational& c);
    friend MPoly operator*(const MPoly& a, long c) { return a * Rational(c); }
    friend MPoly operator/(const MPoly& a, long c) { return a / Rational(c); }

    /// Polynomial equality; unused universe variables are ignored.
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly pow(unsigned e) const;

    std::string to_string() const;

    /// Builds a polynomial from explicit (exponent vector, coefficient) pairs
    /// over `names` (sorted or not). Duplicate monomials are summed.
    static MPoly from_terms(std::span<const std::string> names,
                            const std::vector<std::pair<std::vector<unsigned>, Rational>>& terms);

private:
    friend class MPolyAccess;
    MPoly(Universe vars, std::vector<Term> terms);

    Universe vars_;
    std::vector<Term> terms_;
};

/// Partial derivative. Throws UnknownVariable if `var` is not in f's universe.
MPoly diff(const MPoly& f, std::string_view var);

/// Simultaneous substitution of variables by polynomials.
MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings);

/// Coefficient of var^k, a polynomial in the remaining variables.
MPoly coefficient(const MPoly& f, std::string_view var, unsigned k);

struct DivRem {
    MPoly quotient;
    MPoly remainder;
};

/// Euclidean division in `var` by a divisor whose leading coefficient in
/// `var` is exactly 1. Throws DomainError if the divisor is not monic.
DivRem monic_divrem(const MPoly& f, const MPoly& g, std::string_view var);

/// Exact multivariate division. Throws DomainError if g does not divide f.
MPoly exact_div(const MPoly& f, const MPoly& g);

/// Multiplies each term by var^(degree - its total degree). Throws
/// DomainError if a term already exceeds `degree`.
MPoly homogenize(const MPoly& f, const std::string& var, unsigned degree);

} // namespace binform
