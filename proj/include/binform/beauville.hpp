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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binform/forms.hpp"
#include "binform/invariants.hpp"
#include "binform/jkl.hpp"
#include "binform/linalg.hpp"

namespace binform {

/// The quintic has a repeated root where a stable one is required.
class UnstableForm : public DomainError {
public:
    using DomainError::DomainError;
};

/// decompose_in_jkl found a nonzero residual.
class NotInSubring : public DomainError {
public:
    using DomainError::DomainError;
};

inline const std::string lambda_name = "lambda";
inline const std::string z_name = "z";

/// The six degree-24 invariants, coefficients of z^5 .. z^0 in
/// prod_i ((S(Q_i)^3 - 27 T(Q_i)^2) z - S(Q_i)^3), where Q_i = F / (x - lambda_i).
struct BeauvilleVector {
    std::array<MPoly, 6> b;
};

/// Intermediates of one run of the reduction/resultant pipeline.
struct TschirnhausTrace {
    std::array<MPoly, 5> q;  // binomial-convention quartic F(x)/(x - lambda)
    MPoly phi;               // degree <= 12 in lambda, 1 in z
    MPoly phi_quotient;      // phi = phi_quotient * F(lambda) + phi_bar
    MPoly phi_bar;           // degree <= 4 in lambda
    MPoly f_lambda;          // the monic quintic in lambda
    MPoly r_bar;             // Res(F, phi_bar), degree 5 in z
};

struct PipelineResult {
    BeauvilleVector values;
    TschirnhausTrace trace;
};

/// F(x) / (x - lambda) for the monic quintic x^5 + a1 x^4 + ... + a5, in the
/// binomial convention: q0 = 1, q1 = (lambda + a1)/4,
/// q2 = (lambda^2 + a1 lambda + a2)/6, q3 = (lambda^3 + ... + a3)/4,
/// q4 = lambda^4 + ... + a4.
Quartic quartic_of_root(const std::array<MPoly, 4>& a, const std::string& lambda = lambda_name);

/// (S^3 - 27 T^2) z - S^3 for the given quartic.
MPoly build_phi(const Quartic& q, const std::string& z = z_name);

/// Runs the pipeline for a monic quintic with coefficients a1..a5 (any
/// polynomials free of lambda and z): reduce phi modulo F(lambda), take the
/// Sylvester resultant, read off the z-coefficients.
PipelineResult monic_pipeline(const std::array<MPoly, 5>& a);

/// Full pipeline for an order-5 form. Numeric forms are made monic
/// (after an SL2 shear when a0 = 0) and rescaled by a0^24. Symbolic forms
/// go through the generic Cartesian expressions, then substitution.
PipelineResult beauville_pipeline(const BinaryForm& f);

/// Cartesian B_0..B_5 as homogeneous degree-24 polynomials in a0..a5,
/// computed once per process and cached.
const BeauvilleVector& cartesian_beauville();

/// The closed forms in J, K, L, indexed 0..5.
const std::array<JKLPolynomial, 6>& keyprop_table();

/// B_0..B_5 of a numeric quintic from the closed forms.
std::array<Rational, 6> beauville_closed_form(const BinaryForm& f);

/// B_0..B_5 of a numeric quintic by the resultant pipeline.
std::array<Rational, 6> beauville_by_pipeline(const BinaryForm& f);

/// Writes an invariant P(a0..a5) of degree d as a polynomial in J, K, L by
/// specializing to the Sylvester canonical form and matching every
/// (u, v, w)-monomial. Throws NotInSubring if the residual is nonzero.
JKLPolynomial decompose_in_jkl(const MPoly& p, unsigned d);

struct KeypropReport {
    std::array<bool, 6> match{};
    std::array<JKLPolynomial, 6> computed;
    std::array<JKLPolynomial, 6> expected;
    double seconds = 0;
    double pipeline_seconds = 0;

    bool all_match() const;
};

/// Recomputes B_0..B_5 symbolically and compares each decomposition with
/// `expected` (the built-in table by default).
KeypropReport verify_keyprop(const std::array<JKLPolynomial, 6>& expected = keyprop_table());

struct Prop48Result {
    std::vector<JKLExponent> basis;               // rows
    std::vector<std::pair<int, int>> products;    // columns: B_i B_j, i <= j
    RationalMatrix matrix;                        // basis.size() x products.size()
    std::size_t rank = 0;
};

/// Coefficients of the 21 products B_i B_j over the degree-48 monomial basis.
Prop48Result prop48_rank();

/// Factors L^l K^k J^j of degree 48 n into degree-48 monomials following the
/// division-by-(4, 6, 12) induction. Throws DomainError unless the degree is
/// a positive multiple of 48.
std::vector<JKLExponent> thm48_decompose(const JKLExponent& alpha);

struct EquivalenceResult {
    bool equivalent = false;
    /// When equivalent: any s with s^root_degree == root_value relates the
    /// two invariant vectors (J, K, L, H) -> (s^2 J, s^4 K, s^6 L, s^9 H).
    unsigned root_degree = 0;
    Rational root_value;
    /// A rational s with s^root_degree == root_value, when one exists.
    std::optional<Rational> scalar;
    std::string reason;
};

/// Decides whether two stable numeric quintics lie in one GL2 orbit (over
/// the algebraic closure) from their J, K, L, H. Throws UnstableForm when
/// either discriminant vanishes.
EquivalenceResult gl2_equivalent(const BinaryForm& f1, const BinaryForm& f2);

/// Same decision for explicit invariant vectors (J, K, L, H, Disc numeric).
EquivalenceResult gl2_equivalent(const InvariantVector& i1, const InvariantVector& i2);

/// True iff the Beauville vectors are proportional. Throws UnstableForm when
/// either B_0 vanishes.
bool same_j_data(const BinaryForm& f1, const BinaryForm& f2);
bool same_j_data(const std::array<Rational, 6>& b1, const std::array<Rational, 6>& b2);

} // namespace binform
