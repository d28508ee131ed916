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
#include <vector>

#include "binform/forms.hpp"
#include "binform/jkl.hpp"

namespace binform {

// ---------------------------------------------------------------------------
// Binary quartic

/// Quartic in the binomial convention
///   Q = q0 x1^4 + 4 q1 x1^3 x2 + 6 q2 x1^2 x2^2 + 4 q3 x1 x2^3 + q4 x2^4.
/// Use from_form for a plain coefficient vector; the two conventions are
/// never mixed implicitly.
class Quartic {
public:
    static Quartic from_binomial(std::array<MPoly, 5> q);
    /// Converts a plain order-4 form; throws DomainError for other orders.
    static Quartic from_form(const BinaryForm& f);

    const std::array<MPoly, 5>& q() const { return q_; }
    BinaryForm form() const;

private:
    explicit Quartic(std::array<MPoly, 5> q) : q_(std::move(q)) {}
    std::array<MPoly, 5> q_;
};

/// S = 1/2 (Q,Q)_4, computed by transvectant.
MPoly quartic_S(const Quartic& q);
/// T = 1/6 (Q,(Q,Q)_2)_4, computed by transvectant.
MPoly quartic_T(const Quartic& q);
/// q0 q4 - 4 q1 q3 + 3 q2^2
MPoly quartic_S_cartesian(const Quartic& q);
/// q0 q2 q4 + 2 q1 q2 q3 - q2^3 - q0 q3^2 - q1^2 q4
MPoly quartic_T_cartesian(const Quartic& q);

struct QuarticInvariants {
    MPoly S;
    MPoly T;
};

QuarticInvariants quartic_invariants(const Quartic& q);

/// j = S^3 / (S^3 - 27 T^2) of a numeric quartic. Throws DomainError
/// ("degenerate quartic") when the denominator vanishes.
Rational j_invariant(const Quartic& q);

// ---------------------------------------------------------------------------
// Binary quintic

struct QuinticCovariants {
    BinaryForm c1;  // (F,F)_4, order 2
    BinaryForm c2;  // (F,C1)_2, order 3
    BinaryForm c3;  // (C2,C2)_2, order 2
    BinaryForm c4;  // (C2,C1)_2, order 1
};

QuinticCovariants quintic_covariants(const BinaryForm& f);

/// The cubic covariant -C2.
BinaryForm canonizant(const BinaryForm& f);

/// J, K, L, H and the discriminant of a quintic.
struct InvariantVector {
    MPoly J, K, L, H, Disc;

    static constexpr std::array<unsigned, 5> degrees{4, 8, 12, 18, 8};
    static constexpr std::array<unsigned, 5> weights{10, 20, 30, 45, 20};
};

/// J = -1/2 (C1,C1)_2, K = 1/8 (C1,C3)_2, L = 1/96 (C3,C3)_2,
/// H = -1/384 ((C4,C3)_1, (C1,C4)_1)_1; Disc through the resultant of the
/// partials. Throws DomainError unless the form has order 5.
InvariantVector quintic_invariants(const BinaryForm& f);

/// -432 L^3 - 72 L^2 K J + 8 L K^3 - 2 L K^2 J^2 + L^2 J^3 + K^4 J
MPoly syzygy_rhs(const MPoly& J, const MPoly& K, const MPoly& L);
/// The same right-hand side as an element of Q[J, K, L].
JKLPolynomial syzygy_rhs_jkl();

/// True iff 16 H^2 equals syzygy_rhs(J, K, L) exactly.
bool verify_relation(const InvariantVector& iv);

/// 5^5 (J^2 - 128 K)
MPoly disc_from_jk(const MPoly& J, const MPoly& K);

// ---------------------------------------------------------------------------
// Sylvester canonical form u x1^5 + v x2^5 - w (x1 + x2)^5

struct SylvesterPoint {
    MPoly u, v, w;

    /// Indeterminate u, v, w.
    static SylvesterPoint symbolic();
};

/// Coefficients [u-w, -5w, -10w, -10w, -5w, v-w].
BinaryForm sylvester_specialize(const SylvesterPoint& pt);

/// J, K, L, H of the canonical form in closed form:
///   J = (uv+uw+vw)^2 - 4uvw(u+v+w), K = u^2v^2w^2(uv+uw+vw),
///   L = u^4v^4w^4, H = u^5v^5w^5(u-v)(u-w)(v-w).
struct CanonicalInvariants {
    MPoly J, K, L, H;
};

CanonicalInvariants canonical_closed_forms(const SylvesterPoint& pt);

// ---------------------------------------------------------------------------
// Graded dimensions of the invariant ring of the quintic

/// nu(k) = floor(k/6) if 6 | (k-1), else floor(k/6) + 1.
unsigned long nu(unsigned long k);

/// nu(0) + ... + nu(d/4). Throws DomainError unless 4 | d and d > 0.
unsigned long graded_dimension(unsigned long d);

/// 3 l^2 + 3 l + 1, the dimension in degree 24 l.
unsigned long graded_dimension_24(unsigned long l);

/// Every L^l K^k J^j of degree d, L exponent descending, then K.
/// Throws DomainError unless 4 | d and d > 0.
std::vector<JKLExponent> monomial_basis(unsigned long d);

} // namespace binform
