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

#include "binform/invariants.hpp"

namespace binform {

namespace {

void require_order(const BinaryForm& f, unsigned p, const char* what)
{
    if (f.order() != p)
        throw DomainError(std::string(what) + " needs a form of order " + std::to_string(p) + ", got " +
                          std::to_string(f.order()));
}

MPoly constant_of(const BinaryForm& f)
{
    if (f.order() != 0) throw DomainError("expected an invariant (order 0)");
    return f[0];
}

} // namespace

Quartic Quartic::from_binomial(std::array<MPoly, 5> q) { return Quartic(std::move(q)); }

Quartic Quartic::from_form(const BinaryForm& f)
{
    require_order(f, 4, "quartic");
    return Quartic({f[0], f[1] / 4, f[2] / 6, f[3] / 4, f[4]});
}

BinaryForm Quartic::form() const { return BinaryForm({q_[0], q_[1] * 4, q_[2] * 6, q_[3] * 4, q_[4]}); }

MPoly quartic_S(const Quartic& q)
{
    const BinaryForm Q = q.form();
    return constant_of(transvectant(Q, Q, 4)) / 2;
}

MPoly quartic_T(const Quartic& q)
{
    const BinaryForm Q = q.form();
    return constant_of(transvectant(Q, transvectant(Q, Q, 2), 4)) / 6;
}

MPoly quartic_S_cartesian(const Quartic& quartic)
{
    const auto& q = quartic.q();
    return q[0] * q[4] - q[1] * q[3] * 4 + q[2] * q[2] * 3;
}

MPoly quartic_T_cartesian(const Quartic& quartic)
{
    const auto& q = quartic.q();
    return q[0] * q[2] * q[4] + q[1] * q[2] * q[3] * 2 - q[2].pow(3) - q[0] * q[3] * q[3] - q[1] * q[1] * q[4];
}

QuarticInvariants quartic_invariants(const Quartic& q) { return {quartic_S(q), quartic_T(q)}; }

Rational j_invariant(const Quartic& q)
{
    const Rational S = quartic_S(q).constant_value();
    const Rational T = quartic_T(q).constant_value();
    const Rational s3 = S * S * S;
    const Rational den = s3 - 27 * T * T;
    if (is_zero(den)) throw DomainError("degenerate quartic: S^3 - 27 T^2 = 0");
    return s3 / den;
}

QuinticCovariants quintic_covariants(const BinaryForm& f)
{
    require_order(f, 5, "quintic covariants");
    BinaryForm c1 = transvectant(f, f, 4);
    BinaryForm c2 = transvectant(f, c1, 2);
    BinaryForm c3 = transvectant(c2, c2, 2);
    BinaryForm c4 = transvectant(c2, c1, 2);
    return {std::move(c1), std::move(c2), std::move(c3), std::move(c4)};
}

BinaryForm canonizant(const BinaryForm& f) { return quintic_covariants(f).c2 * Rational(-1); }

InvariantVector quintic_invariants(const BinaryForm& f)
{
    require_order(f, 5, "quintic invariants");
    const auto c = quintic_covariants(f);
    InvariantVector iv;
    iv.J = constant_of(transvectant(c.c1, c.c1, 2)) * Rational(-1, 2);
    iv.K = constant_of(transvectant(c.c1, c.c3, 2)) * Rational(1, 8);
    iv.L = constant_of(transvectant(c.c3, c.c3, 2)) * Rational(1, 96);
    iv.H = constant_of(transvectant(transvectant(c.c4, c.c3, 1), transvectant(c.c1, c.c4, 1), 1)) *
           Rational(-1, 384);
    iv.Disc = discriminant(f);
    return iv;
}

MPoly syzygy_rhs(const MPoly& J, const MPoly& K, const MPoly& L)
{
    return syzygy_rhs_jkl().evaluate(J, K, L);
}

JKLPolynomial syzygy_rhs_jkl()
{
    JKLPolynomial p;
    p.add({3, 0, 0}, -432);
    p.add({2, 1, 1}, -72);
    p.add({1, 3, 0}, 8);
    p.add({1, 2, 2}, -2);
    p.add({2, 0, 3}, 1);
    p.add({0, 4, 1}, 1);
    return p;
}

bool verify_relation(const InvariantVector& iv) { return iv.H * iv.H * 16 == syzygy_rhs(iv.J, iv.K, iv.L); }

MPoly disc_from_jk(const MPoly& J, const MPoly& K) { return (J * J - K * 128) * 3125; }

SylvesterPoint SylvesterPoint::symbolic()
{
    return {MPoly::variable("u"), MPoly::variable("v"), MPoly::variable("w")};
}

BinaryForm sylvester_specialize(const SylvesterPoint& pt)
{
    return BinaryForm({pt.u - pt.w, pt.w * -5, pt.w * -10, pt.w * -10, pt.w * -5, pt.v - pt.w});
}

CanonicalInvariants canonical_closed_forms(const SylvesterPoint& pt)
{
    const MPoly& u = pt.u;
    const MPoly& v = pt.v;
    const MPoly& w = pt.w;
    const MPoly e2 = u * v + u * w + v * w;
    const MPoly e3 = u * v * w;
    CanonicalInvariants out;
    out.J = e2 * e2 - e3 * (u + v + w) * 4;
    out.K = e3 * e3 * e2;
    out.L = e3.pow(4);
    out.H = e3.pow(5) * (u - v) * (u - w) * (v - w);
    return out;
}

unsigned long nu(unsigned long k)
{
    if (k >= 1 && (k - 1) % 6 == 0) return k / 6;
    return k / 6 + 1;
}

namespace {

void require_degree(unsigned long d)
{
    if (d == 0 || d % 4 != 0) throw DomainError("degree must be a positive multiple of 4, got " + std::to_string(d));
}

} // namespace

unsigned long graded_dimension(unsigned long d)
{
    require_degree(d);
    unsigned long sum = 0;
    for (unsigned long k = 0; k <= d / 4; ++k) sum += nu(k);
    return sum;
}

unsigned long graded_dimension_24(unsigned long l) { return 3 * l * l + 3 * l + 1; }

std::vector<JKLExponent> monomial_basis(unsigned long d)
{
    require_degree(d);
    // 3 l + 2 k + j = d / 4
    const unsigned long n = d / 4;
    std::vector<JKLExponent> out;
    for (unsigned long l = n / 3 + 1; l-- > 0;)
        for (unsigned long k = (n - 3 * l) / 2 + 1; k-- > 0;)
            out.push_back({static_cast<unsigned>(l), static_cast<unsigned>(k), static_cast<unsigned>(n - 3 * l - 2 * k)});
    return out;
}

} // namespace binform
