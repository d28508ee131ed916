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

#include <doctest.h>

#include "support.hpp"

using namespace binform;
using binform::testing::Rng;

namespace {

BinaryForm F(std::initializer_list<long> c)
{
    std::vector<Rational> v(c.begin(), c.end());
    return BinaryForm::from_rationals(v);
}

/// F(g^-1 x) computed by plain substitution into the x1, x2 polynomial.
BinaryForm act_by_substitution(const GroupElement& g, const BinaryForm& f)
{
    const GroupElement h = g.inverse();
    const MPoly x1 = MPoly::variable(x1_name), x2 = MPoly::variable(x2_name);
    const MPoly image = substitute(f.to_mpoly(), {{x1_name, x1 * h.g11() + x2 * h.g12()}, {x2_name, x1 * h.g21() + x2 * h.g22()}});
    return BinaryForm::from_mpoly(image, f.order());
}

/// prod over root pairs of (xi eta)^2 for F = prod (eta_i x1 - xi_i x2).
Rational bracket_discriminant(const std::vector<std::pair<Rational, Rational>>& roots)
{
    Rational d = 1;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Rational b = roots[i].first * roots[j].second - roots[i].second * roots[j].first;
            d *= b * b;
        }
    return d;
}

BinaryForm form_from_points(const std::vector<std::pair<Rational, Rational>>& roots)
{
    BinaryForm f = BinaryForm::from_rationals({1});
    for (const auto& [xi, eta] : roots) f = multiply(f, BinaryForm::from_rationals({eta, -xi}));
    return f;
}

} // namespace

TEST_SUITE("forms") {

TEST_CASE("coefficient vectors round-trip through x1, x2 polynomials")
{
    Rng rng(31);
    for (unsigned p = 0; p <= 6; ++p) {
        const BinaryForm f = testing::random_form(rng, p);
        CHECK(f.coeffs().size() == p + 1);
        CHECK(BinaryForm::from_mpoly(f.to_mpoly(), p) == f);
    }
    const BinaryForm g = BinaryForm::generic(5);
    CHECK(BinaryForm::from_mpoly(g.to_mpoly(), 5) == g);
    CHECK(BinaryForm::parse("1, -2/3,0") == BinaryForm::from_rationals({1, Rational(-2, 3), 0}));
    CHECK_THROWS_AS(BinaryForm::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(BinaryForm::parse(""), ParseError);
    CHECK_THROWS_AS(BinaryForm::from_mpoly(MPoly::parse("x1^2 + x2"), 2), DomainError);
}

TEST_CASE("group elements")
{
    CHECK_THROWS_AS(GroupElement(1, 2, 2, 4), DomainError);
    const GroupElement g(2, 1, 1, 1);
    CHECK(g.determinant() == 1);
    const GroupElement e = g * g.inverse();
    CHECK((e.g11() == 1 && e.g12() == 0 && e.g21() == 0 && e.g22() == 1));
}

TEST_CASE("act examples")
{
    Rng rng(32);
    const BinaryForm f = testing::random_form(rng, 5);
    CHECK(act(GroupElement::identity(), f) == f);

    const Rational t = rng.nonzero_rational();
    CHECK(act(GroupElement(t, 0, 0, 1 / t), F({0, 1, 0})) == F({0, 1, 0}));

    const GroupElement shear(1, 1, 0, 1);
    CHECK(act(shear, F({0, 0, 1})) == F({0, 0, 1}));
    CHECK(act(shear, F({1, 0, 0})) == F({1, -2, 1}));
}

TEST_CASE("act matches substitution and composes")
{
    Rng rng(33);
    for (int i = 0; i < 25; ++i) {
        const BinaryForm f = testing::random_form(rng, static_cast<unsigned>(rng.integer(1, 5)));
        const GroupElement g(rng.rational(), rng.rational(), rng.rational(), rng.nonzero_rational());
        const GroupElement h = testing::random_sl2(rng);
        if (g.determinant() == 0) continue;
        CHECK(act(g, f) == act_by_substitution(g, f));
        CHECK(act(g * h, f) == act(g, act(h, f)));
    }
}

TEST_CASE("transvectant examples")
{
    Rng rng(34);
    const BinaryForm f = testing::random_form(rng, 3);
    const BinaryForm g = testing::random_form(rng, 4);
    CHECK(transvectant(f, g, 0) == multiply(f, g));
    CHECK(transvectant(F({1, 0, 1}), F({1, 0, 1}), 2) == F({2}));
    CHECK_THROWS_AS(transvectant(f, g, 4), DomainError);
}

TEST_CASE("transvectant symmetry and order bookkeeping")
{
    Rng rng(35);
    for (int i = 0; i < 40; ++i) {
        const unsigned p = static_cast<unsigned>(rng.integer(0, 6));
        const unsigned q = static_cast<unsigned>(rng.integer(0, 6));
        const unsigned k = static_cast<unsigned>(rng.integer(0, std::min(p, q)));
        const BinaryForm f = testing::random_form(rng, p);
        const BinaryForm g = testing::random_form(rng, q);
        const BinaryForm fg = transvectant(f, g, k);
        CHECK(fg.order() == p + q - 2 * k);
        CHECK(fg == transvectant(g, f, k) * Rational(k % 2 ? -1 : 1));
    }
}

TEST_CASE("transvectants of covariants scale with the determinant")
{
    Rng rng(36);
    for (int i = 0; i < 10; ++i) {
        const BinaryForm f = testing::random_form(rng, 5);
        const Rational t = rng.nonzero_rational();
        const GroupElement g(t, 0, 0, 1 / t);
        const QuinticCovariants c = quintic_covariants(f);
        const QuinticCovariants cg = quintic_covariants(act(g, f));
        CHECK(cg.c1 == act(g, c.c1));
        CHECK(cg.c2 == act(g, c.c2));
        CHECK(cg.c3 == act(g, c.c3));
        CHECK(cg.c4 == act(g, c.c4));

        // A general g multiplies a weight-w covariant by det(g)^-w.
        const GroupElement s(2, 1, 3, 5);
        const CovariantMeta m1 = CovariantMeta::of(2, 5, 2);
        CHECK(quintic_covariants(act(s, f)).c1 == act(s, c.c1) * pow(s.determinant(), -static_cast<long>(m1.weight)));
    }
}

TEST_CASE("weights")
{
    CHECK(weight_of(24, 5, 0) == 60);
    CHECK(weight_of(2, 4, 0) == 4);
    CHECK(weight_of(1, 7, 7) == 0);
    CHECK_THROWS_AS(weight_of(1, 5, 0), DomainError);
    CHECK_THROWS_AS(weight_of(1, 5, 9), DomainError);
    const CovariantMeta m = CovariantMeta::of(2, 5, 2);
    CHECK(m.weight == 4);
}

TEST_CASE("resultant examples")
{
    CHECK(resultant(F({1, -1}), F({1, 1})) == MPoly(2L));
    Rng rng(37);
    for (unsigned p = 1; p <= 5; ++p) {
        const BinaryForm f = testing::random_form(rng, p);
        CHECK(resultant(f, f).is_zero());
    }
    const PolyMatrix m = sylvester_matrix(BinaryForm::generic(5), BinaryForm::generic(4, "b"));
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 9);
}

TEST_CASE("resultant is multiplicative")
{
    Rng rng(38);
    for (int i = 0; i < 20; ++i) {
        const BinaryForm f = testing::random_form(rng, static_cast<unsigned>(rng.integer(1, 4)), 5);
        const BinaryForm g = testing::random_form(rng, static_cast<unsigned>(rng.integer(1, 3)), 5);
        const BinaryForm h = testing::random_form(rng, static_cast<unsigned>(rng.integer(1, 3)), 5);
        CHECK(resultant(f, multiply(g, h)) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("discriminant examples")
{
    CHECK(discriminant(F({0, 1, 0, -1, 0})) == MPoly(4L));
    CHECK(discriminant(F({0, 1, 0, 0})).is_zero());
    CHECK_THROWS_AS(discriminant(F({1, 1})), DomainError);
}

TEST_CASE("discriminant equals the bracket product")
{
    Rng rng(39);
    for (int i = 0; i < 15; ++i) {
        const unsigned p = static_cast<unsigned>(rng.integer(2, 6));
        std::vector<std::pair<Rational, Rational>> roots;
        for (unsigned r = 0; r < p; ++r) roots.emplace_back(rng.integer(-4, 4), rng.integer(0, 3));
        for (auto& [xi, eta] : roots)
            if (xi == 0 && eta == 0) eta = 1;
        CHECK(testing::value(discriminant(form_from_points(roots))) == bracket_discriminant(roots));
    }
}

}
