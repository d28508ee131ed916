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

#include "binform/linalg.hpp"
#include "binform/parallel.hpp"
#include "support.hpp"

using namespace binform;
using binform::testing::Rng;

namespace {

MPoly P(std::string_view s) { return MPoly::parse(s); }

const std::vector<std::string> abcd{"a", "b", "c", "d"};

} // namespace

TEST_SUITE("rational") {

TEST_CASE("parse and print")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(" 10/4 ") == Rational(5, 2));
    CHECK(to_string(Rational(-7, 3)) == "-7/3");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
}

TEST_CASE("integer helpers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(6) == 720);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(-2), 3) == -8);
    CHECK_THROWS(pow(Rational(0), -1));
}

}

TEST_SUITE("mpoly") {

TEST_CASE("multiplication examples")
{
    const MPoly s = P("x1 + x2");
    CHECK(s * s == P("x1^2 + 2*x1*x2 + x2^2"));
    CHECK((s * MPoly(0L)).is_zero());
    CHECK(P("lambda + a1") * P("lambda - a1") == P("lambda^2 - a1^2"));
}

TEST_CASE("differentiation examples")
{
    CHECK(diff(P("x1^5"), "x1") == P("5*x1^4"));
    CHECK(diff(P("x1^3").with_variables(std::vector<std::string>{"x2"}), "x2").is_zero());
    CHECK(diff(P("a0*x1^5 + a1*x1^4*x2"), "x1") == P("5*a0*x1^4 + 4*a1*x1^3*x2"));
    CHECK_THROWS_AS(diff(P("x1^3"), "y"), UnknownVariable);
}

TEST_CASE("substitution examples")
{
    CHECK(substitute(P("x1^2"), {{"x1", P("x1 + x2")}}) == P("x1^2 + 2*x1*x2 + x2^2"));
    CHECK(substitute(P("q1"), {{"q1", P("(lambda + a1)/4")}}) == P("1/4*lambda + 1/4*a1"));
    const MPoly f = P("3*a*b^2 - c + 1/2");
    CHECK(substitute(f, {}) == f);
}

TEST_CASE("monic division examples")
{
    const DivRem one = monic_divrem(P("lambda^2 + a1*lambda + a2"), P("lambda + a1"), "lambda");
    CHECK(one.quotient == P("lambda"));
    CHECK(one.remainder == P("a2"));

    const MPoly g = P("lambda^3 - a*lambda + 2");
    const DivRem same = monic_divrem(g, g, "lambda");
    CHECK(same.quotient == MPoly(1L));
    CHECK(same.remainder.is_zero());

    CHECK_THROWS_AS(monic_divrem(P("lambda^2"), P("2*lambda + 1"), "lambda"), DomainError);
}

TEST_CASE("degree-12 reduction by a monic quintic")
{
    const MPoly f = P("lambda^12 + a1*lambda^7 - 3*z*lambda^11 + a2^2*lambda^5 + z");
    const MPoly g = P("lambda^5 + a1*lambda^4 + a2*lambda^3 + a3*lambda^2 + a4*lambda + a5");
    const DivRem qr = monic_divrem(f, g, "lambda");
    CHECK(qr.remainder.degree("lambda") <= 4);
    CHECK(f == qr.quotient * g + qr.remainder);
}

TEST_CASE("coefficient extraction examples")
{
    const MPoly f = P("3*z^5 + a*z^2");
    CHECK(coefficient(f, "z", 5) == MPoly(3L));
    CHECK(coefficient(f, "z", 2) == P("a"));
    CHECK(coefficient(f, "z", 9).is_zero());
}

TEST_CASE("exact division and homogenization")
{
    const MPoly g = P("a - 2*b + 1/3");
    const MPoly h = P("a^2*c - b + 5");
    CHECK(exact_div(g * h, g) == h);
    CHECK_THROWS_AS(exact_div(g * h + MPoly(1L), g), DomainError);
    CHECK(homogenize(P("x^2 + 3*x + 1"), "y", 2) == P("x^2 + 3*x*y + y^2"));
}

TEST_CASE("universe bookkeeping")
{
    const MPoly f = P("a*b");
    CHECK(f.variables() == std::vector<std::string>{"a", "b"});
    CHECK(f.degree("a") == 1);
    CHECK(f.total_degree() == 2);
    CHECK(f.is_homogeneous(2));
    CHECK((f - f).compact().variables().empty());
    CHECK(MPoly(Rational(5, 2)).constant_value() == Rational(5, 2));
    CHECK_THROWS_AS(f.constant_value(), DomainError);
    CHECK_THROWS_AS(P("a^256"), ParseError);
    CHECK_THROWS_AS(P("a^200") * P("a^100"), DomainError);
    CHECK_THROWS_AS(P("a + "), ParseError);
    CHECK_THROWS_AS(P("a+b+c+d+e+f+g+h+i"), DomainError);
}

TEST_CASE("ring laws on random polynomials")
{
    Rng rng;
    for (int i = 0; i < 60; ++i) {
        const MPoly f = testing::random_mpoly(rng, abcd, 6, 12);
        const MPoly g = testing::random_mpoly(rng, abcd, 6, 12);
        const MPoly h = testing::random_mpoly(rng, abcd, 6, 12);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == MPoly(0L));
    }
}

TEST_CASE("division with remainder on random polynomials")
{
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        const MPoly f = testing::random_mpoly(rng, abcd, 6, 12);
        const unsigned n = static_cast<unsigned>(rng.integer(1, 3));
        const MPoly g = MPoly::monomial("a", n) + testing::random_mpoly(rng, {"b", "c"}, 3, 4) * MPoly::monomial("a", n - 1);
        const DivRem qr = monic_divrem(f, g, "a");
        CHECK(f == qr.quotient * g + qr.remainder);
        CHECK((qr.remainder.is_zero() || qr.remainder.degree("a") < g.degree("a")));
    }
}

TEST_CASE("mixed partials commute")
{
    Rng rng(12);
    const std::vector<std::string> xs{"x1", "x2", "a"};
    for (int i = 0; i < 40; ++i) {
        const MPoly f = testing::random_mpoly(rng, xs, 6, 12);
        CHECK(diff(diff(f, "x1"), "x2") == diff(diff(f, "x2"), "x1"));
    }
}

TEST_CASE("print then parse is a fixed point")
{
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        const MPoly f = testing::random_mpoly(rng, abcd, 6, 12);
        const std::string text = f.to_string();
        const MPoly back = MPoly::parse(text);
        CHECK(back == f);
        CHECK(back.to_string() == text);
    }
    CHECK(P("2*b*a - a*b + 1/2 - 1/2").to_string() == "a*b");
}

}

TEST_SUITE("determinants") {

TEST_CASE("small examples")
{
    const PolyMatrix m(2, 2, {P("a"), P("b"), P("c"), P("d")});
    CHECK(det_fraction_free(m) == P("a*d - b*c"));
    PolyMatrix id(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id(i, i) = MPoly(1L);
    CHECK(det_fraction_free(id) == MPoly(1L));
    CHECK_THROWS_AS(det_fraction_free(PolyMatrix(2, 3)), DomainError);
    CHECK(det_fraction_free(PolyMatrix(3, 3)).is_zero());
}

TEST_CASE("Bareiss agrees with cofactor and Leibniz expansions")
{
    Rng rng(21);
    const std::vector<std::string> abc{"a", "b", "c"};
    int cases = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int i = 0; i < 20; ++i, ++cases) {
            std::vector<MPoly> e;
            for (std::size_t k = 0; k < n * n; ++k)
                e.push_back(rng.integer(0, 5) == 0 ? MPoly(0L) : testing::random_mpoly(rng, abc, 1 + (i % 2), 3));
            const PolyMatrix m(n, n, e);
            const MPoly d = det_fraction_free(m);
            CHECK(d == det_cofactor(m));
            CHECK(d == testing::det_leibniz(m));
        }
    }
    CHECK(cases >= 50);
}

TEST_CASE("thread count does not change results")
{
    Rng rng(22);
    const std::vector<std::string> abc{"a", "b", "c"};
    std::vector<MPoly> e;
    for (int k = 0; k < 25; ++k) e.push_back(testing::random_mpoly(rng, abc, 1, 3));
    const PolyMatrix m(5, 5, e);
    set_thread_count(1);
    const MPoly one = det_fraction_free(m);
    set_thread_count(4);
    const MPoly four = det_fraction_free(m);
    set_thread_count(0);
    CHECK(one == four);
    CHECK(one.to_string() == four.to_string());
}

}

TEST_SUITE("linalg") {

TEST_CASE("rank and unique solutions")
{
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}) == 2);
    CHECK(rank({}) == 0);
    const auto x = solve_unique({{2, 1}, {1, 3}, {3, 4}}, {3, 4, 7});
    CHECK(x == std::vector<Rational>{1, 1});
    CHECK_THROWS_AS(solve_unique({{1, 1}, {2, 2}}, {1, 2}), DomainError);
    CHECK_THROWS_AS(solve_unique({{1}, {1}}, {1, 2}), DomainError);
}

TEST_CASE("parallel_for propagates exceptions")
{
    std::vector<int> hit(100);
    parallel_for(hit.size(), [&](std::size_t i) { hit[i] = 1; });
    CHECK(std::accumulate(hit.begin(), hit.end(), 0) == 100);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 7) throw DomainError("boom");
                    }),
                    DomainError);
}

}
