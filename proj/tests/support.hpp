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

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "binform/beauville.hpp"

namespace binform::testing {

inline constexpr std::uint64_t seed = 0x5eed'b1f0'4a11ULL;

class Rng {
public:
    explicit Rng(std::uint64_t s = seed) : gen_(s) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long bound = 9, long max_den = 5)
    {
        Rational r(integer(-bound, bound), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound = 9, long max_den = 5)
    {
        Rational r;
        do r = rational(bound, max_den);
        while (is_zero(r));
        return r;
    }

    bool coin() { return integer(0, 1) == 1; }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline MPoly random_mpoly(Rng& rng, const std::vector<std::string>& names, unsigned max_degree, std::size_t max_terms)
{
    std::vector<std::pair<std::vector<unsigned>, Rational>> terms;
    const std::size_t n = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<unsigned> e(names.size());
        unsigned budget = static_cast<unsigned>(rng.integer(0, max_degree));
        for (auto& x : e) {
            x = static_cast<unsigned>(rng.integer(0, budget));
            budget -= x;
        }
        terms.emplace_back(std::move(e), rng.rational());
    }
    return MPoly::from_terms(names, terms);
}

inline BinaryForm random_form(Rng& rng, unsigned order, long bound = 9)
{
    std::vector<Rational> c(order + 1);
    do {
        for (auto& x : c) x = rng.integer(-bound, bound);
    } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_zero(x); }));
    return BinaryForm::from_rationals(c);
}

/// Stable integer quintic: resampled until the discriminant is nonzero.
inline BinaryForm random_stable_quintic(Rng& rng, long bound = 6)
{
    for (;;) {
        BinaryForm f = random_form(rng, 5, bound);
        if (!discriminant(f).is_zero()) return f;
    }
}

/// Integer matrix of determinant 1 as a product of elementary shears.
inline GroupElement random_sl2(Rng& rng)
{
    GroupElement g = GroupElement::identity();
    const long steps = rng.integer(2, 4);
    for (long i = 0; i < steps; ++i) {
        const long k = rng.integer(-3, 3);
        g = g * (rng.coin() ? GroupElement(1, k, 0, 1) : GroupElement(1, 0, k, 1));
    }
    if (rng.coin()) g = g * GroupElement(0, -1, 1, 0);
    return g;
}

/// Leibniz expansion over all permutations.
inline MPoly det_leibniz(const PolyMatrix& m)
{
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    MPoly total;
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        MPoly term(inversions % 2 ? -1L : 1L);
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// prod_i (x1 - r_i x2)
inline BinaryForm form_from_roots(const std::vector<Rational>& roots)
{
    BinaryForm f = BinaryForm::from_rationals({1});
    for (const auto& r : roots) f = multiply(f, BinaryForm::from_rationals({1, -r}));
    return f;
}

/// B_0..B_5 straight from the definition: the z-coefficients of
/// prod_i ((S_i^3 - 27 T_i^2) z - S_i^3) with Q_i the product of the other
/// four linear factors.
inline std::array<Rational, 6> beauville_from_roots(const std::vector<Rational>& roots)
{
    MPoly product(1L);
    const MPoly z = MPoly::variable(z_name);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        std::vector<Rational> others;
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != i) others.push_back(roots[j]);
        const Quartic q = Quartic::from_form(form_from_roots(others));
        const MPoly s = quartic_S_cartesian(q);
        const MPoly t = quartic_T_cartesian(q);
        const MPoly s3 = s.pow(3);
        product *= (s3 - t * t * 27) * z - s3;
    }
    std::array<Rational, 6> b;
    for (unsigned i = 0; i < 6; ++i) b[i] = coefficient(product, z_name, 5 - i).constant_term();
    return b;
}

inline SylvesterPoint numeric_point(long u, long v, long w) { return {MPoly(u), MPoly(v), MPoly(w)}; }

inline BinaryForm canonical_form(long u, long v, long w) { return sylvester_specialize(numeric_point(u, v, w)); }

inline Rational value(const MPoly& p) { return p.constant_value(); }

} // namespace binform::testing
