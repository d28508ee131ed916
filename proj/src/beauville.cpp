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

#include "binform/beauville.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "binform/parallel.hpp"

namespace binform {

namespace {

const std::vector<std::string> coefficient_names{"a0", "a1", "a2", "a3", "a4", "a5"};

void require_quintic(const BinaryForm& f)
{
    if (f.order() != 5) throw DomainError("expected a quintic (6 coefficients), got order " + std::to_string(f.order()));
}

Rational prefactor(unsigned five, unsigned two, unsigned three)
{
    return pow(Rational(5), five) / (pow(Rational(2), two) * pow(Rational(3), three));
}

Integer ipow(unsigned base, unsigned e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

constexpr JKLExponent L2{2, 0, 0}, LKJ{1, 1, 1}, LJ3{1, 0, 3};
constexpr JKLExponent K3{0, 3, 0}, K2J2{0, 2, 2}, KJ4{0, 1, 4}, J6{0, 0, 6};

JKLPolynomial closed_form(const Rational& scale, std::initializer_list<std::pair<JKLExponent, Integer>> body)
{
    JKLPolynomial p;
    for (const auto& [e, c] : body) p.add(e, scale * Rational(c));
    return p;
}

std::array<JKLPolynomial, 6> build_keyprop_table()
{
    return {
        closed_form(prefactor(15, 40, 0),
                    {{K3, -ipow(2, 21)}, {K2J2, ipow(2, 14) * 3}, {KJ4, -ipow(2, 7) * 3}, {J6, 1}}),
        closed_form(prefactor(16, 35, 3),
                    {{K3, ipow(2, 16) * 7}, {K2J2, -ipow(2, 10) * 23}, {KJ4, ipow(2, 2) * 71}, {J6, -1}}),
        closed_form(prefactor(16, 30, 6),
                    {{LKJ, ipow(2, 11) * ipow(5, 3)},
                     {LJ3, -ipow(2, 4) * ipow(5, 3)},
                     {K3, -ipow(2, 15) * 3},
                     {K2J2, ipow(2, 7) * 11 * 13},
                     {KJ4, Integer(-3 * 131)},
                     {J6, 2}}),
        closed_form(prefactor(16, 25, 9),
                    {{L2, -ipow(2, 11) * ipow(5, 4)},
                     {LKJ, -ipow(2, 9) * 3 * ipow(5, 3)},
                     {LJ3, Integer(2) * ipow(5, 3) * 11},
                     {K3, ipow(2, 9) * 17},
                     {K2J2, -ipow(2, 2) * 23 * 37},
                     {KJ4, ipow(3, 5)},
                     {J6, -2}}),
        closed_form(prefactor(16, 22, 12),
                    {{LKJ, -ipow(2, 5) * ipow(3, 2) * ipow(5, 3)},
                     {LJ3, -ipow(5, 3) * 29},
                     {K3, -ipow(2, 7) * 11},
                     {K2J2, -ipow(7, 2) * 83},
                     {KJ4, -ipow(2, 2) * 59},
                     {J6, ipow(2, 2)}}),
        closed_form(prefactor(15, 15, 15),
                    {{K3, ipow(3, 3)}, {K2J2, -ipow(3, 3)}, {KJ4, ipow(3, 2)}, {J6, -1}}),
    };
}

BeauvilleVector homogenized(const BeauvilleVector& monic)
{
    BeauvilleVector out;
    for (std::size_t i = 0; i < 6; ++i) out.b[i] = homogenize(monic.b[i], "a0", 24).compact();
    return out;
}

std::array<MPoly, 5> generic_monic_coefficients()
{
    return {MPoly::variable("a1"), MPoly::variable("a2"), MPoly::variable("a3"), MPoly::variable("a4"),
            MPoly::variable("a5")};
}

struct GenericCache {
    std::mutex mutex;
    std::optional<PipelineResult> monic;
    std::optional<BeauvilleVector> cartesian;
};

GenericCache& generic_cache()
{
    static GenericCache cache;
    return cache;
}

const PipelineResult& generic_monic_result()
{
    auto& c = generic_cache();
    std::lock_guard lock(c.mutex);
    if (!c.monic) c.monic = monic_pipeline(generic_monic_coefficients());
    return *c.monic;
}

// An SL2 shear x2 -> x2 - t x1 making the leading coefficient nonzero.
BinaryForm with_nonzero_leading(const BinaryForm& f)
{
    if (!f[0].is_zero()) return f;
    for (long t = 1; t <= static_cast<long>(f.order()) + 1; ++t) {
        BinaryForm g = act(GroupElement(1, 0, t, 1), f);
        if (!g[0].is_zero()) return g;
    }
    throw DomainError("zero form");
}

std::tuple<long, long, long> extended_gcd(long a, long b)
{
    if (b == 0) return {a, 1, 0};
    auto [g, x, y] = extended_gcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

} // namespace

// ---------------------------------------------------------------------------

Quartic quartic_of_root(const std::array<MPoly, 4>& a, const std::string& lambda)
{
    const MPoly l = MPoly::variable(lambda);
    // Horner partial sums h_i = lambda^i + a1 lambda^(i-1) + ... + a_i.
    std::array<MPoly, 5> h;
    h[0] = MPoly(1);
    for (std::size_t i = 1; i <= 4; ++i) h[i] = h[i - 1] * l + a[i - 1];
    return Quartic::from_binomial({h[0], h[1] / 4, h[2] / 6, h[3] / 4, h[4]});
}

MPoly build_phi(const Quartic& q, const std::string& z)
{
    const MPoly S = quartic_S_cartesian(q);
    const MPoly T = quartic_T_cartesian(q);
    const MPoly s3 = S.pow(3);
    return (s3 - T * T * 27) * MPoly::variable(z) - s3;
}

PipelineResult monic_pipeline(const std::array<MPoly, 5>& a)
{
    PipelineResult out;
    auto& tr = out.trace;
    const Quartic q = quartic_of_root({a[0], a[1], a[2], a[3]});
    tr.q = q.q();
    tr.phi = build_phi(q);

    const MPoly l = MPoly::variable(lambda_name);
    tr.f_lambda = l.pow(5);
    for (std::size_t i = 0; i < 5; ++i) tr.f_lambda += a[i] * l.pow(static_cast<unsigned>(4 - i));

    auto [quotient, remainder] = monic_divrem(tr.phi, tr.f_lambda, lambda_name);
    tr.phi_quotient = std::move(quotient);
    tr.phi_bar = std::move(remainder);

    std::vector<MPoly> fc{MPoly(1)};
    for (const auto& c : a) fc.push_back(c);
    std::vector<MPoly> gc;
    for (unsigned i = 5; i-- > 0;) gc.push_back(coefficient(tr.phi_bar, lambda_name, i));
    tr.r_bar = resultant(BinaryForm(std::move(fc)), BinaryForm(std::move(gc)));

    for (unsigned i = 0; i < 6; ++i) out.values.b[i] = coefficient(tr.r_bar, z_name, 5 - i);
    return out;
}

const BeauvilleVector& cartesian_beauville()
{
    const PipelineResult& monic = generic_monic_result();
    auto& c = generic_cache();
    std::lock_guard lock(c.mutex);
    if (!c.cartesian) c.cartesian = homogenized(monic.values);
    return *c.cartesian;
}

PipelineResult beauville_pipeline(const BinaryForm& f)
{
    require_quintic(f);
    if (f.is_numeric()) {
        if (f.is_zero()) throw DomainError("zero form");
        const BinaryForm g = with_nonzero_leading(f);
        const Rational a0 = g[0].constant_value();
        std::array<MPoly, 5> a;
        for (std::size_t i = 0; i < 5; ++i) a[i] = MPoly(g[i + 1].constant_value() / a0);
        PipelineResult out = monic_pipeline(a);
        const Rational scale = pow(a0, 24);
        for (auto& b : out.values.b) b *= scale;
        return out;
    }

    PipelineResult out;
    out.trace = generic_monic_result().trace;
    const BeauvilleVector& generic = cartesian_beauville();
    std::map<std::string, MPoly> bindings;
    bool identity = true;
    for (std::size_t i = 0; i < 6; ++i) {
        bindings.emplace(coefficient_names[i], f[i]);
        identity = identity && f[i] == MPoly::variable(coefficient_names[i]);
    }
    for (std::size_t i = 0; i < 6; ++i) out.values.b[i] = identity ? generic.b[i] : substitute(generic.b[i], bindings);
    return out;
}

const std::array<JKLPolynomial, 6>& keyprop_table()
{
    static const std::array<JKLPolynomial, 6> table = build_keyprop_table();
    return table;
}

std::array<Rational, 6> beauville_closed_form(const BinaryForm& f)
{
    require_quintic(f);
    if (!f.is_numeric()) throw DomainError("closed-form Beauville values need a numeric quintic");
    if (f.is_zero()) throw DomainError("zero form");
    const InvariantVector iv = quintic_invariants(f);
    const Rational J = iv.J.constant_value(), K = iv.K.constant_value(), L = iv.L.constant_value();
    std::array<Rational, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = keyprop_table()[i].evaluate(J, K, L);
    return out;
}

std::array<Rational, 6> beauville_by_pipeline(const BinaryForm& f)
{
    require_quintic(f);
    if (!f.is_numeric()) throw DomainError("numeric pipeline needs a numeric quintic");
    const PipelineResult r = beauville_pipeline(f);
    std::array<Rational, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = r.values.b[i].constant_value();
    return out;
}

// ---------------------------------------------------------------------------

JKLPolynomial decompose_in_jkl(const MPoly& p, unsigned d)
{
    if (d == 0 || d % 4 != 0) throw DomainError("degree must be a positive multiple of 4");
    if (!p.is_homogeneous(d)) throw DomainError("polynomial is not homogeneous of degree " + std::to_string(d));

    const SylvesterPoint pt = SylvesterPoint::symbolic();
    const BinaryForm canonical = sylvester_specialize(pt);
    std::map<std::string, MPoly> bindings;
    for (std::size_t i = 0; i < 6; ++i) bindings.emplace(coefficient_names[i], canonical[i]);

    const MPoly uvw = MPoly::zero_over(std::vector<std::string>{"u", "v", "w"});
    const MPoly target = substitute(p, bindings) + uvw;
    if (target.variables().size() != 3) throw NotInSubring("not in the J,K,L subring: stray variables");

    const CanonicalInvariants cf = canonical_closed_forms(pt);
    const auto basis = monomial_basis(d);
    std::vector<MPoly> columns;
    columns.reserve(basis.size());
    for (const auto& e : basis) columns.push_back(JKLPolynomial::monomial(e).evaluate(cf.J, cf.K, cf.L) + uvw);

    std::map<std::uint64_t, std::size_t> row_of;
    auto row = [&row_of](std::uint64_t m) {
        return row_of.try_emplace(m, row_of.size()).first->second;
    };
    for (const auto& t : target.terms()) row(t.exps);
    for (const auto& c : columns)
        for (const auto& t : c.terms()) row(t.exps);

    RationalMatrix a(row_of.size(), std::vector<Rational>(basis.size()));
    std::vector<Rational> b(row_of.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& t : columns[c].terms()) a[row(t.exps)][c] = t.coeff;
    for (const auto& t : target.terms()) b[row(t.exps)] = t.coeff;

    std::vector<Rational> x;
    try {
        x = solve_unique(std::move(a), std::move(b));
    } catch (const DomainError&) {
        throw NotInSubring("not in the J,K,L subring: nonzero residual on the canonical form");
    }

    JKLPolynomial out;
    MPoly residual = target;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        out.add(basis[c], x[c]);
        residual -= columns[c] * x[c];
    }
    if (!residual.is_zero()) throw NotInSubring("not in the J,K,L subring: nonzero residual on the canonical form");
    return out;
}

bool KeypropReport::all_match() const
{
    for (bool m : match)
        if (!m) return false;
    return true;
}

KeypropReport verify_keyprop(const std::array<JKLPolynomial, 6>& expected)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    KeypropReport report;
    report.expected = expected;

    const PipelineResult monic = monic_pipeline(generic_monic_coefficients());
    report.pipeline_seconds = std::chrono::duration<double>(clock::now() - start).count();
    const BeauvilleVector cart = homogenized(monic.values);

    parallel_for(6, [&](std::size_t i) { report.computed[i] = decompose_in_jkl(cart.b[i], 24); });
    for (std::size_t i = 0; i < 6; ++i) report.match[i] = report.computed[i] == expected[i];
    report.seconds = std::chrono::duration<double>(clock::now() - start).count();

    auto& c = generic_cache();
    std::lock_guard lock(c.mutex);
    if (!c.monic) c.monic = monic;
    if (!c.cartesian) c.cartesian = cart;
    return report;
}

Prop48Result prop48_rank()
{
    Prop48Result out;
    out.basis = monomial_basis(48);
    const auto& table = keyprop_table();
    std::vector<JKLPolynomial> products;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            out.products.emplace_back(i, j);
            products.push_back(table[i] * table[j]);
        }
    out.matrix.assign(out.basis.size(), std::vector<Rational>(products.size()));
    for (std::size_t r = 0; r < out.basis.size(); ++r)
        for (std::size_t c = 0; c < products.size(); ++c) out.matrix[r][c] = products[c].coefficient(out.basis[r]);
    out.rank = rank(out.matrix);
    return out;
}

std::vector<JKLExponent> thm48_decompose(const JKLExponent& alpha)
{
    const unsigned d = alpha.degree();
    if (d == 0 || d % 48 != 0)
        throw DomainError("degree " + std::to_string(d) + " is not a positive multiple of 48");
    if (d == 48) return {alpha};

    const JKLExponent beta{alpha.l / 4, alpha.k / 6, alpha.j / 12};
    const JKLExponent gamma{alpha.l % 4, alpha.k % 6, alpha.j % 12};
    const JKLExponent none{};

    std::vector<JKLExponent> out;
    if (gamma == none) {
        out.insert(out.end(), beta.l, JKLExponent{4, 0, 0});
        out.insert(out.end(), beta.k, JKLExponent{0, 6, 0});
        out.insert(out.end(), beta.j, JKLExponent{0, 0, 12});
    } else if (beta == none) {
        // Only degree 96 remains here: 3 l + 2 k + j = 24 with l <= 3, k <= 5.
        if (d != 96) throw std::logic_error("thm48_decompose: unexpected residual degree");
        out.push_back({gamma.l, 0, 12 - 3 * gamma.l});
        out.push_back({0, gamma.k, 12 - 2 * gamma.k});
    } else {
        out = thm48_decompose(gamma);
        const auto rest = thm48_decompose({4 * beta.l, 6 * beta.k, 12 * beta.j});
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Integer> exact_root(const Integer& x, unsigned long n)
{
    Integer r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> rational_root(const Rational& x, unsigned long n)
{
    if (x < 0 && n % 2 == 0) return std::nullopt;
    const auto num = exact_root(abs(x.get_num()), n);
    const auto den = exact_root(x.get_den(), n);
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return x < 0 ? Rational(-r) : r;
}

} // namespace

EquivalenceResult gl2_equivalent(const InvariantVector& i1, const InvariantVector& i2)
{
    if (is_zero(i1.Disc.constant_value()) || is_zero(i2.Disc.constant_value()))
        throw UnstableForm("unstable form: the discriminant vanishes");

    struct Item {
        const char* name;
        long exponent;  // power of s multiplying the invariant
        Rational a, b;
    };
    const std::array<Item, 4> items{{{"J", 2, i1.J.constant_value(), i2.J.constant_value()},
                                     {"K", 4, i1.K.constant_value(), i2.K.constant_value()},
                                     {"L", 6, i1.L.constant_value(), i2.L.constant_value()},
                                     {"H", 9, i1.H.constant_value(), i2.H.constant_value()}}};

    // s^g = tau is implied by every constraint seen so far (Bezout), and
    // sufficient once each constraint is a power of it.
    long g = 0;
    Rational tau = 1;
    std::vector<std::pair<long, Rational>> seen;
    for (const auto& it : items) {
        if (is_zero(it.a) != is_zero(it.b)) return {false, 0, 0, std::nullopt, std::string(it.name) + " vanishing mismatch"};
        if (is_zero(it.a)) continue;
        const Rational ratio = it.b / it.a;
        auto [g2, x, y] = extended_gcd(g, it.exponent);
        const Rational tau2 = pow(tau, x) * pow(ratio, y);
        seen.emplace_back(it.exponent, ratio);
        for (const auto& [e, r] : seen)
            if (pow(tau2, e / g2) != r) return {false, 0, 0, std::nullopt, std::string(it.name) + "-ratio mismatch"};
        g = g2;
        tau = tau2;
    }
    return {true, static_cast<unsigned>(g), tau, rational_root(tau, static_cast<unsigned long>(g)), ""};
}

EquivalenceResult gl2_equivalent(const BinaryForm& f1, const BinaryForm& f2)
{
    require_quintic(f1);
    require_quintic(f2);
    if (!f1.is_numeric() || !f2.is_numeric()) throw DomainError("equivalence test needs numeric quintics");
    return gl2_equivalent(quintic_invariants(f1), quintic_invariants(f2));
}

bool same_j_data(const std::array<Rational, 6>& b1, const std::array<Rational, 6>& b2)
{
    if (is_zero(b1[0]) || is_zero(b2[0])) throw UnstableForm("repeated roots; j-data undefined");
    for (std::size_t i = 1; i < 6; ++i)
        if (b1[i] * b2[0] != b2[i] * b1[0]) return false;
    return true;
}

bool same_j_data(const BinaryForm& f1, const BinaryForm& f2)
{
    return same_j_data(beauville_closed_form(f1), beauville_closed_form(f2));
}

} // namespace binform
