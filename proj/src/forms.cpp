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

#include "binform/forms.hpp"

#include <sstream>

namespace binform {

BinaryForm::BinaryForm(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw DomainError("a binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_rationals(const std::vector<Rational>& coeffs)
{
    std::vector<MPoly> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::generic(unsigned order, const std::string& prefix)
{
    std::vector<MPoly> c;
    for (unsigned i = 0; i <= order; ++i) c.push_back(MPoly::variable(prefix + std::to_string(i)));
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::from_mpoly(const MPoly& f, unsigned order)
{
    const MPoly g = f.with_variables(std::vector<std::string>{x1_name, x2_name});
    std::vector<MPoly> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        c[i] = coefficient(coefficient(g, x1_name, order - i), x2_name, i);
    }
    BinaryForm out(std::move(c));
    if (!(out.to_mpoly() == g)) throw DomainError("polynomial is not a binary form of order " + std::to_string(order));
    return out;
}

BinaryForm BinaryForm::parse(std::string_view text)
{
    std::vector<Rational> c;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_rationals(c);
}

bool BinaryForm::is_numeric() const
{
    for (const auto& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

bool BinaryForm::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<Rational> BinaryForm::rational_coeffs() const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.constant_value());
    return out;
}

MPoly BinaryForm::to_mpoly() const
{
    const unsigned p = order();
    MPoly out = MPoly::zero_over(std::vector<std::string>{x1_name, x2_name});
    for (unsigned i = 0; i <= p; ++i) {
        if (coeffs_[i].is_zero()) continue;
        out += coeffs_[i] * MPoly::monomial(x1_name, p - i) * MPoly::monomial(x2_name, i);
    }
    return out;
}

std::string BinaryForm::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].to_string();
    }
    return os.str();
}

BinaryForm BinaryForm::operator*(const Rational& c) const
{
    std::vector<MPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return BinaryForm(std::move(out));
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g)
{
    std::vector<MPoly> c(f.order() + g.order() + 1);
    for (unsigned i = 0; i <= f.order(); ++i)
        for (unsigned j = 0; j <= g.order(); ++j) c[i + j] += f[i] * g[j];
    return BinaryForm(std::move(c));
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(Rational g11, Rational g12, Rational g21, Rational g22)
    : g11_(std::move(g11)), g12_(std::move(g12)), g21_(std::move(g21)), g22_(std::move(g22))
{
    det_ = g11_ * g22_ - g12_ * g21_;
    if (is_zero(det_)) throw DomainError("group element must be invertible");
}

GroupElement GroupElement::inverse() const
{
    return {g22_ / det_, -g12_ / det_, -g21_ / det_, g11_ / det_};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    return {a.g11_ * b.g11_ + a.g12_ * b.g21_, a.g11_ * b.g12_ + a.g12_ * b.g22_,
            a.g21_ * b.g11_ + a.g22_ * b.g21_, a.g21_ * b.g12_ + a.g22_ * b.g22_};
}

unsigned weight_of(unsigned d, unsigned p, unsigned r)
{
    const long long twice = static_cast<long long>(d) * p - r;
    if (twice < 0 || twice % 2 != 0)
        throw DomainError("d*p - r must be a nonnegative even number (d=" + std::to_string(d) +
                          ", p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")");
    return static_cast<unsigned>(twice / 2);
}

CovariantMeta CovariantMeta::of(unsigned degree, unsigned source_order, unsigned order)
{
    return {degree, order, weight_of(degree, source_order, order), source_order};
}

// ---------------------------------------------------------------------------

namespace {

// Coefficients of (c1 x1 + c2 x2)^n, indexed by the power of x2.
std::vector<Rational> linear_power(const Rational& c1, const Rational& c2, unsigned n)
{
    std::vector<Rational> out{1};
    for (unsigned s = 0; s < n; ++s) {
        std::vector<Rational> next(out.size() + 1);
        for (std::size_t j = 0; j < out.size(); ++j) {
            next[j] += out[j] * c1;
            next[j + 1] += out[j] * c2;
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

BinaryForm act(const GroupElement& g, const BinaryForm& f)
{
    const GroupElement h = g.inverse();
    const unsigned p = f.order();
    std::vector<MPoly> out(p + 1);
    for (unsigned i = 0; i <= p; ++i) {
        if (f[i].is_zero()) continue;
        // x1^(p-i) x2^i evaluated at h x.
        const auto l1 = linear_power(h.g11(), h.g12(), p - i);
        const auto l2 = linear_power(h.g21(), h.g22(), i);
        for (std::size_t s = 0; s < l1.size(); ++s) {
            if (is_zero(l1[s])) continue;
            for (std::size_t t = 0; t < l2.size(); ++t) {
                const Rational c = l1[s] * l2[t];
                if (!is_zero(c)) out[s + t] += f[i] * c;
            }
        }
    }
    return BinaryForm(std::move(out));
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, unsigned k)
{
    const unsigned p = f.order(), q = g.order();
    if (k > p || k > q)
        throw DomainError("transvectant index " + std::to_string(k) + " exceeds the form orders");

    Rational prefactor(factorial(p - k) * factorial(q - k), factorial(p) * factorial(q));
    prefactor.canonicalize();
    std::vector<MPoly> out(p + q - 2 * k + 1);
    for (unsigned m = 0; m <= p; ++m) {
        if (f[m].is_zero()) continue;
        for (unsigned n = 0; n <= q; ++n) {
            if (m + n < k || g[n].is_zero()) continue;
            Integer w = 0;
            for (unsigned i = 0; i <= k; ++i) {
                const Integer term = binomial(k, i) * falling_factorial(p - m, k - i) * falling_factorial(m, i) *
                                     falling_factorial(q - n, i) * falling_factorial(n, k - i);
                if (i % 2) w -= term;
                else w += term;
            }
            if (w == 0) continue;
            out[m + n - k] += f[m] * g[n] * Rational(prefactor * w);
        }
    }
    return BinaryForm(std::move(out));
}

PolyMatrix sylvester_matrix(const BinaryForm& f, const BinaryForm& g)
{
    const unsigned p = f.order(), q = g.order();
    if (p == 0 || q == 0) throw DomainError("resultant needs forms of order at least 1");
    const std::size_t n = p + q;
    PolyMatrix m(n, n);
    for (unsigned r = 0; r < q; ++r)
        for (unsigned i = 0; i <= p; ++i) m(r, r + i) = f[i];
    for (unsigned r = 0; r < p; ++r)
        for (unsigned i = 0; i <= q; ++i) m(q + r, r + i) = g[i];
    return m;
}

MPoly resultant(const BinaryForm& f, const BinaryForm& g) { return det_fraction_free(sylvester_matrix(f, g)); }

BinaryForm partial_x1(const BinaryForm& f)
{
    const unsigned p = f.order();
    if (p == 0) return BinaryForm({MPoly(0)});
    std::vector<MPoly> c(p);
    for (unsigned i = 0; i < p; ++i) c[i] = f[i] * Rational(p - i);
    return BinaryForm(std::move(c));
}

BinaryForm partial_x2(const BinaryForm& f)
{
    const unsigned p = f.order();
    if (p == 0) return BinaryForm({MPoly(0)});
    std::vector<MPoly> c(p);
    for (unsigned i = 1; i <= p; ++i) c[i - 1] = f[i] * Rational(i);
    return BinaryForm(std::move(c));
}

MPoly discriminant(const BinaryForm& f)
{
    const unsigned p = f.order();
    if (p < 2) throw DomainError("discriminant needs a form of order at least 2");
    Rational scale(1, 1);
    mpz_pow_ui(scale.get_den_mpz_t(), Integer(p).get_mpz_t(), p - 2);
    scale.canonicalize();
    if ((p * (p - 1) / 2) % 2) scale = -scale;
    return resultant(partial_x1(f), partial_x2(f)) * scale;
}

} // namespace binform
