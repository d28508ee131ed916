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

#include "binform/jkl.hpp"

#include <vector>

namespace binform {

std::string JKLExponent::to_string() const
{
    return "(" + std::to_string(l) + "," + std::to_string(k) + "," + std::to_string(j) + ")";
}

JKLPolynomial JKLPolynomial::monomial(JKLExponent e, const Rational& c)
{
    JKLPolynomial p;
    p.add(e, c);
    return p;
}

Rational JKLPolynomial::coefficient(const JKLExponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool JKLPolynomial::is_homogeneous(unsigned d) const
{
    for (const auto& [e, c] : terms_)
        if (e.degree() != d) return false;
    return true;
}

JKLPolynomial& JKLPolynomial::add(const JKLExponent& e, const Rational& c)
{
    if (binform::is_zero(c)) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (binform::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
}

JKLPolynomial operator+(const JKLPolynomial& a, const JKLPolynomial& b)
{
    JKLPolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add(e, c);
    return out;
}

JKLPolynomial operator-(const JKLPolynomial& a, const JKLPolynomial& b) { return a + b * Rational(-1); }

JKLPolynomial operator*(const JKLPolynomial& a, const JKLPolynomial& b)
{
    JKLPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    return out;
}

JKLPolynomial operator*(const JKLPolynomial& a, const Rational& c)
{
    JKLPolynomial out;
    if (is_zero(c)) return out;
    for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, v * c);
    return out;
}

Rational JKLPolynomial::evaluate(const Rational& J, const Rational& K, const Rational& L) const
{
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * pow(L, e.l) * pow(K, e.k) * pow(J, e.j);
    return acc;
}

MPoly JKLPolynomial::evaluate(const MPoly& J, const MPoly& K, const MPoly& L) const
{
    // Power tables; terms share most of their factors.
    std::vector<MPoly> jp{MPoly(1)}, kp{MPoly(1)}, lp{MPoly(1)};
    auto power = [](std::vector<MPoly>& table, const MPoly& base, unsigned e) -> const MPoly& {
        while (table.size() <= e) table.push_back(table.back() * base);
        return table[e];
    };
    MPoly acc = J * Rational(0) + K * Rational(0) + L * Rational(0);
    for (const auto& [e, c] : terms_) acc += power(lp, L, e.l) * power(kp, K, e.k) * power(jp, J, e.j) * c;
    return acc;
}

std::string JKLPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = sgn(c) < 0;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string mono;
        auto put = [&mono](const char* name, unsigned x) {
            if (x == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (x > 1) mono += "^" + std::to_string(x);
        };
        put("L", e.l);
        put("K", e.k);
        put("J", e.j);
        const Rational mag = abs(c);
        if (mono.empty()) out += binform::to_string(mag);
        else out += (mag == 1 ? std::string() : binform::to_string(mag) + "*") + mono;
    }
    return out;
}

} // namespace binform
