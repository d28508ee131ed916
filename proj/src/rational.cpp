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

#include "binform/rational.hpp"

#include <cctype>

namespace binform {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    if (!is_integer_literal(num))
        throw ParseError("invalid rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(parse_integer(num));

    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("invalid rational '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str(10);
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (is_zero(base)) throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer falling_factorial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i) out *= n - i;
    return out;
}

} // namespace binform
