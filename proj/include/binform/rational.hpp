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

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace binform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, coefficient lists).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact rational scalar. GMP keeps it canonical: reduced, positive
/// denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (decimal integers, optional surrounding spaces).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exponent);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(unsigned n, unsigned k);

} // namespace binform
