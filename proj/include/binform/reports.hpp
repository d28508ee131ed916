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

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "binform/beauville.hpp"

namespace binform {

/// Outcome of a named verification: pass/fail plus a JSON report. Reports
/// hold only exact data unless timing was requested, so they are
/// byte-stable across runs and thread counts.
struct CheckReport {
    bool ok = false;
    nlohmann::json json;
};

inline constexpr std::uint64_t default_seed = 20260419;

CheckReport verify_keyprop_report(bool timing);
CheckReport verify_relation_report(bool timing);
CheckReport verify_disc_report(bool timing, std::uint64_t seed = default_seed, int samples = 20);
CheckReport verify_prop48_report(bool timing);
CheckReport verify_dims_report(bool timing);

/// Dispatches on "keyprop", "relation", "disc", "prop48" or "dims"; throws
/// ParseError for anything else.
CheckReport verify_by_name(std::string_view target, bool timing);

nlohmann::json to_json(const JKLPolynomial& p);
nlohmann::json invariants_json(const InvariantVector& iv);
nlohmann::json beauville_json(const std::array<Rational, 6>& b);
nlohmann::json equivalence_json(const EquivalenceResult& r);
nlohmann::json exponent_json(const JKLExponent& e);

/// A random integer quintic with coefficients in [-bound, bound].
BinaryForm random_integer_quintic(std::uint64_t& state, int bound);

} // namespace binform
