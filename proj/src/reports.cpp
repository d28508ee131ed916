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

#include "binform/reports.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace binform {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport finish(json j, bool ok, bool timing, const Stopwatch& sw)
{
    j["ok"] = ok;
    if (timing) j["seconds"] = sw.seconds();
    return {ok, std::move(j)};
}

json coefficient_differences(const JKLPolynomial& computed, const JKLPolynomial& expected)
{
    json out = json::array();
    const JKLPolynomial diff = computed - expected;
    for (const auto& [e, c] : diff.terms()) {
        out.push_back({{"monomial", exponent_json(e)},
                       {"computed", to_string(computed.coefficient(e))},
                       {"expected", to_string(expected.coefficient(e))}});
    }
    return out;
}

} // namespace

json exponent_json(const JKLExponent& e) { return json::array({e.l, e.k, e.j}); }

json to_json(const JKLPolynomial& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"L", e.l}, {"K", e.k}, {"J", e.j}, {"coeff", to_string(c)}});
    return out;
}

json invariants_json(const InvariantVector& iv)
{
    return {{"J", to_string(iv.J.constant_value())},
            {"K", to_string(iv.K.constant_value())},
            {"L", to_string(iv.L.constant_value())},
            {"H", to_string(iv.H.constant_value())},
            {"Disc", to_string(iv.Disc.constant_value())}};
}

json beauville_json(const std::array<Rational, 6>& b)
{
    json out = json::object();
    for (std::size_t i = 0; i < 6; ++i) out["B" + std::to_string(i)] = to_string(b[i]);
    return out;
}

json equivalence_json(const EquivalenceResult& r)
{
    json out{{"equivalent", r.equivalent}};
    if (!r.equivalent) {
        out["reason"] = r.reason;
    } else {
        if (r.scalar) out["s"] = to_string(*r.scalar);
        out["s_power"] = r.root_degree;
        out["s_power_value"] = to_string(r.root_value);
    }
    return out;
}

BinaryForm random_integer_quintic(std::uint64_t& state, int bound)
{
    std::mt19937_64 rng(state);
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> c(6);
    do {
        for (auto& x : c) x = dist(rng);
    } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_zero(x); }));
    state = rng();
    return BinaryForm::from_rationals(c);
}

CheckReport verify_keyprop_report(bool timing)
{
    Stopwatch sw;
    const KeypropReport r = verify_keyprop();
    json items = json::array();
    for (std::size_t i = 0; i < 6; ++i) {
        json item{{"name", "B" + std::to_string(i)},
                  {"match", r.match[i]},
                  {"computed", to_json(r.computed[i])},
                  {"expected", to_json(r.expected[i])}};
        if (!r.match[i]) item["differences"] = coefficient_differences(r.computed[i], r.expected[i]);
        items.push_back(std::move(item));
    }
    json j{{"target", "keyprop"}, {"invariants", std::move(items)}};
    if (timing) j["pipeline_seconds"] = r.pipeline_seconds;
    return finish(std::move(j), r.all_match(), timing, sw);
}

CheckReport verify_relation_report(bool timing)
{
    Stopwatch sw;
    const SylvesterPoint pt = SylvesterPoint::symbolic();
    const InvariantVector iv = quintic_invariants(sylvester_specialize(pt));
    const MPoly difference = iv.H * iv.H * 16 - syzygy_rhs(iv.J, iv.K, iv.L);
    const bool ok = difference.is_zero() && !iv.H.is_zero();
    json j{{"target", "relation"},
           {"identity", "16*H^2 = " + syzygy_rhs_jkl().to_string()},
           {"variables", {"u", "v", "w"}},
           {"lhs_terms", (iv.H * iv.H).size()},
           {"difference_terms", difference.size()}};
    return finish(std::move(j), ok, timing, sw);
}

CheckReport verify_disc_report(bool timing, std::uint64_t seed, int samples)
{
    Stopwatch sw;
    const InvariantVector sym = quintic_invariants(sylvester_specialize(SylvesterPoint::symbolic()));
    const bool symbolic_ok = sym.Disc == disc_from_jk(sym.J, sym.K);

    std::uint64_t state = seed;
    int passed = 0;
    json failures = json::array();
    for (int i = 0; i < samples; ++i) {
        const BinaryForm f = random_integer_quintic(state, 9);
        const InvariantVector iv = quintic_invariants(f);
        if (iv.Disc == disc_from_jk(iv.J, iv.K)) ++passed;
        else failures.push_back(f.to_string());
    }
    json j{{"target", "disc"},
           {"identity", "Disc = 5^5*(J^2 - 128*K)"},
           {"symbolic_canonical_form", symbolic_ok},
           {"seed", seed},
           {"random_samples", samples},
           {"random_passed", passed}};
    if (!failures.empty()) j["random_failures"] = std::move(failures);
    return finish(std::move(j), symbolic_ok && passed == samples, timing, sw);
}

CheckReport verify_prop48_report(bool timing)
{
    Stopwatch sw;
    const Prop48Result r = prop48_rank();
    json basis = json::array();
    for (const auto& e : r.basis) basis.push_back(exponent_json(e));
    json products = json::array();
    for (const auto& [i, j] : r.products) products.push_back(json::array({i, j}));
    json matrix = json::array();
    for (const auto& row : r.matrix) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(to_string(x));
        matrix.push_back(std::move(jr));
    }
    const bool ok = r.rank == r.basis.size() && r.basis.size() == graded_dimension(48);
    json j{{"target", "prop48"},
           {"rows", r.basis.size()},
           {"cols", r.products.size()},
           {"rank", r.rank},
           {"basis", std::move(basis)},
           {"products", std::move(products)},
           {"matrix", std::move(matrix)}};
    return finish(std::move(j), ok, timing, sw);
}

CheckReport verify_dims_report(bool timing)
{
    Stopwatch sw;
    bool ok = true;
    json rows = json::array();
    for (unsigned long l = 1; l <= 5; ++l) {
        const unsigned long d = 24 * l;
        const unsigned long by_nu = graded_dimension(d);
        const unsigned long closed = graded_dimension_24(l);
        const unsigned long enumerated = monomial_basis(d).size();
        ok = ok && by_nu == closed && closed == enumerated;
        rows.push_back({{"l", l}, {"d", d}, {"nu_sum", by_nu}, {"closed_form", closed}, {"basis_size", enumerated}});
    }
    json j{{"target", "dims"}, {"dims", std::move(rows)}};
    return finish(std::move(j), ok, timing, sw);
}

CheckReport verify_by_name(std::string_view target, bool timing)
{
    if (target == "keyprop") return verify_keyprop_report(timing);
    if (target == "relation") return verify_relation_report(timing);
    if (target == "disc") return verify_disc_report(timing);
    if (target == "prop48") return verify_prop48_report(timing);
    if (target == "dims") return verify_dims_report(timing);
    throw ParseError("unknown verification target '" + std::string(target) +
                     "' (expected keyprop, relation, disc, prop48 or dims)");
}

} // namespace binform
