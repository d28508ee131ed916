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

// Acceptance checks: one PASS/FAIL line per criterion, each under a
// wall-clock bound. Exit status is 0 only when every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "binform/reports.hpp"
#include "support.hpp"

using namespace binform;
using binform::testing::Rng;
using binform::testing::value;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double bound_seconds;
    std::function<Outcome()> run;
};

Outcome keyprop()
{
    const KeypropReport r = verify_keyprop();
    std::string detail = "B0..B5:";
    for (bool m : r.match) detail += m ? " match" : " MISMATCH";
    char buf[64];
    std::snprintf(buf, sizeof buf, "; pipeline %.1f s", r.pipeline_seconds);
    return {r.all_match(), detail + buf};
}

Outcome relation()
{
    const CheckReport r = verify_relation_report(false);
    return {r.ok, "16H^2 - rhs has " + r.json["difference_terms"].dump() + " terms over u, v, w"};
}

Outcome disc()
{
    const CheckReport r = verify_disc_report(false, default_seed, 20);
    return {r.ok, "symbolic " + r.json["symbolic_canonical_form"].dump() + ", random " + r.json["random_passed"].dump() + "/20"};
}

Outcome prop48()
{
    const Prop48Result r = prop48_rank();
    const bool ok = r.rank == 19 && r.basis.size() == 19 && r.products.size() == 21;
    return {ok, std::to_string(r.basis.size()) + "x" + std::to_string(r.products.size()) + " matrix, rank " + std::to_string(r.rank)};
}

Outcome dims()
{
    const unsigned long expected[] = {7, 19, 37};
    bool ok = true;
    std::string detail;
    for (unsigned long l = 1; l <= 3; ++l) {
        const unsigned long a = graded_dimension(24 * l);
        const unsigned long b = graded_dimension_24(l);
        const unsigned long c = monomial_basis(24 * l).size();
        ok = ok && a == expected[l - 1] && b == a && c == a;
        detail += (l > 1 ? ", " : "") + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
    }
    return {ok, "nu-sum/closed/basis: " + detail};
}

Outcome term_counts()
{
    const InvariantVector iv = quintic_invariants(BinaryForm::generic(5));
    const bool ok = iv.J.size() == 12 && iv.K.size() == 68 && iv.L.size() == 228 && iv.H.size() == 848;
    return {ok, "J, K, L, H: " + std::to_string(iv.J.size()) + ", " + std::to_string(iv.K.size()) + ", " +
                    std::to_string(iv.L.size()) + ", " + std::to_string(iv.H.size())};
}

Outcome properties()
{
    Rng rng(testing::seed);
    int invariance = 0, invariance_fail = 0;
    for (int i = 0; i < 24; ++i) {
        const GroupElement g = testing::random_sl2(rng);
        if (g.determinant() != 1) ++invariance_fail;
        const Quartic q = Quartic::from_form(testing::random_form(rng, 4));
        const Quartic qg = Quartic::from_form(act(g, q.form()));
        const BinaryForm f = testing::random_form(rng, 5);
        const BinaryForm fg = act(g, f);
        const InvariantVector a = quintic_invariants(f), b = quintic_invariants(fg);
        const bool same = quartic_S(q) == quartic_S(qg) && quartic_T(q) == quartic_T(qg) && a.J == b.J &&
                          a.K == b.K && a.L == b.L && a.H == b.H && beauville_closed_form(f) == beauville_closed_form(fg) &&
                          (i >= 3 || beauville_by_pipeline(f) == beauville_by_pipeline(fg));
        (same ? invariance : invariance_fail) += 1;
    }

    const bool b0 = cartesian_beauville().b[0] == discriminant(BinaryForm::generic(5)).pow(3) / pow(Rational(2), 40);

    int thm48 = 0, thm48_fail = 0;
    for (int i = 0; i < 220; ++i) {
        const unsigned n = static_cast<unsigned>(rng.integer(1, 10));
        const unsigned l = static_cast<unsigned>(rng.integer(0, 4 * n));
        const unsigned k = static_cast<unsigned>(rng.integer(0, (12 * n - 3 * l) / 2));
        const JKLExponent alpha{l, k, 12 * n - 3 * l - 2 * k};
        JKLExponent product{};
        bool ok = true;
        for (const auto& f : thm48_decompose(alpha)) {
            ok = ok && f.degree() == 48;
            product = product + f;
        }
        ((ok && product == alpha) ? thm48 : thm48_fail) += 1;
    }

    int pairs = 0, pairs_fail = 0, equivalent = 0;
    for (int i = 0; i < 30; ++i) {
        const BinaryForm f = testing::random_stable_quintic(rng);
        BinaryForm g = testing::random_stable_quintic(rng);
        if (i % 2 == 0) g = act(testing::random_sl2(rng), f * rng.nonzero_rational());
        if (i % 6 == 1) g = act(GroupElement(rng.nonzero_rational(), rng.rational(), 0, rng.nonzero_rational()), f);
        const bool eq = gl2_equivalent(f, g).equivalent;
        equivalent += eq ? 1 : 0;
        ((same_j_data(f, g) == eq) ? pairs : pairs_fail) += 1;
    }

    const bool ok = invariance_fail == 0 && invariance >= 20 && b0 && thm48_fail == 0 && thm48 >= 200 &&
                    pairs_fail == 0 && pairs >= 25;
    return {ok, "SL2 invariance " + std::to_string(invariance) + "/" + std::to_string(invariance + invariance_fail) +
                    ", B0 identity " + (b0 ? "holds" : "FAILS") + ", thm48 " + std::to_string(thm48) + "/" +
                    std::to_string(thm48 + thm48_fail) + ", j-data vs GL2 " + std::to_string(pairs) + "/" +
                    std::to_string(pairs + pairs_fail) + " (" + std::to_string(equivalent) + " equivalent)"};
}

Outcome sylvester()
{
    const SylvesterPoint pt = SylvesterPoint::symbolic();
    const InvariantVector iv = quintic_invariants(sylvester_specialize(pt));
    const CanonicalInvariants cf = canonical_closed_forms(pt);
    const bool ok = iv.J == cf.J && iv.K == cf.K && iv.L == cf.L && iv.H == cf.H;
    return {ok, "J, K, L, H on u x1^5 + v x2^5 - w (x1 + x2)^5"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "keyprop", 900, keyprop},
        {2, "relation", 10, relation},
        {3, "disc", 60, disc},
        {4, "prop48", 10, prop48},
        {5, "dims", 1, dims},
        {6, "term-counts", 30, term_counts},
        {7, "properties", 300, properties},
        {8, "sylvester", 30, sylvester},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = s <= c.bound_seconds;
        const bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %d %-12s %8.3f s (bound %g s)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.bound_seconds,
                    in_time ? "" : " TIMEOUT", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
