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

#include "binform/binform.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "binform/beauville.hpp"
#include "binform/parallel.hpp"
#include "binform/reports.hpp"

struct binform_form {
    binform::BinaryForm form;
};

namespace {

using namespace binform;
using nlohmann::json;

thread_local std::string last_error;

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

binform_status emit(const json& j, char** out)
{
    if (!out) throw ParseError("null output pointer");
    *out = dup(j.dump());
    return BINFORM_OK;
}

template <typename F>
binform_status guarded(F&& body)
{
    last_error.clear();
    try {
        return body();
    } catch (const ParseError& e) {
        last_error = e.what();
        return BINFORM_ERR_PARSE;
    } catch (const UnstableForm& e) {
        last_error = e.what();
        return BINFORM_ERR_UNSTABLE;
    } catch (const DomainError& e) {
        last_error = e.what();
        return BINFORM_ERR_DOMAIN;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BINFORM_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return BINFORM_ERR_INTERNAL;
    }
}

const BinaryForm& quintic(const binform_form* f)
{
    if (!f) throw ParseError("null form");
    if (f->form.order() != 5) throw DomainError("expected a quintic (6 coefficients), got order " + std::to_string(f->form.order()));
    if (f->form.is_zero()) throw DomainError("zero form");
    return f->form;
}

constexpr unsigned long max_degree = 1UL << 20;

unsigned long checked_degree(unsigned long d)
{
    if (d > max_degree) throw DomainError("degree " + std::to_string(d) + " is too large");
    return d;
}

unsigned narrow(unsigned long v)
{
    if (v > max_degree) throw DomainError("exponent " + std::to_string(v) + " is too large");
    return static_cast<unsigned>(v);
}

json exponents_json(const std::vector<JKLExponent>& v)
{
    json out = json::array();
    for (const auto& e : v) out.push_back(exponent_json(e));
    return out;
}

} // namespace

extern "C" {

const char* binform_version(void) { return "1.0.0"; }

const char* binform_last_error(void) { return last_error.c_str(); }

void binform_string_free(char* s) { std::free(s); }

void binform_set_threads(unsigned n) { set_thread_count(n); }

binform_status binform_form_parse(const char* coeffs, binform_form** out)
{
    return guarded([&] {
        if (!coeffs || !out) throw ParseError("null argument");
        *out = new binform_form{BinaryForm::parse(coeffs)};
        return BINFORM_OK;
    });
}

void binform_form_free(binform_form* f) { delete f; }

unsigned binform_form_order(const binform_form* f) { return f ? f->form.order() : 0; }

binform_status binform_invariants(const binform_form* f, char** out)
{
    return guarded([&] { return emit(invariants_json(quintic_invariants(quintic(f))), out); });
}

binform_status binform_beauville(const binform_form* f, int use_pipeline, char** out)
{
    return guarded([&] {
        const BinaryForm& q = quintic(f);
        const auto b = use_pipeline ? beauville_by_pipeline(q) : beauville_closed_form(q);
        json j = beauville_json(b);
        j["route"] = use_pipeline ? "pipeline" : "closed_form";
        if (is_zero(b[0])) j["warning"] = "B0 = 0: the quintic has a repeated root";
        return emit(j, out);
    });
}

binform_status binform_equiv(const binform_form* f1, const binform_form* f2, char** out)
{
    return guarded([&] {
        const EquivalenceResult r = gl2_equivalent(quintic(f1), quintic(f2));
        emit(equivalence_json(r), out);
        return r.equivalent ? BINFORM_OK : BINFORM_FALSE;
    });
}

binform_status binform_jdata(const binform_form* f1, const binform_form* f2, char** out)
{
    return guarded([&] {
        const auto b1 = beauville_closed_form(quintic(f1));
        const auto b2 = beauville_closed_form(quintic(f2));
        const bool same = same_j_data(b1, b2);
        emit({{"same_j_data", same}, {"B_first", beauville_json(b1)}, {"B_second", beauville_json(b2)}}, out);
        return same ? BINFORM_OK : BINFORM_FALSE;
    });
}

binform_status binform_verify(const char* target, int timing, char** out)
{
    return guarded([&] {
        if (!target) throw ParseError("null target");
        const CheckReport r = verify_by_name(target, timing != 0);
        emit(r.json, out);
        return r.ok ? BINFORM_OK : BINFORM_FALSE;
    });
}

binform_status binform_verify_disc(unsigned long long seed, unsigned samples, int timing, char** out)
{
    return guarded([&] {
        if (samples > 100000) throw DomainError("too many samples");
        const CheckReport r = verify_disc_report(timing != 0, seed, static_cast<int>(samples));
        emit(r.json, out);
        return r.ok ? BINFORM_OK : BINFORM_FALSE;
    });
}

binform_status binform_dimension(unsigned long d, unsigned long* out)
{
    return guarded([&] {
        if (!out) throw ParseError("null output pointer");
        *out = graded_dimension(checked_degree(d));
        return BINFORM_OK;
    });
}

binform_status binform_basis(unsigned long d, char** out)
{
    return guarded([&] {
        if (d > 4096) throw DomainError("degree " + std::to_string(d) + " is too large for a basis listing");
        return emit(exponents_json(monomial_basis(d)), out);
    });
}

binform_status binform_decompose48(unsigned long a1, unsigned long a2, unsigned long a3, char** out)
{
    return guarded([&] {
        const JKLExponent alpha{narrow(a1), narrow(a2), narrow(a3)};
        checked_degree(alpha.degree());
        return emit(exponents_json(thm48_decompose(alpha)), out);
    });
}

} // extern "C"
