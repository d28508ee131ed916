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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binform/binform.h"

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_error = 2;

struct Options {
    bool json = false;
    bool timing = false;
    bool pipeline = false;
    unsigned long long seed = 20260419;
    bool seed_given = false;
    std::string target;
    std::vector<std::string> coeffs;
    std::vector<unsigned long> ints;
};

using FormPtr = std::unique_ptr<binform_form, decltype(&binform_form_free)>;

struct Owned {
    char* s = nullptr;
    ~Owned() { binform_string_free(s); }
};

int fail(binform_status st)
{
    std::cerr << "error: " << binform_last_error() << '\n';
    return st == BINFORM_FALSE ? exit_false : exit_error;
}

int code_of(binform_status st)
{
    if (st == BINFORM_OK) return exit_true;
    if (st == BINFORM_FALSE) return exit_false;
    return fail(st);
}

FormPtr parse_form(const std::string& text, binform_status& st)
{
    binform_form* f = nullptr;
    st = binform_form_parse(text.c_str(), &f);
    return FormPtr(f, &binform_form_free);
}

std::string triple(const nlohmann::json& t)
{
    return "(" + std::to_string(t[0].get<unsigned long>()) + "," + std::to_string(t[1].get<unsigned long>()) + "," +
           std::to_string(t[2].get<unsigned long>()) + ")";
}

void print_triples(const char* json)
{
    const auto arr = nlohmann::json::parse(json);
    for (std::size_t i = 0; i < arr.size(); ++i) std::cout << (i ? " " : "") << triple(arr[i]);
    std::cout << '\n';
}

int run_one_form(const Options& o, binform_status (*op)(const binform_form*, char**))
{
    binform_status st;
    FormPtr f = parse_form(o.coeffs[0], st);
    if (st != BINFORM_OK) return fail(st);
    Owned out;
    st = op(f.get(), &out.s);
    if (out.s) std::cout << out.s << '\n';
    return code_of(st);
}

int run_two_forms(const Options& o, binform_status (*op)(const binform_form*, const binform_form*, char**))
{
    binform_status st;
    FormPtr f1 = parse_form(o.coeffs[0], st);
    if (st != BINFORM_OK) return fail(st);
    FormPtr f2 = parse_form(o.coeffs[1], st);
    if (st != BINFORM_OK) return fail(st);
    Owned out;
    st = op(f1.get(), f2.get(), &out.s);
    if (out.s) std::cout << out.s << '\n';
    return code_of(st);
}

int cmd_beauville(const Options& o)
{
    binform_status st;
    FormPtr f = parse_form(o.coeffs[0], st);
    if (st != BINFORM_OK) return fail(st);
    Owned out;
    st = binform_beauville(f.get(), o.pipeline ? 1 : 0, &out.s);
    if (st != BINFORM_OK) return fail(st);
    std::cout << out.s << '\n';
    if (nlohmann::json::parse(out.s).contains("warning")) std::cerr << "warning: B0 = 0, the quintic has a repeated root\n";
    return exit_true;
}

int cmd_verify(const Options& o)
{
    Owned out;
    const binform_status st = (o.target == "disc" && o.seed_given)
                                  ? binform_verify_disc(o.seed, 20, o.timing, &out.s)
                                  : binform_verify(o.target.c_str(), o.timing, &out.s);
    if (out.s) std::cout << out.s << '\n';
    return code_of(st);
}

int cmd_dim(const Options& o)
{
    unsigned long d = 0;
    const binform_status st = binform_dimension(o.ints[0], &d);
    if (st != BINFORM_OK) return fail(st);
    if (o.json) std::cout << nlohmann::json{{"degree", o.ints[0]}, {"dimension", d}}.dump() << '\n';
    else std::cout << d << '\n';
    return exit_true;
}

int cmd_basis(const Options& o)
{
    Owned out;
    const binform_status st = binform_basis(o.ints[0], &out.s);
    if (st != BINFORM_OK) return fail(st);
    if (o.json) std::cout << out.s << '\n';
    else print_triples(out.s);
    return exit_true;
}

int cmd_decompose48(const Options& o)
{
    Owned out;
    const binform_status st = binform_decompose48(o.ints[0], o.ints[1], o.ints[2], &out.s);
    if (st != BINFORM_OK) return fail(st);
    if (o.json) std::cout << out.s << '\n';
    else print_triples(out.s);
    return exit_true;
}

// A leading space keeps coefficient lists such as "-1,0,0,0,0,1" from being
// read as short options; the form parser ignores it.
std::vector<std::string> protect_negative_lists(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.size() > 1 && a[0] == '-' && a.find(',') != std::string::npos) a.insert(0, " ");
        args.push_back(std::move(a));
    }
    return args;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact invariants of binary quartics and quintics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", binform_version());
    app.add_flag("--json", o.json, "Machine-readable output")->configurable(false);
    app.add_option("--seed", o.seed, "Seed for randomized checks")->each([&](const std::string&) { o.seed_given = true; });
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (overrides BINFORM_THREADS)");

    auto* inv = app.add_subcommand("invariants", "J, K, L, H and Disc of a quintic a0,...,a5");
    inv->add_option("coeffs", o.coeffs, "Coefficients a0,...,a5")->required()->expected(1);

    auto* beau = app.add_subcommand("beauville", "The six degree-24 invariants B0..B5");
    beau->add_flag("--pipeline", o.pipeline, "Use the resultant pipeline instead of the closed forms");
    beau->add_option("coeffs", o.coeffs, "Coefficients a0,...,a5")->required()->expected(1);

    auto* ver = app.add_subcommand("verify", "Run a built-in verification");
    ver->add_option("target", o.target, "keyprop, relation, disc, prop48 or dims")
        ->required()
        ->check(CLI::IsMember({"keyprop", "relation", "disc", "prop48", "dims"}));
    ver->add_flag("--timing", o.timing, "Include wall-clock seconds");

    auto* dim = app.add_subcommand("dim", "Dimension of the degree-d invariants");
    dim->add_option("d", o.ints, "Degree")->required()->expected(1);

    auto* basis = app.add_subcommand("basis", "Monomials L^l K^k J^j of degree d");
    basis->add_option("d", o.ints, "Degree")->required()->expected(1);

    auto* dec = app.add_subcommand("decompose48", "Split L^a1 K^a2 J^a3 into degree-48 monomials");
    dec->add_option("exponents", o.ints, "a1 a2 a3")->required()->expected(3);

    auto* eq = app.add_subcommand("equiv", "Decide GL2-equivalence of two stable quintics");
    eq->add_option("coeffs", o.coeffs, "Two coefficient lists")->required()->expected(2);

    auto* jd = app.add_subcommand("jdata", "Compare the Beauville vectors of two quintics");
    jd->add_option("coeffs", o.coeffs, "Two coefficient lists")->required()->expected(2);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> args = protect_negative_lists(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_true : exit_error;
    }
    if (threads) binform_set_threads(threads);

    try {
        if (inv->parsed()) return run_one_form(o, binform_invariants);
        if (beau->parsed()) return cmd_beauville(o);
        if (ver->parsed()) return cmd_verify(o);
        if (dim->parsed()) return cmd_dim(o);
        if (basis->parsed()) return cmd_basis(o);
        if (dec->parsed()) return cmd_decompose48(o);
        if (eq->parsed()) return run_two_forms(o, binform_equiv);
        if (jd->parsed()) return run_two_forms(o, binform_jdata);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_error;
}
