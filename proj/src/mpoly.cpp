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

#include "binform/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <queue>
#include <unordered_map>

namespace binform {

namespace {

using Term = MPoly::Term;
using Universe = MPoly::Universe;

constexpr std::uint64_t low7 = 0x7f7f7f7f7f7f7f7fULL;
constexpr std::uint64_t high1 = 0x8080808080808080ULL;

constexpr unsigned shift_of(std::size_t index) { return static_cast<unsigned>(7 - index) * 8; }

unsigned byte_at(std::uint64_t exps, std::size_t index) { return (exps >> shift_of(index)) & 0xffU; }

unsigned degree_of(std::uint64_t x)
{
    std::uint64_t s = (x & 0x00ff00ff00ff00ffULL) + ((x >> 8) & 0x00ff00ff00ff00ffULL);
    s = (s & 0x0000ffff0000ffffULL) + ((s >> 16) & 0x0000ffff0000ffffULL);
    return static_cast<unsigned>((s & 0xffffffffULL) + (s >> 32));
}

// Per-byte addition; throws if any exponent leaves [0, 255].
std::uint64_t add_exps(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t t = (a & low7) + (b & low7);
    const std::uint64_t a7 = a & high1;
    const std::uint64_t b7 = b & high1;
    const std::uint64_t c7 = t & high1;
    if ((a7 & b7) | (a7 & c7) | (b7 & c7)) throw DomainError("exponent overflow (max 255 per variable)");
    return t ^ (a7 ^ b7);
}

bool divides(std::uint64_t d, std::uint64_t m)
{
    for (std::size_t i = 0; i < 8; ++i)
        if (byte_at(d, i) > byte_at(m, i)) return false;
    return true;
}

// Descending graded lexicographic order.
bool grlex_greater(std::uint64_t a, std::uint64_t b)
{
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

struct TermGreater {
    bool operator()(const Term& x, const Term& y) const { return grlex_greater(x.exps, y.exps); }
};

struct MonoHash {
    std::size_t operator()(std::uint64_t x) const noexcept
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

const Universe& empty_universe()
{
    static const Universe u = std::make_shared<const std::vector<std::string>>();
    return u;
}

bool valid_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Universe make_universe(std::vector<std::string> names)
{
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > MPoly::max_variables)
        throw DomainError("too many variables (" + std::to_string(names.size()) + " > 8)");
    for (const auto& n : names)
        if (!valid_identifier(n)) throw ParseError("invalid variable name '" + n + "'");
    if (names.empty()) return empty_universe();
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_universe(const Universe& a, const Universe& b) { return a == b || *a == *b; }

Universe union_of(const Universe& a, const Universe& b)
{
    if (same_universe(a, b)) return a;
    if (b->empty()) return a;
    if (a->empty()) return b;
    std::vector<std::string> names;
    std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(names));
    if (names.size() == a->size()) return a;
    if (names.size() == b->size()) return b;
    return make_universe(std::move(names));
}

// Index of each variable of `from` inside `to` (which must contain them all).
std::vector<std::size_t> index_map(const std::vector<std::string>& from, const std::vector<std::string>& to)
{
    std::vector<std::size_t> out(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        out[i] = static_cast<std::size_t>(it - to.begin());
    }
    return out;
}

std::uint64_t remap_exps(std::uint64_t e, const std::vector<std::size_t>& map)
{
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) out |= std::uint64_t{byte_at(e, i)} << shift_of(map[i]);
    return out;
}

} // namespace

class MPolyAccess {
public:
    static MPoly make(Universe u, std::vector<Term> t) { return MPoly(std::move(u), std::move(t)); }
    static std::vector<Term>& terms(MPoly& p) { return p.terms_; }

    // p over the wider universe u; order is preserved since the inserted
    // variables have exponent zero everywhere.
    static MPoly over(const MPoly& p, const Universe& u)
    {
        if (same_universe(p.vars_, u)) return p;
        const auto map = index_map(*p.vars_, *u);
        std::vector<Term> out;
        out.reserve(p.terms_.size());
        for (const auto& t : p.terms_) out.push_back({remap_exps(t.exps, map), t.coeff});
        return MPoly(u, std::move(out));
    }
};

namespace {

// Holds either a reference to p or a remapped copy.
class Aligned {
public:
    Aligned(const MPoly& p, const Universe& u)
    {
        if (!same_universe(p.universe(), u)) copy_ = MPolyAccess::over(p, u);
        ref_ = copy_ ? &*copy_ : &p;
    }
    const MPoly& operator*() const { return *ref_; }
    const MPoly* operator->() const { return ref_; }

private:
    std::optional<MPoly> copy_;
    const MPoly* ref_;
};

Integer lcm_of_denominators(std::span<const Term> terms)
{
    Integer l = 1;
    for (const auto& t : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

std::vector<Integer> scaled_numerators(std::span<const Term> terms, const Integer& den)
{
    std::vector<Integer> out(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), terms[i].coeff.get_den_mpz_t());
        out[i] *= terms[i].coeff.get_num();
    }
    return out;
}

std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
            out.push_back({b[j].exps, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (!is_zero(c)) out.push_back({a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b)
{
    if (a.empty() || b.empty()) return {};
    if (a.size() < b.size()) std::swap(a, b);
    if (b.size() == 1) {
        // Adding a fixed monomial preserves the order.
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a) out.push_back({add_exps(t.exps, b[0].exps), t.coeff * b[0].coeff});
        return out;
    }

    // Accumulate over the integers after clearing denominators.
    const Integer da = lcm_of_denominators(a), db = lcm_of_denominators(b);
    const auto na = scaled_numerators(a, da), nb = scaled_numerators(b, db);

    std::unordered_map<std::uint64_t, std::uint32_t, MonoHash> index;
    index.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    std::vector<std::uint64_t> keys;
    std::vector<Integer> acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint64_t key = add_exps(a[i].exps, b[j].exps);
            auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
            if (inserted) {
                keys.push_back(key);
                acc.emplace_back();
            }
            mpz_addmul(acc[it->second].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
        }
    }

    const Integer den = da * db;
    std::vector<Term> out;
    out.reserve(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (acc[k] == 0) continue;
        Rational c(acc[k], den);
        c.canonicalize();
        out.push_back({keys[k], std::move(c)});
    }
    std::sort(out.begin(), out.end(), TermGreater{});
    return out;
}

} // namespace

MPoly::MPoly() : vars_(empty_universe()) {}

MPoly::MPoly(const Rational& c) : vars_(empty_universe())
{
    if (!binform::is_zero(c)) terms_.push_back({0, c});
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly::MPoly(Universe vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

MPoly MPoly::variable(const std::string& name) { return monomial(name, 1); }

MPoly MPoly::monomial(const std::string& name, unsigned exponent, const Rational& c)
{
    if (exponent > max_exponent) throw DomainError("exponent overflow (max 255 per variable)");
    auto u = make_universe({name});
    std::vector<Term> t;
    if (!binform::is_zero(c)) t.push_back({std::uint64_t{exponent} << shift_of(0), c});
    return MPoly(std::move(u), std::move(t));
}

MPoly MPoly::zero_over(std::span<const std::string> names)
{
    return MPoly(make_universe({names.begin(), names.end()}), {});
}

MPoly MPoly::from_terms(std::span<const std::string> names,
                        const std::vector<std::pair<std::vector<unsigned>, Rational>>& terms)
{
    auto u = make_universe({names.begin(), names.end()});
    const auto map = index_map({names.begin(), names.end()}, *u);
    std::map<std::uint64_t, Rational> acc;
    for (const auto& [e, c] : terms) {
        if (e.size() != names.size()) throw DomainError("exponent vector length mismatch");
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > max_exponent) throw DomainError("exponent overflow (max 255 per variable)");
            bits = add_exps(bits, std::uint64_t{e[i]} << shift_of(map[i]));
        }
        acc[bits] += c;
    }
    std::vector<Term> out;
    for (auto& [k, c] : acc)
        if (!binform::is_zero(c)) out.push_back({k, c});
    std::sort(out.begin(), out.end(), TermGreater{});
    return MPoly(std::move(u), std::move(out));
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == 0); }

Rational MPoly::constant_value() const
{
    if (!is_constant()) throw DomainError("polynomial '" + to_string() + "' is not a constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational MPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().exps == 0) return terms_.back().coeff;
    return 0;
}

bool MPoly::has_variable(std::string_view name) const
{
    return std::binary_search(vars_->begin(), vars_->end(), name);
}

std::size_t MPoly::variable_index(std::string_view name) const
{
    auto it = std::lower_bound(vars_->begin(), vars_->end(), name);
    if (it == vars_->end() || *it != name)
        throw UnknownVariable("variable '" + std::string(name) + "' is not in the polynomial's universe");
    return static_cast<std::size_t>(it - vars_->begin());
}

unsigned MPoly::exponent(const Term& t, std::size_t var_index) const { return byte_at(t.exps, var_index); }

std::vector<unsigned> MPoly::exponents(const Term& t) const
{
    std::vector<unsigned> out(vars_->size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = byte_at(t.exps, i);
    return out;
}

unsigned MPoly::degree(std::string_view var) const
{
    if (!has_variable(var)) return 0;
    const std::size_t idx = variable_index(var);
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, byte_at(t.exps, idx));
    return d;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.front().exps); }

bool MPoly::is_homogeneous(unsigned d) const
{
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return degree_of(t.exps) == d; });
}

MPoly MPoly::with_variables(std::span<const std::string> names) const
{
    std::vector<std::string> all(vars_->begin(), vars_->end());
    all.insert(all.end(), names.begin(), names.end());
    return MPolyAccess::over(*this, make_universe(std::move(all)));
}

MPoly MPoly::compact() const
{
    std::uint64_t used = 0;
    for (const auto& t : terms_) used |= t.exps;
    std::vector<std::string> keep;
    std::vector<std::size_t> from;
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if (byte_at(used, i) != 0) {
            keep.push_back((*vars_)[i]);
            from.push_back(i);
        }
    if (keep.size() == vars_->size()) return *this;
    auto u = make_universe(keep);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::uint64_t e = 0;
        for (std::size_t j = 0; j < from.size(); ++j) e |= std::uint64_t{byte_at(t.exps, from[j])} << shift_of(j);
        out.push_back({e, t.coeff});
    }
    return MPoly(std::move(u), std::move(out));
}

MPoly MPoly::operator-() const
{
    MPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b)
{
    const auto u = union_of(a.vars_, b.vars_);
    Aligned x(a, u), y(b, u);
    return MPoly(u, merge_add(x->terms_, y->terms_, false));
}

MPoly operator-(const MPoly& a, const MPoly& b)
{
    const auto u = union_of(a.vars_, b.vars_);
    Aligned x(a, u), y(b, u);
    return MPoly(u, merge_add(x->terms_, y->terms_, true));
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    const auto u = union_of(a.vars_, b.vars_);
    Aligned x(a, u), y(b, u);
    return MPoly(u, multiply_terms(x->terms_, y->terms_));
}

MPoly operator*(const MPoly& a, const Rational& c)
{
    if (is_zero(c)) return MPoly(a.vars_, {});
    MPoly out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

MPoly operator/(const MPoly& a, const Rational& c)
{
    if (is_zero(c)) throw DomainError("division by zero");
    return a * Rational(1 / c);
}

MPoly& MPoly::operator+=(const MPoly& o) { return *this = *this + o; }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = *this - o; }
MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }
MPoly& MPoly::operator*=(const Rational& c) { return *this = *this * c; }
MPoly& MPoly::operator/=(const Rational& c) { return *this = *this / c; }

bool operator==(const MPoly& a, const MPoly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    if (same_universe(a.vars_, b.vars_)) {
        return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                          [](const Term& x, const Term& y) { return x.exps == y.exps && x.coeff == y.coeff; });
    }
    const MPoly ca = a.compact(), cb = b.compact();
    if (!same_universe(ca.vars_, cb.vars_)) return false;
    return std::equal(ca.terms_.begin(), ca.terms_.end(), cb.terms_.begin(),
                      [](const Term& x, const Term& y) { return x.exps == y.exps && x.coeff == y.coeff; });
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result(vars_, {Term{0, 1}});
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coeff);
        std::string mono;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const unsigned e = byte_at(t.exps, i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += binform::to_string(mag);
        } else {
            if (mag != 1) out += binform::to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MPoly parse_all()
    {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr()
    {
        MPoly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        MPoly t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    MPoly term()
    {
        MPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                const MPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc /= d.constant_value();
            } else {
                return acc;
            }
        }
    }

    MPoly factor()
    {
        MPoly base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > MPoly::max_exponent) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return MPoly::variable(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly MPoly::parse(std::string_view text, std::span<const std::string> extra)
{
    MPoly p = Parser(text).parse_all();
    if (!extra.empty()) p = p.with_variables(extra);
    return p;
}

// ---------------------------------------------------------------------------
// Free operations

MPoly diff(const MPoly& f, std::string_view var)
{
    const std::size_t idx = f.variable_index(var);
    const std::uint64_t unit = std::uint64_t{1} << shift_of(idx);
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        const unsigned e = byte_at(t.exps, idx);
        if (e == 0) continue;
        out.push_back({t.exps - unit, t.coeff * e});
    }
    return MPolyAccess::make(f.universe(), std::move(out));
}

MPoly coefficient(const MPoly& f, std::string_view var, unsigned k)
{
    if (!f.has_variable(var)) return k == 0 ? f : MPolyAccess::make(f.universe(), {});
    const std::size_t idx = f.variable_index(var);
    const std::uint64_t mask = std::uint64_t{0xff} << shift_of(idx);
    const std::uint64_t want = std::uint64_t{k} << shift_of(idx);
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if ((t.exps & mask) == want) out.push_back({t.exps & ~mask, t.coeff});
    return MPolyAccess::make(f.universe(), std::move(out));
}

MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings)
{
    if (bindings.empty()) return f;
    const auto& vars = f.variables();

    // Result universe: unbound variables of f plus everything the values use.
    std::vector<std::string> names;
    std::vector<bool> bound(vars.size(), false);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (bindings.count(vars[i])) bound[i] = true;
        else names.push_back(vars[i]);
    }
    for (const auto& [name, value] : bindings) {
        if (!f.has_variable(name)) continue;
        const MPoly used = value.compact();
        names.insert(names.end(), used.variables().begin(), used.variables().end());
    }
    const MPoly unit = MPoly::zero_over(names) + MPoly(1);
    const Universe& u = unit.universe();

    // Power caches for bound variables, expressed over u.
    std::vector<std::vector<MPoly>> powers(vars.size());
    std::vector<std::size_t> unbound_target(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (bound[i]) {
            powers[i].push_back(unit);
        } else {
            unbound_target[i] = static_cast<std::size_t>(
                std::lower_bound(u->begin(), u->end(), vars[i]) - u->begin());
        }
    }
    auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
        auto& cache = powers[i];
        while (cache.size() <= e) cache.push_back(cache.back() * (bindings.at(vars[i]).compact() * unit));
        return cache[e];
    };

    std::unordered_map<std::uint64_t, Rational, MonoHash> acc;
    for (const auto& t : f.terms()) {
        std::uint64_t mono = 0;
        const MPoly* single = nullptr;
        MPoly prod;
        bool have_prod = false;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = byte_at(t.exps, i);
            if (e == 0) continue;
            if (!bound[i]) {
                mono |= std::uint64_t{e} << shift_of(unbound_target[i]);
            } else if (!single && !have_prod) {
                single = &power(i, e);
            } else {
                prod = (have_prod ? prod : *single) * power(i, e);
                have_prod = true;
            }
        }
        const MPoly* factor = have_prod ? &prod : single;
        if (!factor) {
            acc[mono] += t.coeff;
            continue;
        }
        for (const auto& s : factor->terms()) acc[add_exps(s.exps, mono)] += t.coeff * s.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (!is_zero(c)) out.push_back({k, std::move(c)});
    std::sort(out.begin(), out.end(), TermGreater{});
    return MPolyAccess::make(u, std::move(out));
}

DivRem monic_divrem(const MPoly& f, const MPoly& g, std::string_view var)
{
    const std::string v(var);
    const unsigned dg = g.degree(var);
    const unsigned df = f.degree(var);
    const MPoly lead = coefficient(g, var, dg);
    if (!(lead == MPoly(1))) throw DomainError("divisor is not monic in '" + v + "'");

    std::vector<MPoly> fc(df + 1), gc(dg + 1);
    for (unsigned i = 0; i <= df; ++i) fc[i] = coefficient(f, var, i);
    for (unsigned i = 0; i <= dg; ++i) gc[i] = coefficient(g, var, i);

    std::vector<MPoly> qc(df >= dg ? df - dg + 1 : 0);
    for (unsigned i = df + 1; i-- > dg;) {
        if (fc[i].is_zero()) continue;
        const MPoly c = fc[i];
        qc[i - dg] = c;
        for (unsigned j = 0; j <= dg; ++j) fc[i - dg + j] -= c * gc[j];
    }

    const MPoly base = MPoly::zero_over(std::vector<std::string>{v}) + f * Rational(0) + g * Rational(0);
    MPoly q = base, r = base;
    for (unsigned i = 0; i < qc.size(); ++i)
        if (!qc[i].is_zero()) q += qc[i] * MPoly::monomial(v, i);
    for (unsigned i = 0; i < dg && i <= df; ++i)
        if (!fc[i].is_zero()) r += fc[i] * MPoly::monomial(v, i);
    return {std::move(q), std::move(r)};
}

MPoly exact_div(const MPoly& f, const MPoly& g)
{
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const Universe u = union_of(f.universe(), g.universe());
    if (g.is_constant()) return MPolyAccess::over(f, u) / g.constant_value();
    Aligned num(f, u), den(g, u);
    const auto dt = den->terms();
    if (dt.size() == 1) {
        std::vector<Term> out;
        out.reserve(num->size());
        const Rational inv = 1 / dt[0].coeff;
        for (const auto& t : num->terms()) {
            if (!divides(dt[0].exps, t.exps)) throw DomainError("inexact polynomial division");
            out.push_back({t.exps - dt[0].exps, t.coeff * inv});
        }
        return MPolyAccess::make(u, std::move(out));
    }

    // Leading-term division; the remainder lives in a hash map and a heap
    // yields its monomials in descending order.
    struct HeapLess {
        bool operator()(std::uint64_t a, std::uint64_t b) const { return grlex_greater(b, a); }
    };
    std::unordered_map<std::uint64_t, Rational, MonoHash> rem;
    rem.reserve(num->size() * 2);
    std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, HeapLess> heap;
    for (const auto& t : num->terms()) {
        rem.emplace(t.exps, t.coeff);
        heap.push(t.exps);
    }
    const std::uint64_t lead = dt[0].exps;
    const Rational inv_lead = 1 / dt[0].coeff;
    std::vector<Term> quotient;
    Rational scratch;
    while (!heap.empty()) {
        const std::uint64_t m = heap.top();
        heap.pop();
        auto it = rem.find(m);
        if (it == rem.end() || is_zero(it->second)) continue;
        if (!divides(lead, m)) throw DomainError("inexact polynomial division");
        const std::uint64_t qm = m - lead;
        Rational qc = it->second * inv_lead;
        rem.erase(it);
        for (std::size_t k = 1; k < dt.size(); ++k) {
            const std::uint64_t key = add_exps(qm, dt[k].exps);
            scratch = qc * dt[k].coeff;
            auto [jt, inserted] = rem.try_emplace(key);
            jt->second -= scratch;
            if (inserted) heap.push(key);
        }
        quotient.push_back({qm, std::move(qc)});
    }
    return MPolyAccess::make(u, std::move(quotient));
}

MPoly homogenize(const MPoly& f, const std::string& var, unsigned degree)
{
    const MPoly g = f.with_variables(std::vector<std::string>{var});
    const std::size_t idx = g.variable_index(var);
    std::vector<Term> out;
    out.reserve(g.size());
    for (const auto& t : g.terms()) {
        const unsigned d = degree_of(t.exps);
        if (d > degree) throw DomainError("term exceeds the homogenization degree");
        out.push_back({add_exps(t.exps, std::uint64_t{degree - d} << shift_of(idx)), t.coeff});
    }
    std::sort(out.begin(), out.end(), TermGreater{});
    return MPolyAccess::make(g.universe(), std::move(out));
}

} // namespace binform
