#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permrep/rat.hpp"

namespace permrep {

// Exponent vector over a fixed variable universe.
using Mono = std::vector<uint32_t>;

inline unsigned mono_degree(const Mono& m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic order, variables compared in declared order
// (x1 beats x2). Returns <0, 0, >0.
inline int grlex_cmp(const Mono& a, const Mono& b)
{
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db)
        return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i] ? 1 : -1;
    return 0;
}

struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over an exact coefficient field K.
// The variable count is fixed at construction; terms are kept in a map
// under graded-lex order, so the representation is canonical.
template <class K>
class Poly {
public:
    using TermMap = std::map<Mono, K, GrlexLess>;

    Poly(int nvars, K proto) : nvars_(nvars), proto_(zero_like(proto))
    {
        require(nvars >= 0, "negative variable count");
    }

    static Poly constant(int nvars, const K& c)
    {
        Poly p(nvars, c);
        if (!pr_is_zero(c))
            p.terms_.emplace(Mono(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int i, const K& proto)
    {
        require(i >= 0 && i < nvars, "variable index ", i, " out of range");
        Poly p(nvars, proto);
        Mono m(nvars, 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), one_like(proto));
        return p;
    }

    int nvars() const { return nvars_; }
    const K& proto() const { return proto_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    K constant_value() const
    {
        if (terms_.empty())
            return proto_;
        require(is_constant(), "polynomial is not constant");
        return terms_.begin()->second;
    }
    bool is_one() const
    {
        return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0 &&
               terms_.begin()->second == one_like(proto_);
    }

    int total_degree() const  // degree of 0 reported as -1
    {
        return terms_.empty() ? -1
                              : static_cast<int>(mono_degree(terms_.rbegin()->first));
    }
    int degree_in(int var) const
    {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m[var]));
        return d;
    }
    bool uses_var(int var) const
    {
        for (const auto& [m, c] : terms_)
            if (m[var] > 0)
                return true;
        return false;
    }

    const Mono& leading_mono() const
    {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const K& leading_coeff() const
    {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Mono& m, const K& c)
    {
        require(static_cast<int>(m.size()) == nvars_, "monomial arity mismatch");
        if (pr_is_zero(c))
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (pr_is_zero(it->second))
                terms_.erase(it);
        }
    }

    Poly operator-() const
    {
        Poly r(nvars_, proto_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    Poly operator+(const Poly& o) const
    {
        match(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const
    {
        match(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const
    {
        match(o);
        Poly r(nvars_, proto_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Mono m(nvars_);
                for (int i = 0; i < nvars_; ++i)
                    m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const
    {
        Poly r(nvars_, proto_);
        if (pr_is_zero(c))
            return r;
        for (const auto& [m, cc] : terms_)
            r.terms_.emplace(m, cc * c);
        return r;
    }

    Poly pow(unsigned e) const
    {
        Poly r = constant(nvars_, one_like(proto_));
        Poly b(*this);
        while (e) {
            if (e & 1u)
                r = r * b;
            b = (e >>= 1u) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Poly& o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Relabels variables: x_i becomes x_{img[i]}. img must be a bijection.
    Poly permuted(const std::vector<int>& img) const
    {
        require(static_cast<int>(img.size()) == nvars_, "permutation arity mismatch");
        Poly r(nvars_, proto_);
        for (const auto& [m, c] : terms_) {
            Mono mm(nvars_, 0);
            for (int i = 0; i < nvars_; ++i)
                mm[img[i]] = m[i];
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    // Partial substitution: each variable optionally maps to a scalar or to
    // another variable of the same universe.
    using SubstTarget = std::variant<K, int>;
    Poly substituted(const std::vector<std::optional<SubstTarget>>& assign) const
    {
        require(static_cast<int>(assign.size()) == nvars_, "assignment arity mismatch");
        Poly r(nvars_, proto_);
        for (const auto& [m, c] : terms_) {
            K coeff = c;
            Mono mm(nvars_, 0);
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0)
                    continue;
                if (!assign[i]) {
                    mm[i] += m[i];
                } else if (std::holds_alternative<int>(*assign[i])) {
                    int j = std::get<int>(*assign[i]);
                    require(j >= 0 && j < nvars_, "substitution target out of range");
                    mm[j] += m[i];
                } else {
                    const K& val = std::get<K>(*assign[i]);
                    for (uint32_t e = 0; e < m[i]; ++e)
                        coeff = coeff * val;
                }
            }
            r.add_term(mm, coeff);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const
    {
        require(static_cast<int>(names.size()) == nvars_, "name table arity mismatch");
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = scalar_str(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg)
                cs = cs.substr(1);
            std::string ms;
            for (int i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0)
                    continue;
                if (!ms.empty())
                    ms += "*";
                ms += names[i];
                if (it->first[i] > 1)
                    ms += cat("^", it->first[i]);
            }
            std::string body;
            if (ms.empty())
                body = cs;
            else if (cs == "1")
                body = ms;
            else
                body = cs + "*" + ms;
            if (first) {
                out += (neg ? "-" : "") + body;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    void match(const Poly& o) const
    {
        require(nvars_ == o.nvars_, "mixed variable universes: ", nvars_, " vs ",
                o.nvars_);
    }

    int nvars_;
    K proto_;
    TermMap terms_;
};

template <class K>
bool is_zero(const Poly<K>& p)
{
    return p.is_zero();
}
template <class K>
Poly<K> zero_like(const Poly<K>& p)
{
    return Poly<K>(p.nvars(), p.proto());
}
template <class K>
Poly<K> one_like(const Poly<K>& p)
{
    return Poly<K>::constant(p.nvars(), one_like(p.proto()));
}

// Exact division; throws if b does not divide a.
template <class K>
Poly<K> div_exact(Poly<K> a, const Poly<K>& b)
{
    require(!b.is_zero(), "division by zero polynomial");
    Poly<K> q(a.nvars(), a.proto());
    const Mono& lb = b.leading_mono();
    while (!a.is_zero()) {
        const Mono& la = a.leading_mono();
        Mono t(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            if (la[i] < lb[i])
                fail("inexact polynomial division");
            t[i] = la[i] - lb[i];
        }
        K c = a.leading_coeff() / b.leading_coeff();
        Poly<K> term(a.nvars(), a.proto());
        term.add_term(t, c);
        q += term;
        a -= term * b;
    }
    return q;
}

namespace detail {

// Coefficient of v^e in p, viewed as a polynomial in v (the exponent of v is
// zeroed out in the result).
template <class K>
Poly<K> coeff_of(const Poly<K>& p, int v, uint32_t e)
{
    Poly<K> r(p.nvars(), p.proto());
    for (const auto& [m, c] : p.terms()) {
        if (m[v] != e)
            continue;
        Mono mm = m;
        mm[v] = 0;
        r.add_term(mm, c);
    }
    return r;
}

template <class K>
Poly<K> shift_var(const Poly<K>& p, int v, uint32_t e)
{
    Poly<K> r(p.nvars(), p.proto());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[v] += e;
        r.add_term(mm, c);
    }
    return r;
}

// Strict pseudo-remainder lc_v(q)^(delta+1) * p mod q with respect to v,
// where delta = deg_v(p) - deg_v(q). The exact power matters for the
// subresultant divisions below.
template <class K>
Poly<K> prem_strict(Poly<K> p, const Poly<K>& q, int v, int delta)
{
    int dq = q.degree_in(v);
    Poly<K> lcq = coeff_of(q, v, static_cast<uint32_t>(dq));
    int steps = 0;
    while (!p.is_zero()) {
        int dp = p.degree_in(v);
        if (dp < dq)
            break;
        Poly<K> lcp = coeff_of(p, v, static_cast<uint32_t>(dp));
        p = p * lcq - shift_var(lcp, v, static_cast<uint32_t>(dp - dq)) * q;
        ++steps;
    }
    for (; steps < delta + 1; ++steps)
        p = p * lcq;
    return p;
}

}  // namespace detail

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b);

namespace detail {

// gcd of the v-coefficients of p.
template <class K>
Poly<K> content_in(const Poly<K>& p, int v)
{
    Poly<K> g(p.nvars(), p.proto());
    int d = p.degree_in(v);
    for (int e = 0; e <= d; ++e) {
        Poly<K> c = coeff_of(p, v, static_cast<uint32_t>(e));
        if (!c.is_zero())
            g = poly_gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

}  // namespace detail

namespace detail {

// gcd of a single monomial with an arbitrary polynomial: the componentwise
// minimum of the exponent vectors, coefficient 1.
template <class K>
Poly<K> monomial_gcd(const Mono& m, const Poly<K>& a, const Poly<K>& b)
{
    Mono g = m;
    for (const auto& [ma, c] : a.terms())
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = std::min(g[i], ma[i]);
    for (const auto& [mb, c] : b.terms())
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = std::min(g[i], mb[i]);
    Poly<K> out(a.nvars(), a.proto());
    out.add_term(g, one_like(a.proto()));
    return out;
}

// Modular probe for rational coefficients. Substituting the line
// x_i = a_i t + b_i over F_p is a ring map; if the image of f keeps the full
// total degree of f, the leading form of any common divisor d survives too
// (top(d) divides top(f)), so deg gcd(f|line, g|line) >= deg gcd(f, g).
// Hence a constant univariate gcd certifies coprimality; a positive degree d
// is a sound upper-bound probe used only to pick shortcuts that re-verify by
// exact division.
std::optional<int> modular_gcd_degree_q(const Poly<Rat>& f, const Poly<Rat>& g);
bool certified_coprime_q(const Poly<Rat>& f, const Poly<Rat>& g);

template <class K>
std::optional<int> modular_gcd_degree(const Poly<K>&, const Poly<K>&)
{
    return std::nullopt;
}
inline std::optional<int> modular_gcd_degree(const Poly<Rat>& f, const Poly<Rat>& g)
{
    return modular_gcd_degree_q(f, g);
}

}  // namespace detail

// Monic (leading grlex coefficient 1) gcd via the subresultant polynomial
// remainder sequence, recursing on the variable of highest index.
template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b)
{
    auto monic = [](Poly<K> p) {
        if (p.is_zero())
            return p;
        return p.scaled(inv_of(p.leading_coeff()));
    };
    if (a.is_zero())
        return monic(b);
    if (b.is_zero())
        return monic(a);
    if (a.is_constant() || b.is_constant())
        return Poly<K>::constant(a.nvars(), one_like(a.proto()));
    if (a.terms().size() == 1)
        return detail::monomial_gcd(a.leading_mono(), b, b);
    if (b.terms().size() == 1)
        return detail::monomial_gcd(b.leading_mono(), a, a);
    if (a == b)
        return monic(a);
    std::optional<int> image_deg = detail::modular_gcd_degree(a, b);
    if (image_deg) {
        if (*image_deg == 0)
            return Poly<K>::constant(a.nvars(), one_like(a.proto()));
        // full-cancellation shortcut, re-verified by exact division
        if (*image_deg == b.total_degree()) {
            try {
                div_exact(a, b);
                return monic(b);
            } catch (const Error&) {
            }
        }
        if (*image_deg == a.total_degree()) {
            try {
                div_exact(b, a);
                return monic(a);
            } catch (const Error&) {
            }
        }
    }

    int v = -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.uses_var(i) || b.uses_var(i)) {
            v = i;
            break;
        }
    }
    bool in_a = a.uses_var(v), in_b = b.uses_var(v);
    if (in_a && !in_b)
        return poly_gcd(detail::content_in(a, v), b);
    if (!in_a && in_b)
        return poly_gcd(a, detail::content_in(b, v));

    Poly<K> cont_a = detail::content_in(a, v);
    Poly<K> cont_b = detail::content_in(b, v);
    Poly<K> p = div_exact(a, cont_a);
    Poly<K> q = div_exact(b, cont_b);
    if (p.degree_in(v) < q.degree_in(v))
        std::swap(p, q);

    const Poly<K> one = Poly<K>::constant(a.nvars(), one_like(a.proto()));
    Poly<K> g = one, h = one;
    Poly<K> gcd_pp = one;
    for (;;) {
        int delta = p.degree_in(v) - q.degree_in(v);
        Poly<K> r = detail::prem_strict(p, q, v, delta);
        if (r.is_zero()) {
            gcd_pp = q;
            break;
        }
        p = q;
        q = div_exact(r, g * h.pow(static_cast<unsigned>(delta)));
        g = detail::coeff_of(p, v, static_cast<uint32_t>(p.degree_in(v)));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = div_exact(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
        if (q.degree_in(v) == 0)
            break;  // primitive parts are coprime in v
    }
    if (!gcd_pp.is_one() && !gcd_pp.is_constant())
        gcd_pp = div_exact(gcd_pp, detail::content_in(gcd_pp, v));
    else
        gcd_pp = one;
    return monic(poly_gcd(cont_a, cont_b) * gcd_pp);
}

}  // namespace permrep
