#pragma once

#include <map>
#include <random>
#include <set>

#include "permrep/base_field.hpp"
#include "permrep/fp.hpp"
#include "permrep/matrix.hpp"
#include "permrep/ratfunc.hpp"

namespace permrep {

template <class K>
K scalar_proto(const BaseField& b);
template <>
inline Rat scalar_proto<Rat>(const BaseField& b)
{
    require(b.kind == BaseField::Kind::Rationals, "expected rational base field");
    return Rat();
}
template <>
inline Fp scalar_proto<Fp>(const BaseField& b)
{
    require(b.kind == BaseField::Kind::Prime, "expected prime base field");
    return Fp(b.p, 0);
}

// K = k(x1..xn) with a symmetric group permuting a declared sublist of the
// variables (identity elsewhere). Generators are the adjacent transpositions
// of consecutive entries of the acting list.
struct ActionField {
    BaseField base;
    int nvars = 0;
    std::vector<int> acting;  // ascending 0-based variable indices

    static ActionField make(BaseField base, int nvars, std::vector<int> acting)
    {
        ActionField f{base, nvars, std::move(acting)};
        require(f.nvars >= 0, "negative variable count");
        for (size_t i = 0; i < f.acting.size(); ++i) {
            require(f.acting[i] >= 0 && f.acting[i] < f.nvars,
                    "acting variable out of range");
            require(i == 0 || f.acting[i] > f.acting[i - 1],
                    "acting variables must be strictly ascending");
        }
        return f;
    }

    int num_gens() const
    {
        return acting.size() < 2 ? 0 : static_cast<int>(acting.size()) - 1;
    }
    // Full-arity permutation for the k-th adjacent transposition.
    std::vector<int> gen_perm(int k) const
    {
        require(k >= 0 && k < num_gens(), "generator index out of range");
        std::vector<int> p(nvars);
        for (int i = 0; i < nvars; ++i)
            p[i] = i;
        std::swap(p[acting[k]], p[acting[k + 1]]);
        return p;
    }
    std::vector<int> identity_perm() const
    {
        std::vector<int> p(nvars);
        for (int i = 0; i < nvars; ++i)
            p[i] = i;
        return p;
    }
    long long group_order() const
    {
        long long r = 1;
        for (size_t i = 2; i <= acting.size(); ++i)
            r *= static_cast<long long>(i);
        return r;
    }
};

// Semilinear representation: sigma acts on column vectors by
// v -> F(sigma) * sigma(v), sigma applied entrywise; F is determined by its
// values on the adjacent transpositions via F(tau sigma) = F(tau) tau(F(sigma)).
template <class K>
struct SemilinRep {
    ActionField field;
    int dim = 0;
    std::vector<Matrix<RatFunc<K>>> gen_mats;
};

template <class K>
Matrix<RatFunc<K>> permute_matrix(const Matrix<RatFunc<K>>& m, const std::vector<int>& sigma)
{
    Matrix<RatFunc<K>> out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = permute_vars(m.at(i, j), sigma);
    return out;
}

template <class K>
std::vector<RatFunc<K>> permute_vector(const std::vector<RatFunc<K>>& v,
                                       const std::vector<int>& sigma)
{
    std::vector<RatFunc<K>> out;
    out.reserve(v.size());
    for (const auto& e : v)
        out.push_back(permute_vars(e, sigma));
    return out;
}

inline std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

namespace detail {

// Matrix of polynomials over a tracked denominator kept as a factor list.
// Products and comparisons stay in the polynomial ring; canonical rational
// functions are produced at conversion points by reducing against the small
// factors one at a time.
template <class K>
struct LazyMat {
    Matrix<Poly<K>> n;
    std::vector<Poly<K>> den_factors;  // the denominator is their product
};

template <class K>
Poly<K> lazy_den(const LazyMat<K>& a)
{
    Poly<K> d = Poly<K>::constant(a.n.zero().nvars(), one_like(a.n.zero().proto()));
    for (const auto& f : a.den_factors)
        d *= f;
    return d;
}

template <class K>
LazyMat<K> lazy_from_ratfunc(const Matrix<RatFunc<K>>& m)
{
    Poly<K> den = Poly<K>::constant(m.zero().nvars(), one_like(m.zero().proto()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Poly<K>& d = m.at(i, j).den();
            if (!d.is_one())
                den = den * div_exact(d, poly_gcd(den, d));
        }
    Matrix<Poly<K>> n(m.rows(), m.cols(), zero_like(den));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            n.at(i, j) = m.at(i, j).num() * div_exact(den, m.at(i, j).den());
    std::vector<Poly<K>> factors;
    if (!den.is_one())
        factors.push_back(std::move(den));
    return LazyMat<K>{std::move(n), std::move(factors)};
}

template <class K>
Matrix<RatFunc<K>> lazy_to_ratfunc(const LazyMat<K>& a)
{
    int nvars = a.n.zero().nvars();
    K proto = a.n.zero().proto();
    Matrix<RatFunc<K>> out(a.n.rows(), a.n.cols(), RatFunc<K>(nvars, proto));
    for (int i = 0; i < a.n.rows(); ++i) {
        for (int j = 0; j < a.n.cols(); ++j) {
            Poly<K> num = a.n.at(i, j);
            Poly<K> den = Poly<K>::constant(nvars, one_like(proto));
            for (Poly<K> f : a.den_factors) {
                if (num.is_zero())
                    break;
                for (;;) {
                    Poly<K> g = poly_gcd(num, f);
                    if (g.is_constant())
                        break;
                    num = div_exact(num, g);
                    f = div_exact(f, g);
                }
                den *= f;
            }
            if (num.is_zero())
                out.at(i, j) = RatFunc<K>(nvars, proto);
            else
                out.at(i, j) = RatFunc<K>(std::move(num), std::move(den));
        }
    }
    return out;
}

template <class K>
Matrix<Poly<K>> permute_poly_matrix(const Matrix<Poly<K>>& m, const std::vector<int>& sigma)
{
    Matrix<Poly<K>> out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, j).permuted(sigma);
    return out;
}

template <class K>
LazyMat<K> lazy_mul(const LazyMat<K>& a, const LazyMat<K>& b)
{
    std::vector<Poly<K>> factors = a.den_factors;
    factors.insert(factors.end(), b.den_factors.begin(), b.den_factors.end());
    return LazyMat<K>{a.n * b.n, std::move(factors)};
}

template <class K>
LazyMat<K> lazy_permute(const LazyMat<K>& a, const std::vector<int>& sigma)
{
    std::vector<Poly<K>> factors;
    factors.reserve(a.den_factors.size());
    for (const auto& f : a.den_factors)
        factors.push_back(f.permuted(sigma));
    return LazyMat<K>{permute_poly_matrix(a.n, sigma), std::move(factors)};
}

template <class K>
bool lazy_eq(const LazyMat<K>& a, const LazyMat<K>& b)
{
    Poly<K> da = lazy_den(a), db = lazy_den(b);
    for (int i = 0; i < a.n.rows(); ++i)
        for (int j = 0; j < a.n.cols(); ++j)
            if (a.n.at(i, j) * db != b.n.at(i, j) * da)
                return false;
    return true;
}

template <class K>
LazyMat<K> lazy_identity(int dim, int nvars, const K& proto)
{
    Poly<K> one = Poly<K>::constant(nvars, one_like(proto));
    Matrix<Poly<K>> n(dim, dim, Poly<K>(nvars, proto));
    for (int i = 0; i < dim; ++i)
        n.at(i, i) = one;
    return LazyMat<K>{std::move(n), {}};
}

// Sums F(sigma) sigma(u) over a subset of table elements without leaving the
// polynomial ring: a common denominator is the multiset union (lcm) of the
// tracked factors, and every term is scaled by its missing factors.
template <class K>
class LazyAverager {
public:
    LazyAverager(const std::vector<LazyMat<K>>& mats,
                 const std::vector<std::vector<int>>& perms, std::vector<int> members)
        : mats_(mats), perms_(perms), members_(std::move(members))
    {
        // multiset union of the denominator factors (a common denominator;
        // equal atoms share a slot, distinct atoms get their own)
        auto local_counts = [&](int s) {
            std::vector<int> local(lcm_factors_.size(), 0);
            for (const auto& f : mats_[s].den_factors) {
                bool found = false;
                for (size_t i = 0; i < lcm_factors_.size(); ++i) {
                    if (lcm_factors_[i] == f) {
                        ++local[i];
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    lcm_factors_.push_back(f);
                    lcm_count_.push_back(0);
                    local.push_back(1);
                }
            }
            local.resize(lcm_factors_.size(), 0);
            return local;
        };
        for (int s : members_) {
            std::vector<int> local = local_counts(s);
            for (size_t i = 0; i < lcm_factors_.size(); ++i)
                lcm_count_[i] = std::max(lcm_count_[i], local[i]);
        }
        // per-member multiplier: the factors of the lcm it lacks
        for (int s : members_) {
            std::vector<int> local = local_counts(s);
            std::vector<int> remaining(lcm_factors_.size());
            for (size_t i = 0; i < lcm_factors_.size(); ++i)
                remaining[i] = lcm_count_[i] - local[i];
            int nv = mats_[s].n.zero().nvars();
            K proto = mats_[s].n.zero().proto();
            Poly<K> mult = Poly<K>::constant(nv, one_like(proto));
            for (size_t i = 0; i < lcm_factors_.size(); ++i)
                for (int c = 0; c < remaining[i]; ++c)
                    mult *= lcm_factors_[i];
            multipliers_.push_back(std::move(mult));
        }
    }

    // Averages a polynomial-entry vector; returns canonical rational functions.
    std::vector<RatFunc<K>> average(const std::vector<Poly<K>>& u) const
    {
        const int dim = static_cast<int>(u.size());
        int nv = u.empty() ? 0 : u[0].nvars();
        K proto = u.empty() ? K() : u[0].proto();
        std::vector<Poly<K>> acc(dim, Poly<K>(nv, proto));
        for (size_t t = 0; t < members_.size(); ++t) {
            const LazyMat<K>& m = mats_[members_[t]];
            const std::vector<int>& sg = perms_[members_[t]];
            std::vector<Poly<K>> su(dim, Poly<K>(nv, proto));
            for (int i = 0; i < dim; ++i)
                su[i] = u[i].permuted(sg);
            for (int i = 0; i < dim; ++i) {
                Poly<K> row(nv, proto);
                for (int j = 0; j < dim; ++j)
                    if (!su[j].is_zero() && !m.n.at(i, j).is_zero())
                        row += m.n.at(i, j) * su[j];
                if (!row.is_zero())
                    acc[i] += row * multipliers_[t];
            }
        }
        // reduce each entry against the lcm factors
        std::vector<RatFunc<K>> out;
        out.reserve(dim);
        for (int i = 0; i < dim; ++i) {
            Poly<K> num = acc[i];
            if (num.is_zero()) {
                out.emplace_back(nv, proto);
                continue;
            }
            Poly<K> den = Poly<K>::constant(nv, one_like(proto));
            for (size_t k = 0; k < lcm_factors_.size(); ++k) {
                for (int c = 0; c < lcm_count_[k]; ++c) {
                    Poly<K> f = lcm_factors_[k];
                    for (;;) {
                        Poly<K> g = poly_gcd(num, f);
                        if (g.is_constant())
                            break;
                        num = div_exact(num, g);
                        f = div_exact(f, g);
                    }
                    den *= f;
                }
            }
            out.emplace_back(std::move(num), std::move(den));
        }
        return out;
    }

private:
    const std::vector<LazyMat<K>>& mats_;
    const std::vector<std::vector<int>>& perms_;
    std::vector<int> members_;
    std::vector<Poly<K>> lcm_factors_;
    std::vector<int> lcm_count_;
    std::vector<Poly<K>> multipliers_;
};

}  // namespace detail

// Cocycle values on every element of the acting group, grown from the
// generators by F(tau s) = F(tau) tau(F(s)).
template <class K>
struct CocycleTable {
    std::vector<std::vector<int>> perms;  // index 0 = identity
    std::vector<Matrix<RatFunc<K>>> mats;
    std::vector<detail::LazyMat<K>> lazy;  // same values, engine form
    std::map<std::vector<int>, int> index;

    int find(const std::vector<int>& p) const
    {
        auto it = index.find(p);
        require(it != index.end(), "permutation outside the acting group");
        return it->second;
    }
};

template <class K>
CocycleTable<K> build_cocycle_table(const SemilinRep<K>& rep)
{
    CocycleTable<K> t;
    const ActionField& f = rep.field;
    K proto = scalar_proto<K>(f.base);
    std::vector<detail::LazyMat<K>> gens;
    gens.reserve(rep.gen_mats.size());
    for (const auto& m : rep.gen_mats)
        gens.push_back(detail::lazy_from_ratfunc(m));

    t.lazy.push_back(detail::lazy_identity(rep.dim, f.nvars, proto));
    t.perms.push_back(f.identity_perm());
    t.mats.push_back(detail::lazy_to_ratfunc(t.lazy[0]));
    t.index.emplace(t.perms[0], 0);
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (int k = 0; k < f.num_gens(); ++k) {
            std::vector<int> np = compose_perm(t.perms[cur], f.gen_perm(k));
            if (t.index.count(np))
                continue;
            // F(tau * s) = F(tau) * tau(F(s))
            detail::LazyMat<K> nm =
                detail::lazy_mul(t.lazy[cur], detail::lazy_permute(gens[k], t.perms[cur]));
            t.index.emplace(np, static_cast<int>(t.perms.size()));
            t.perms.push_back(std::move(np));
            t.mats.push_back(detail::lazy_to_ratfunc(nm));
            t.lazy.push_back(std::move(nm));
            queue.push_back(static_cast<int>(t.perms.size()) - 1);
        }
    }
    return t;
}

struct CocycleCheckResult {
    bool valid = true;
    std::vector<std::string> violations;
};

namespace detail {

// Accumulates the cocycle along a word in the generators, staying in the
// polynomial ring.
template <class K>
std::pair<std::vector<int>, detail::LazyMat<K>> word_cocycle(
    const SemilinRep<K>& rep, const std::vector<detail::LazyMat<K>>& gens,
    const std::vector<int>& word)
{
    const ActionField& f = rep.field;
    std::vector<int> sigma = f.identity_perm();
    detail::LazyMat<K> w = detail::lazy_identity(rep.dim, f.nvars, scalar_proto<K>(f.base));
    for (int k : word) {
        w = detail::lazy_mul(w, detail::lazy_permute(gens[k], sigma));
        sigma = compose_perm(sigma, f.gen_perm(k));
    }
    return {sigma, w};
}

}  // namespace detail

// Checks the Coxeter relations (involution, braid, commutation) exactly;
// sound and complete for cocycle validity on the whole group.
template <class K>
CocycleCheckResult cocycle_check(const SemilinRep<K>& rep)
{
    const ActionField& f = rep.field;
    require(static_cast<int>(rep.gen_mats.size()) == f.num_gens(),
            "expected one matrix per adjacent transposition");
    for (int k = 0; k < f.num_gens(); ++k) {
        require(rep.gen_mats[k].rows() == rep.dim && rep.gen_mats[k].cols() == rep.dim,
                "generator matrix has wrong dimensions");
        require(inverse(rep.gen_mats[k]).has_value(), "non-invertible cocycle matrix F(s_",
                k + 1, ")");
    }
    CocycleCheckResult out;
    std::vector<detail::LazyMat<K>> gens;
    gens.reserve(rep.gen_mats.size());
    for (const auto& m : rep.gen_mats)
        gens.push_back(detail::lazy_from_ratfunc(m));
    auto check_words = [&](const std::vector<int>& w1, const std::vector<int>& w2,
                           const std::string& label) {
        auto [s1, m1] = detail::word_cocycle(rep, gens, w1);
        auto [s2, m2] = detail::word_cocycle(rep, gens, w2);
        require(s1 == s2, "internal error: relation words disagree as permutations");
        if (!detail::lazy_eq(m1, m2)) {
            out.valid = false;
            out.violations.push_back(label);
        }
    };
    for (int k = 0; k < f.num_gens(); ++k)
        check_words({k, k}, {}, cat("s", k + 1, "^2 = e"));
    for (int k = 0; k + 1 < f.num_gens(); ++k)
        check_words({k, k + 1, k}, {k + 1, k, k + 1},
                    cat("braid s", k + 1, " s", k + 2, " s", k + 1));
    for (int k = 0; k < f.num_gens(); ++k)
        for (int l = k + 2; l < f.num_gens(); ++l)
            check_words({k, l}, {l, k}, cat("commutation s", k + 1, " s", l + 1));
    return out;
}

// F(s) = g^{-1} s(g): the cocycle of the trivial action conjugated by g.
template <class K>
SemilinRep<K> coboundary_from(const ActionField& f, const Matrix<RatFunc<K>>& g)
{
    auto gi = inverse(g);
    require(gi.has_value(), "coboundary base change must be invertible");
    SemilinRep<K> rep{f, g.rows(), {}};
    for (int k = 0; k < f.num_gens(); ++k)
        rep.gen_mats.push_back(*gi * permute_matrix(g, f.gen_perm(k)));
    return rep;
}

template <class K>
bool is_fixed_column(const SemilinRep<K>& rep, const std::vector<RatFunc<K>>& c)
{
    for (int k = 0; k < rep.field.num_gens(); ++k) {
        auto sc = permute_vector(c, rep.field.gen_perm(k));
        if (rep.gen_mats[k] * sc != c)
            return false;
    }
    return true;
}

namespace detail {

// Monomials of the n-variable ring in ascending graded-lex order.
inline std::vector<Mono> monomials_up_to(int nvars, int count)
{
    std::vector<Mono> out;
    for (int deg = 0; static_cast<int>(out.size()) < count; ++deg) {
        // all exponent vectors of total degree deg, lexicographic
        Mono m(nvars, 0);
        auto rec = [&](auto&& self, int pos, int rest) -> void {
            if (static_cast<int>(out.size()) >= count)
                return;
            if (pos == nvars - 1) {
                m[pos] = static_cast<uint32_t>(rest);
                out.push_back(m);
                return;
            }
            for (int e = rest; e >= 0; --e) {
                m[pos] = static_cast<uint32_t>(e);
                self(self, pos + 1, rest - e);
            }
            m[pos] = 0;
        };
        if (nvars == 0) {
            out.push_back(m);
            break;
        }
        rec(rec, 0, deg);
    }
    return out;
}

template <class K>
int column_rank(const std::vector<std::vector<RatFunc<K>>>& cols, int dim)
{
    if (cols.empty())
        return 0;
    Matrix<RatFunc<K>> m(dim, static_cast<int>(cols.size()), zero_like(cols[0][0]));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i < dim; ++i)
            m.at(i, j) = cols[j][i];
    return rank_generic(m);  // entries are small canonical fractions here
}

}  // namespace detail

template <class K>
struct H90Result {
    bool success = false;
    std::optional<Matrix<RatFunc<K>>> c;  // dim x dim when successful
    int fixed_rank = 0;    // independent fixed columns found
    bool verified = false;
    int candidates_tried = 0;
};

// Constructive Hilbert 90 over the finite truncated group: averages
// u -> sum_sigma F(sigma) sigma(u) over a deterministic monomial sweep,
// keeping K-independent fixed columns, with seeded random fallbacks.
template <class K>
H90Result<K> h90_trivialize(const SemilinRep<K>& rep, int budget = 200, uint64_t seed = 0)
{
    CocycleCheckResult chk = cocycle_check(rep);
    if (!chk.valid) {
        std::string all;
        for (const auto& v : chk.violations)
            all += v + "; ";
        fail("invalid cocycle: ", all);
    }
    CocycleTable<K> table = build_cocycle_table(rep);
    const ActionField& f = rep.field;
    K proto = scalar_proto<K>(f.base);
    RatFunc<K> rf_zero(f.nvars, proto);

    std::vector<int> everyone(table.perms.size());
    for (size_t i = 0; i < everyone.size(); ++i)
        everyone[i] = static_cast<int>(i);
    detail::LazyAverager<K> averager(table.lazy, table.perms, everyone);

    H90Result<K> out;
    std::vector<std::vector<RatFunc<K>>> cols;
    auto try_candidate = [&](const std::vector<Poly<K>>& u) {
        ++out.candidates_tried;
        auto c = averager.average(u);
        bool nonzero = false;
        for (const auto& e : c)
            nonzero = nonzero || !e.is_zero();
        if (!nonzero)
            return false;
        cols.push_back(c);
        if (detail::column_rank(cols, rep.dim) < static_cast<int>(cols.size())) {
            cols.pop_back();
            return false;
        }
        return static_cast<int>(cols.size()) == rep.dim;
    };

    bool done = false;
    Poly<K> p_zero(f.nvars, proto);
    auto monos = detail::monomials_up_to(f.nvars, std::max(1, budget / std::max(1, rep.dim)));
    for (const auto& mono : monos) {
        if (done || out.candidates_tried >= budget)
            break;
        Poly<K> p(f.nvars, proto);
        p.add_term(mono, one_like(proto));
        for (int i = 0; i < rep.dim && !done; ++i) {
            std::vector<Poly<K>> u(rep.dim, p_zero);
            u[i] = p;
            done = try_candidate(u);
        }
    }
    if (!done) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coeff(-4, 4);
        for (int t = 0; t < 16 && !done; ++t) {
            std::vector<Poly<K>> u(rep.dim, p_zero);
            for (int i = 0; i < rep.dim; ++i) {
                Poly<K> p(f.nvars, proto);
                Mono c0(f.nvars, 0);
                p.add_term(c0, scalar_from_decimal(proto, std::to_string(std::abs(coeff(rng)))));
                for (int v : f.acting) {
                    long cv = coeff(rng);
                    if (cv == 0)
                        continue;
                    Mono m(f.nvars, 0);
                    m[v] = 1;
                    K val = scalar_from_decimal(proto, std::to_string(std::abs(cv)));
                    p.add_term(m, cv < 0 ? -val : val);
                }
                u[i] = std::move(p);
            }
            done = try_candidate(u);
        }
    }

    out.fixed_rank = static_cast<int>(cols.size());
    if (!done)
        return out;
    out.success = true;
    Matrix<RatFunc<K>> c(rep.dim, rep.dim, rf_zero);
    for (int j = 0; j < rep.dim; ++j)
        for (int i = 0; i < rep.dim; ++i)
            c.at(i, j) = cols[j][i];
    out.verified = true;
    for (int j = 0; j < rep.dim && out.verified; ++j) {
        std::vector<RatFunc<K>> col(rep.dim, rf_zero);
        for (int i = 0; i < rep.dim; ++i)
            col[i] = c.at(i, j);
        out.verified = is_fixed_column(rep, col);
    }
    out.c = std::move(c);
    return out;
}

// Fixed vectors of a subgroup (given by generating permutations) found by
// averaging; the returned list is K-linearly independent by construction,
// and that is re-checked before returning.
template <class K>
std::vector<std::vector<RatFunc<K>>> fixed_vectors(
    const SemilinRep<K>& rep, const std::vector<std::vector<int>>& subgroup_gens,
    int budget = 100)
{
    CocycleTable<K> table = build_cocycle_table(rep);
    // BFS closure of the generators inside the acting group
    std::vector<int> members{0};
    std::set<int> seen{0};
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (const auto& g : subgroup_gens) {
            int nxt = table.find(compose_perm(table.perms[cur], g));
            if (seen.insert(nxt).second) {
                members.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    std::sort(members.begin(), members.end());

    const ActionField& f = rep.field;
    K proto = scalar_proto<K>(f.base);
    detail::LazyAverager<K> averager(table.lazy, table.perms, members);
    std::vector<std::vector<RatFunc<K>>> cols;
    int tried = 0;
    Poly<K> p_zero(f.nvars, proto);
    auto monos = detail::monomials_up_to(f.nvars, std::max(1, budget / std::max(1, rep.dim)));
    for (const auto& mono : monos) {
        if (tried >= budget || static_cast<int>(cols.size()) == rep.dim)
            break;
        Poly<K> p(f.nvars, proto);
        p.add_term(mono, one_like(proto));
        for (int i = 0; i < rep.dim; ++i) {
            if (tried >= budget || static_cast<int>(cols.size()) == rep.dim)
                break;
            ++tried;
            std::vector<Poly<K>> u(rep.dim, p_zero);
            u[i] = p;
            auto acc = averager.average(u);
            bool nonzero = false;
            for (const auto& e : acc)
                nonzero = nonzero || !e.is_zero();
            if (!nonzero)
                continue;
            cols.push_back(acc);
            if (detail::column_rank(cols, rep.dim) < static_cast<int>(cols.size()))
                cols.pop_back();
        }
    }
    require(detail::column_rank(cols, rep.dim) == static_cast<int>(cols.size()),
            "internal error: fixed vectors are not independent");
    return cols;
}

template <class K>
struct CyclicResult {
    bool found = false;
    std::vector<RatFunc<K>> v;
    int orbit_rank = 0;
    int tried = 0;
};

// Searches for a vector whose orbit under words of length <= dim spans K^dim:
// deterministic monomial-weighted candidates first, then seeded random ones.
template <class K>
CyclicResult<K> find_cyclic_vector(const SemilinRep<K>& rep, int budget = 60,
                                   uint64_t seed = 0)
{
    require(rep.dim <= 4, "cyclic search is limited to dim <= 4");
    CocycleTable<K> table = build_cocycle_table(rep);
    const ActionField& f = rep.field;
    K proto = scalar_proto<K>(f.base);

    // elements reachable by words of length <= dim
    std::set<int> reach{0};
    std::vector<int> frontier{0};
    for (int depth = 0; depth < rep.dim; ++depth) {
        std::vector<int> next;
        for (int cur : frontier) {
            for (int k = 0; k < f.num_gens(); ++k) {
                int nxt = table.find(compose_perm(table.perms[cur], f.gen_perm(k)));
                if (reach.insert(nxt).second)
                    next.push_back(nxt);
            }
        }
        frontier = std::move(next);
    }
    std::vector<int> word_elems(reach.begin(), reach.end());

    CyclicResult<K> out;
    Poly<K> p_zero(f.nvars, proto);
    // the orbit matrix rank is insensitive to column scaling, so the
    // denominators of F(sigma) can be dropped and everything stays in the
    // polynomial ring
    auto orbit_rank = [&](const std::vector<Poly<K>>& v) {
        std::vector<std::vector<Poly<K>>> cols;
        for (int s : word_elems) {
            std::vector<Poly<K>> sv(rep.dim, p_zero);
            for (int i = 0; i < rep.dim; ++i)
                sv[i] = v[i].permuted(table.perms[s]);
            std::vector<Poly<K>> col(rep.dim, p_zero);
            const Matrix<Poly<K>>& n = table.lazy[s].n;
            for (int i = 0; i < rep.dim; ++i)
                for (int j = 0; j < rep.dim; ++j)
                    if (!n.at(i, j).is_zero() && !sv[j].is_zero())
                        col[i] += n.at(i, j) * sv[j];
            cols.push_back(std::move(col));
        }
        return rank_polynomial_bareiss(std::move(cols));
    };
    auto try_candidate = [&](const std::vector<Poly<K>>& v) {
        ++out.tried;
        int r = orbit_rank(v);
        if (r > out.orbit_rank)
            out.orbit_rank = r;
        if (r == rep.dim) {
            out.found = true;
            out.v.clear();
            for (const auto& e : v)
                out.v.emplace_back(e);
        }
        return out.found;
    };

    // Vandermonde-flavored candidates (1, mu, mu^2, ...) for small monomials mu
    auto monos = detail::monomials_up_to(f.nvars, 8);
    for (const auto& mono : monos) {
        if (out.found || out.tried >= budget)
            break;
        if (mono_degree(mono) == 0)
            continue;
        Poly<K> mu(f.nvars, proto);
        mu.add_term(mono, one_like(proto));
        std::vector<Poly<K>> v(rep.dim, p_zero);
        Poly<K> pow = Poly<K>::constant(f.nvars, one_like(proto));
        for (int i = 0; i < rep.dim; ++i) {
            v[i] = pow;
            pow = pow * mu;
        }
        try_candidate(v);
    }
    for (int i = 0; i < rep.dim && !out.found && out.tried < budget; ++i) {
        std::vector<Poly<K>> v(rep.dim, p_zero);
        v[i] = Poly<K>::constant(f.nvars, one_like(proto));
        try_candidate(v);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    while (!out.found && out.tried < budget) {
        std::vector<Poly<K>> v(rep.dim, p_zero);
        for (int i = 0; i < rep.dim; ++i) {
            Poly<K> p(f.nvars, proto);
            Mono c0(f.nvars, 0);
            long c = coeff(rng);
            if (c != 0) {
                K val = scalar_from_decimal(proto, std::to_string(std::abs(c)));
                p.add_term(c0, c < 0 ? -val : val);
            }
            for (int var : f.acting) {
                long cv = coeff(rng);
                if (cv == 0)
                    continue;
                Mono m(f.nvars, 0);
                m[var] = 1;
                K val = scalar_from_decimal(proto, std::to_string(std::abs(cv)));
                p.add_term(m, cv < 0 ? -val : val);
            }
            v[i] = std::move(p);
        }
        try_candidate(v);
    }
    return out;
}

}  // namespace permrep
