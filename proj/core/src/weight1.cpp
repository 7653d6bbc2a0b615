#include "permrep/weight1.hpp"

#include <algorithm>

#include "permrep/matrix.hpp"
#include "permrep/parse.hpp"

namespace permrep {

namespace {

const std::vector<std::string> kTName{"T"};

// Candidate denominators prod (T - beta)^e with e <= 2 over a small pool.
std::vector<QFunc> denominator_pool()
{
    std::vector<long> betas{0, 1, -1, 2, -2};
    std::vector<QFunc> out;
    auto lin = [&](long b) {
        Poly<Rat> p(1, Rat());
        Mono t(1, 0);
        t[0] = 1;
        p.add_term(t, Rat(1));
        p.add_term(Mono(1, 0), Rat(-b));
        return QFunc(std::move(p));
    };
    for (long b : betas)
        out.push_back(lin(b));
    for (long b : betas)
        out.push_back(lin(b) * lin(b));
    for (size_t i = 0; i < betas.size(); ++i)
        for (size_t j = i + 1; j < betas.size(); ++j)
            out.push_back(lin(betas[i]) * lin(betas[j]));
    return out;
}

// Evaluates a univariate polynomial at the ambient variable x_var.
Poly<Rat> eval_poly_at_var(const Poly<Rat>& p, int var, int ambient)
{
    Poly<Rat> out(ambient, Rat());
    for (const auto& [mono, c] : p.terms()) {
        Mono m(ambient, 0);
        m[var] = mono[0];
        out.add_term(m, c);
    }
    return out;
}

QFunc eval_ratfunc_at_var(const QFunc& f, int var, int ambient)
{
    return QFunc(eval_poly_at_var(f.num(), var, ambient),
                 eval_poly_at_var(f.den(), var, ambient));
}

// Kernel vector of the k-linear system sum_i a_i * basis_i = 0, where each
// basis_i is an ambient polynomial; returns the first kernel vector, if any.
std::optional<std::vector<Rat>> solve_combination(const std::vector<Poly<Rat>>& basis)
{
    std::map<Mono, int, GrlexLess> row_of;
    for (const auto& p : basis)
        for (const auto& [mono, c] : p.terms())
            row_of.emplace(mono, 0);
    int r = 0;
    for (auto& [mono, idx] : row_of)
        idx = r++;
    Matrix<Rat> m(r, static_cast<int>(basis.size()), Rat());
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        for (const auto& [mono, c] : basis[j].terms())
            m.at(row_of[mono], j) = c;
    auto ker = kernel_basis(m);
    if (ker.empty())
        return std::nullopt;
    return ker.front();
}

QFunc poly_from_coeffs(const std::vector<Rat>& a)
{
    Poly<Rat> p(1, Rat());
    for (size_t i = 0; i < a.size(); ++i) {
        Mono m(1, 0);
        m[0] = static_cast<uint32_t>(i);
        p.add_term(m, a[i]);
    }
    return QFunc(std::move(p));
}

bool verify_weight1_witness(const WeightedElement& alpha, int ambient, const QFunc& w)
{
    QFunc acc(ambient, Rat());
    for (const auto& [c, sub] : alpha.terms)
        acc += c * eval_ratfunc_at_var(w, sub[0], ambient);
    return acc.is_zero();
}

}  // namespace

GenTestReport generator_test_weight1(const WeightedElement& alpha, int ambient,
                                     int deg_bound, bool rational_mode)
{
    require(alpha.level == 1, "generator test takes a weight-1 element");
    require(!alpha.terms.empty(), "alpha must be nonzero");
    GenTestReport rep;
    rep.degree_bound = deg_bound;
    rep.rational_mode = rational_mode;

    std::vector<QFunc> denoms{QFunc::constant(1, Rat(1))};
    if (rational_mode) {
        auto pool = denominator_pool();
        denoms.insert(denoms.end(), pool.begin(), pool.end());
    }

    for (const auto& w_den : denoms) {
        // clear all coefficient denominators and the fixed witness denominator:
        // sum_t q_t U(x_t) prod_{s != t} W(x_s) = 0, linear in U's coefficients
        Poly<Rat> common(ambient, Rat());
        common.add_term(Mono(ambient, 0), Rat(1));
        for (const auto& [c, sub] : alpha.terms)
            common *= c.den();
        std::vector<Poly<Rat>> basis;
        for (int i = 0; i <= deg_bound; ++i) {
            Poly<Rat> bi(ambient, Rat());
            for (const auto& [c, sub] : alpha.terms) {
                int var = sub[0];
                Poly<Rat> term = c.num() * div_exact(common, c.den());
                Mono pw(ambient, 0);
                pw[var] = static_cast<uint32_t>(i);
                Poly<Rat> x_pow(ambient, Rat());
                x_pow.add_term(pw, Rat(1));
                term *= x_pow;
                for (const auto& [c2, sub2] : alpha.terms) {
                    if (sub2 == sub)
                        continue;
                    term *= eval_poly_at_var(w_den.num(), sub2[0], ambient);
                }
                bi += term;
            }
            basis.push_back(std::move(bi));
        }
        auto sol = solve_combination(basis);
        if (!sol)
            continue;
        QFunc u = poly_from_coeffs(*sol);
        if (u.is_zero())
            continue;
        QFunc witness = u / w_den;
        if (witness.is_zero())
            continue;
        require(verify_weight1_witness(alpha, ambient, witness),
                "internal error: witness failed exact re-verification");
        rep.witness_found = true;
        rep.witness_str = witness.str(kTName);
        rep.witness = std::move(witness);
        return rep;
    }
    return rep;
}

namespace {

// q(X,Y) lifted into k(x1..ambient) at the variable pair (a, b).
QFunc q_at(const QFunc& q, int a, int b, int ambient)
{
    QFunc lifted = lift_vars(q, ambient);
    std::vector<std::optional<QFunc::SubstTarget>> assign(ambient);
    assign[0] = QFunc::SubstTarget(a);
    assign[1] = QFunc::SubstTarget(b);
    return lifted.substituted(assign);
}

}  // namespace

Q2Report q2_surjectivity(const QFunc& q, int witness_deg_bound)
{
    require(q.nvars() == 2, "q must be a rational function of two variables X, Y");
    require(!q.is_zero(), "q must be nonzero");
    Q2Report rep;

    // determinant test in three fresh variables
    QFunc q01 = q_at(q, 0, 1, 3), q12 = q_at(q, 1, 2, 3), q20 = q_at(q, 2, 0, 3);
    QFunc q10 = q_at(q, 1, 0, 3), q21 = q_at(q, 2, 1, 3), q02 = q_at(q, 0, 2, 3);
    QFunc d = q01 * q12 * q20 + q10 * q21 * q02;
    rep.d_zero = d.is_zero();
    rep.surjective = !rep.d_zero;
    rep.d_str = d.str({"a0", "a1", "a2"});

    // bounded witness search for q(a,b)S(a) + q(b,a)S(b) = 0
    {
        std::vector<QFunc> denoms{QFunc::constant(1, Rat(1))};
        auto pool = denominator_pool();
        denoms.insert(denoms.end(), pool.begin(), pool.end());
        Poly<Rat> nq = q.num(), dq = q.den();
        Poly<Rat> nq_swap = nq.permuted({1, 0}), dq_swap = dq.permuted({1, 0});
        Poly<Rat> a_side = nq * dq_swap;       // q(a,b) with denominators cleared
        Poly<Rat> b_side = nq_swap * dq;       // q(b,a) likewise
        for (const auto& w_den : denoms) {
            std::vector<Poly<Rat>> basis;
            for (int i = 0; i <= witness_deg_bound; ++i) {
                Mono pa(2, 0), pb(2, 0);
                pa[0] = static_cast<uint32_t>(i);
                pb[1] = static_cast<uint32_t>(i);
                Poly<Rat> xa(2, Rat()), xb(2, Rat());
                xa.add_term(pa, Rat(1));
                xb.add_term(pb, Rat(1));
                basis.push_back(a_side * xa * eval_poly_at_var(w_den.num(), 1, 2) +
                                b_side * xb * eval_poly_at_var(w_den.num(), 0, 2));
            }
            auto sol = solve_combination(basis);
            if (!sol)
                continue;
            QFunc u = poly_from_coeffs(*sol);
            if (u.is_zero())
                continue;
            QFunc witness = u / w_den;
            // exact re-verification of condition (4)
            QFunc qa = q_at(q, 0, 1, 2), qb = q_at(q, 1, 0, 2);
            QFunc sa = eval_ratfunc_at_var(witness, 0, 2);
            QFunc sb = eval_ratfunc_at_var(witness, 1, 2);
            if ((qa * sa + qb * sb).is_zero()) {
                rep.witness_found = true;
                rep.witness_str = witness.str(kTName);
                rep.witness = std::move(witness);
                break;
            }
        }
    }

    // truncated-rank oracle at n = 4: [{a,b}] -> q(a,b)[a] + q(b,a)[b]
    {
        const int n = 4;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pairs.emplace_back(a, b);
        Matrix<QFunc> m(n, static_cast<int>(pairs.size()), QFunc(n, Rat()));
        for (int col = 0; col < static_cast<int>(pairs.size()); ++col) {
            auto [a, b] = pairs[col];
            m.at(a, col) = q_at(q, a, b, n);
            m.at(b, col) = q_at(q, b, a, n);
        }
        rep.truncation_corank = n - rank_generic(m);
    }

    rep.consistent = (rep.d_zero == (rep.truncation_corank == 1)) &&
                     (!rep.d_zero || rep.truncation_corank == 1) &&
                     (!rep.witness_found || rep.d_zero) &&
                     (rep.truncation_corank == 0 || rep.truncation_corank == 1);
    return rep;
}

}  // namespace permrep
