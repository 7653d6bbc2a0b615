#include <doctest.h>

#include <random>

#include "permrep/bisym.hpp"
#include "permrep/parse.hpp"

using namespace permrep;

namespace {

QFunc q_of(const std::string& text, int nvars)
{
    return parse_ratfunc(text, standard_var_names(nvars), Rat());
}

WeightedElement basis_elem(int level, std::vector<int> sub, int ambient)
{
    WeightedElement w{level, {}};
    w.terms.emplace_back(QFunc::constant(ambient, Rat(1)), std::move(sub));
    return normalize_weighted(std::move(w));
}

}  // namespace

TEST_CASE("bisymmetry validation")
{
    CHECK_NOTHROW(make_bisym(1, 2, q_of("x1", 2)));
    CHECK_NOTHROW(make_bisym(0, 2, q_of("x1*x2", 2)));
    CHECK_NOTHROW(make_bisym(1, 3, q_of("x1*(x2+x3)", 3)));
    CHECK_THROWS_AS(make_bisym(0, 2, q_of("x1", 2)), Error);
    CHECK_THROWS_AS(make_bisym(2, 3, q_of("x1+x3", 3)), Error);
}

TEST_CASE("hom_apply examples")
{
    // M = N = 1, Q = x1: [t] -> t [t]
    BiSym q1 = make_bisym(1, 1, q_of("x1", 1));
    auto w = basis_elem(1, {2}, 4);
    auto out = hom_apply(q1, w, 4);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].second == std::vector<int>{2});
    CHECK(out.terms[0].first == q_of("x3", 4));

    // M = 1, N = 2, Q = x1: [{a,b}] -> a[a] + b[b]
    BiSym q2 = make_bisym(1, 2, q_of("x1", 2));
    auto w2 = basis_elem(2, {0, 3}, 4);
    auto out2 = hom_apply(q2, w2, 4);
    REQUIRE(out2.terms.size() == 2);
    CHECK(out2.terms[0].second == std::vector<int>{0});
    CHECK(out2.terms[0].first == q_of("x1", 4));
    CHECK(out2.terms[1].second == std::vector<int>{3});
    CHECK(out2.terms[1].first == q_of("x4", 4));

    // M = 0, N = 2, Q = x1 x2: [{a,b}] -> ab [{}]
    BiSym q3 = make_bisym(0, 2, q_of("x1*x2", 2));
    auto out3 = hom_apply(q3, w2, 4);
    REQUIRE(out3.terms.size() == 1);
    CHECK(out3.terms[0].second.empty());
    CHECK(out3.terms[0].first == q_of("x1*x4", 4));

    // support beyond the truncation is an error
    CHECK_THROWS_AS(hom_apply(q2, basis_elem(2, {1, 5}, 4), 4), Error);
}

TEST_CASE("hom_apply commutes with the semilinear action")
{
    const int ambient = 5;
    BiSym q = make_bisym(1, 2, q_of("x1^2*x2 + x1", 2));
    std::mt19937 rng(3);
    std::vector<int> sigma{2, 0, 4, 1, 3};
    for (int rep = 0; rep < 10; ++rep) {
        WeightedElement w{2, {}};
        std::vector<std::string> coefs{"x1+1", "x2/x3", "2", "x5^2", "x4-x2"};
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
            if (a == b)
                continue;
            if (a > b)
                std::swap(a, b);
            w.terms.emplace_back(q_of(coefs[rng() % coefs.size()], ambient),
                                 std::vector<int>{a, b});
        }
        w = normalize_weighted(std::move(w));
        if (w.terms.empty())
            continue;
        auto lhs = hom_apply(q, act_on_weighted(w, sigma), ambient);
        auto rhs = act_on_weighted(hom_apply(q, w, ambient), sigma);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hom_compose examples and the apply-apply oracle")
{
    // identity on either side leaves the other factor unchanged
    BiSym r = make_bisym(1, 2, q_of("x1^2 + x2", 2));
    BiSym id_m = bisym_constant_one(1, 1);
    BiSym left = hom_compose(id_m, r);
    CHECK(left.f == r.f);
    BiSym id_n = bisym_constant_one(2, 2);
    BiSym right = hom_compose(r, id_n);
    CHECK(right.f == r.f);

    // N=2 -> M=1 -> L=0 with R = x1, Q = x1 gives x1^2 + x2^2
    BiSym rr = make_bisym(1, 2, q_of("x1", 2));
    BiSym qq = make_bisym(0, 1, q_of("x1", 1));
    BiSym comp = hom_compose(qq, rr);
    CHECK(comp.m == 0);
    CHECK(comp.n == 2);
    CHECK(comp.f == q_of("x1^2 + x2^2", 2));

    // agreement with hom_apply . hom_apply on all level-N basis elements
    const int ambient = 6;
    std::vector<BiSym> qs{make_bisym(1, 2, q_of("x1*x2", 2)),
                          make_bisym(1, 2, q_of("x1", 2)),
                          make_bisym(0, 1, q_of("x1^2", 1))};
    std::vector<BiSym> rs{make_bisym(2, 3, q_of("x1*x2*x3", 3)),
                          make_bisym(2, 3, q_of("(x1+x2)*x3", 3)),
                          make_bisym(1, 3, q_of("x1^2*x2*x3", 3))};
    for (const auto& rrr : rs) {
        for (const auto& qqq : qs) {
            if (qqq.n != rrr.m)
                continue;
            BiSym c = hom_compose(qqq, rrr);
            // every basis element of level N at truncation 6
            std::vector<int> t;
            auto rec = [&](auto&& self, int from) -> void {
                if (static_cast<int>(t.size()) == rrr.n) {
                    auto w = basis_elem(rrr.n, t, ambient);
                    auto direct = hom_apply(c, w, ambient);
                    auto chained = hom_apply(qqq, hom_apply(rrr, w, ambient), ambient);
                    CHECK(direct == chained);
                    return;
                }
                for (int i = from; i < ambient; ++i) {
                    t.push_back(i);
                    self(self, i + 1);
                    t.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
}

TEST_CASE("hom_compose is associative on monomial triples")
{
    std::mt19937 rng(9);
    auto monomial_bisym = [&](int m, int n) {
        // x1^a .. symmetric monomials: (x1..xm)^a * (x_{m+1}..xn)^b
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        Poly<Rat> p(n, Rat());
        Mono mono(n, 0);
        for (int i = 0; i < m; ++i)
            mono[i] = static_cast<uint32_t>(a);
        for (int i = m; i < n; ++i)
            mono[i] = static_cast<uint32_t>(b);
        p.add_term(mono, Rat(1));
        return make_bisym(m, n, QFunc(std::move(p)));
    };
    for (int rep = 0; rep < 20; ++rep) {
        int l = static_cast<int>(rng() % 2), m = l + static_cast<int>(rng() % 2);
        int n = m + static_cast<int>(rng() % 2), big = n + static_cast<int>(rng() % 2);
        BiSym s = monomial_bisym(n, big);   // big -> n
        BiSym r = monomial_bisym(m, n);     // n -> m
        BiSym q = monomial_bisym(l, m);     // m -> l
        BiSym left = hom_compose(hom_compose(q, r), s);
        BiSym right = hom_compose(q, hom_compose(r, s));
        CHECK(left.f == right.f);
    }
}
