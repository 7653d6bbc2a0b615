#include <doctest.h>

#include <random>

#include "permrep/fp.hpp"
#include "permrep/parse.hpp"
#include "permrep/rat.hpp"
#include "permrep/ratfunc.hpp"

using namespace permrep;

namespace {

using QF = RatFunc<Rat>;
using FpF = RatFunc<Fp>;

QF q_of(const std::string& text, int nvars)
{
    return parse_ratfunc(text, standard_var_names(nvars), Rat());
}

// Independent oracle: evaluate a rational function at a scalar point.
// Equality of canonical forms must agree with equality of values.
Rat eval_at(const QF& f, const std::vector<Rat>& pt)
{
    std::vector<std::optional<QF::SubstTarget>> assign(f.nvars());
    for (int i = 0; i < f.nvars(); ++i)
        assign[i] = QF::SubstTarget(pt[i]);
    QF v = f.substituted(assign);
    return v.constant_value();
}

void check_same_values(const QF& a, const QF& b, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(2, 40);
    int done = 0;
    while (done < 8) {
        std::vector<Rat> pt;
        for (int i = 0; i < a.nvars(); ++i)
            pt.push_back(Rat(d(rng)));
        try {
            Rat va = eval_at(a, pt);
            Rat vb = eval_at(b, pt);
            CHECK(va == vb);
            ++done;
        } catch (const PoleError&) {
            // unlucky point, resample
        }
    }
}

template <class K>
Poly<K> random_poly(int nvars, const K& proto, std::mt19937& rng,
                    const std::vector<K>& coeff_pool)
{
    std::uniform_int_distribution<int> nterms(0, 4), expd(0, 2),
        cid(0, static_cast<int>(coeff_pool.size()) - 1);
    Poly<K> p(nvars, proto);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Mono m(nvars);
        for (int i = 0; i < nvars; ++i)
            m[i] = static_cast<uint32_t>(expd(rng));
        p.add_term(m, coeff_pool[cid(rng)]);
    }
    return p;
}

template <class K>
RatFunc<K> random_ratfunc(int nvars, const K& proto, std::mt19937& rng,
                          const std::vector<K>& pool)
{
    Poly<K> num = random_poly(nvars, proto, rng, pool);
    Poly<K> den(nvars, proto);
    while (den.is_zero())
        den = random_poly(nvars, proto, rng, pool);
    return RatFunc<K>(num, den);
}

template <class F>
void check_field_axioms(const F& a, const F& b, const F& c)
{
    F zero = zero_like(a), one = one_like(a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == zero);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    if (!is_zero(a)) {
        CHECK(a * inv_of(a) == one);
        CHECK(inv_of(a) == one / a);
    }
}

}  // namespace

TEST_CASE("rational arithmetic examples")
{
    QF x1_over_x2 = q_of("x1/x2", 2);
    QF x2_over_x1 = q_of("x2/x1", 2);
    CHECK(x1_over_x2 * x2_over_x1 == q_of("1", 2));

    // canonicalization cancels the common factor
    QF f(q_of("x1^2-x2^2", 2).num(), q_of("x1-x2", 2).num());
    CHECK(f == q_of("x1+x2", 2));
    std::mt19937 rng(1);
    check_same_values(f, q_of("x1+x2", 2), rng);

    QF zero(2, Rat());
    CHECK(zero + x1_over_x2 == x1_over_x2);
}

TEST_CASE("rational arithmetic errors")
{
    QF a = q_of("x1", 2);
    QF zero(2, Rat());
    CHECK_THROWS_AS(a / zero, Error);
    CHECK_THROWS_AS(q_of("1/0", 2), Error);
    CHECK_THROWS_AS(q_of("1/(x1-x1)", 2), Error);
    // mixed variable universes
    QF b = q_of("x1", 3);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("permute_vars examples")
{
    QF f = q_of("x1/(x1-x2)", 2);
    QF g = permute_vars(f, {1, 0});  // swap x1, x2
    CHECK(g == q_of("-x2/(x1-x2)", 2));
    CHECK(permute_vars(f, {0, 1}) == f);

    QF h = q_of("(x1+2*x2)/(x3^2-x1)", 3);
    std::vector<int> cycle{1, 2, 0};  // x1->x2->x3->x1
    QF h3 = permute_vars(permute_vars(permute_vars(h, cycle), cycle), cycle);
    CHECK(h3 == h);

    CHECK_THROWS_AS(permute_vars(f, {0, 0}), Error);
    CHECK_THROWS_AS(permute_vars(f, {1, 2}), Error);
}

TEST_CASE("permute_vars is a field automorphism and composes correctly")
{
    std::mt19937 rng(7);
    std::vector<Rat> pool{Rat(-3), Rat(-1), Rat(1), Rat(2), Rat(5), Rat(0)};
    std::vector<int> sigma{2, 0, 1}, tau{1, 2, 0};
    for (int rep = 0; rep < 20; ++rep) {
        QF f = random_ratfunc(3, Rat(), rng, pool);
        QF g = random_ratfunc(3, Rat(), rng, pool);
        CHECK(permute_vars(f + g, sigma) == permute_vars(f, sigma) + permute_vars(g, sigma));
        CHECK(permute_vars(f * g, sigma) == permute_vars(f, sigma) * permute_vars(g, sigma));
        // (sigma tau)-action = sigma-action of tau-action
        std::vector<int> st(3);
        for (int i = 0; i < 3; ++i)
            st[i] = sigma[tau[i]];
        CHECK(permute_vars(f, st) == permute_vars(permute_vars(f, tau), sigma));
    }
}

TEST_CASE("substitute examples")
{
    QF f(q_of("x1^2-x2^2", 2).num(), q_of("x1-x2", 2).num());
    std::vector<std::optional<QF::SubstTarget>> a1(2);
    a1[1] = QF::SubstTarget(Rat(1));
    CHECK(f.substituted(a1) == q_of("x1+1", 2));

    QF g = q_of("x1/x2", 2);
    std::vector<std::optional<QF::SubstTarget>> a2(2);
    a2[0] = QF::SubstTarget(Rat(2));
    a2[1] = QF::SubstTarget(Rat(3));
    CHECK(g.substituted(a2).constant_value() == Rat(2, 3));

    QF h = q_of("1/(x1-x2)", 2);
    std::vector<std::optional<QF::SubstTarget>> a3(2);
    a3[0] = QF::SubstTarget(1);  // x1 := x2
    CHECK_THROWS_AS(h.substituted(a3, standard_var_names(2)), PoleError);
    try {
        h.substituted(a3, standard_var_names(2));
    } catch (const PoleError& e) {
        CHECK(e.vanishing_factor == "x1 - x2");
    }
}

TEST_CASE("field axioms on randomized triples in all field kinds")
{
    std::mt19937 rng(42);

    // rationals
    std::uniform_int_distribution<long> d(-20, 20);
    for (int rep = 0; rep < 50; ++rep) {
        Rat a(d(rng), 1 + std::abs(d(rng)));
        Rat b(d(rng), 1 + std::abs(d(rng)));
        Rat c(d(rng), 1 + std::abs(d(rng)));
        check_field_axioms(a, b, c);
    }

    // prime field
    for (int rep = 0; rep < 50; ++rep) {
        Fp a(7, d(rng)), b(7, d(rng)), c(7, d(rng));
        check_field_axioms(a, b, c);
    }

    // rational function fields over both
    std::vector<Rat> pool{Rat(-2), Rat(-1), Rat(1), Rat(3)};
    for (int rep = 0; rep < 10; ++rep) {
        QF a = random_ratfunc(2, Rat(), rng, pool);
        QF b = random_ratfunc(2, Rat(), rng, pool);
        QF c = random_ratfunc(2, Rat(), rng, pool);
        check_field_axioms(a, b, c);
    }
    std::vector<Fp> fpool{Fp(5, 1), Fp(5, 2), Fp(5, 3), Fp(5, 4)};
    for (int rep = 0; rep < 10; ++rep) {
        FpF a = random_ratfunc(2, Fp(5, 0), rng, fpool);
        FpF b = random_ratfunc(2, Fp(5, 0), rng, fpool);
        FpF c = random_ratfunc(2, Fp(5, 0), rng, fpool);
        check_field_axioms(a, b, c);
    }
}

TEST_CASE("canonical form is idempotent and value-faithful")
{
    std::mt19937 rng(11);
    std::vector<Rat> pool{Rat(-2), Rat(-1), Rat(1), Rat(2), Rat(3)};
    for (int rep = 0; rep < 30; ++rep) {
        QF f = random_ratfunc(2, Rat(), rng, pool);
        QF again(f.num(), f.den());
        CHECK(again == f);
        // multiply numerator and denominator by a common junk factor
        Poly<Rat> junk(2, Rat());
        while (junk.is_zero())
            junk = random_poly(2, Rat(), rng, pool);
        QF inflated(f.num() * junk, f.den() * junk);
        CHECK(inflated == f);
    }
}

TEST_CASE("polynomial gcd")
{
    auto P = [](const std::string& s) { return q_of(s, 2).num(); };
    CHECK(poly_gcd(P("x1^2-x2^2"), P("x1-x2")) == P("x1-x2"));
    CHECK(poly_gcd(P("x1"), P("x2")) == P("1"));
    CHECK(poly_gcd(P("0"), P("2*x1")) == P("x1"));  // monic normalization

    std::mt19937 rng(3);
    std::vector<Rat> pool{Rat(-2), Rat(-1), Rat(1), Rat(2)};
    for (int rep = 0; rep < 15; ++rep) {
        Poly<Rat> f = random_poly(3, Rat(), rng, pool);
        Poly<Rat> g = random_poly(3, Rat(), rng, pool);
        Poly<Rat> h = random_poly(3, Rat(), rng, pool);
        if (h.is_zero())
            continue;
        Poly<Rat> d = poly_gcd(f * h, g * h);
        if (f.is_zero() && g.is_zero())
            continue;
        // h divides gcd(fh, gh)
        CHECK_NOTHROW(div_exact(d, poly_gcd(d, h)));
        CHECK(poly_gcd(d, h) == h.scaled(inv_of(h.leading_coeff())));
    }
}

TEST_CASE("parser round trip and errors")
{
    std::mt19937 rng(5);
    std::vector<Rat> pool{Rat(-5), Rat(-1, 2), Rat(1), Rat(7, 3)};
    auto names = standard_var_names(3);
    for (int rep = 0; rep < 25; ++rep) {
        QF f = random_ratfunc(3, Rat(), rng, pool);
        CHECK(parse_ratfunc(f.str(names), names, Rat()) == f);
    }
    CHECK(q_of("  x1 +2* x2^2 ", 2) == q_of("x1+2*x2^2", 2));
    CHECK(q_of("-x1^2", 1) == -q_of("x1^2", 1));
    CHECK(q_of("(x1+1)/(x1-1)/(x1+2)", 1) == q_of("(x1+1)/((x1-1)*(x1+2))", 1));
    CHECK_THROWS_AS(q_of("y1+1", 2), Error);
    CHECK_THROWS_AS(q_of("x1^(2)", 2), Error);
    CHECK_THROWS_AS(q_of("x1+", 2), Error);
    CHECK_THROWS_AS(q_of("x1 x2", 2), Error);
}

TEST_CASE("prime field basics")
{
    Fp a(7, 10);
    CHECK(a.value() == 3);
    CHECK((a * a.inv()).value() == 1);
    CHECK_THROWS_AS(Fp(7, 0).inv(), Error);
    CHECK_THROWS_AS(Fp(7, 1) + Fp(5, 1), Error);
    // parser over F_5
    auto f = parse_ratfunc<Fp>("3*x1+7", standard_var_names(1), Fp(5, 0));
    CHECK(f == parse_ratfunc<Fp>("3*x1+2", standard_var_names(1), Fp(5, 0)));
}
