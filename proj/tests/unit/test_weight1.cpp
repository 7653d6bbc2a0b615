#include <doctest.h>

#include "permrep/parse.hpp"
#include "permrep/weight1.hpp"

using namespace permrep;

namespace {

QFunc q_of(const std::string& text, int nvars)
{
    return parse_ratfunc(text, standard_var_names(nvars), Rat());
}

QFunc q_xy(const std::string& text)
{
    return parse_ratfunc(text, {"X", "Y"}, Rat());
}

WeightedElement alpha_of(const std::vector<std::pair<std::string, int>>& terms, int ambient)
{
    WeightedElement w{1, {}};
    for (const auto& [coef, var_1based] : terms)
        w.terms.emplace_back(q_of(coef, ambient), std::vector<int>{var_1based - 1});
    return normalize_weighted(std::move(w));
}

}  // namespace

TEST_CASE("generator test: constant witness")
{
    // [t1] - [t2] is annihilated by Q = 1
    auto alpha = alpha_of({{"1", 1}, {"-1", 2}}, 3);
    auto rep = generator_test_weight1(alpha, 3, 3, false);
    REQUIRE(rep.witness_found);
    CHECK(*rep.witness == q_of("1", 1));
}

TEST_CASE("generator test: rational witness 1/T")
{
    // t1 [t1] - t2 [t2] needs Q = 1/T
    auto alpha = alpha_of({{"x1", 1}, {"-x2", 2}}, 3);
    auto poly_only = generator_test_weight1(alpha, 3, 4, false);
    CHECK_FALSE(poly_only.witness_found);
    auto rep = generator_test_weight1(alpha, 3, 4, true);
    REQUIRE(rep.witness_found);
    auto names = std::vector<std::string>{"T"};
    CHECK(*rep.witness == parse_ratfunc<Rat>("1/T", names, Rat()));
}

TEST_CASE("generator test: a generator has no witness")
{
    // [t1] + t1 [t2] forces Q = 0, so no witness exists at any bound
    auto alpha = alpha_of({{"1", 1}, {"x1", 2}}, 3);
    for (int d : {2, 4, 6}) {
        auto rep = generator_test_weight1(alpha, 3, d, true);
        CHECK_FALSE(rep.witness_found);
    }
}

TEST_CASE("generator test verdict is relabeling invariant")
{
    auto alpha = alpha_of({{"x1", 1}, {"-x2", 2}}, 4);
    // relabel via the 3-cycle x1 -> x2 -> x3 -> x1
    std::vector<int> sigma{1, 2, 0, 3};
    WeightedElement moved{1, {}};
    for (const auto& [c, sub] : alpha.terms)
        moved.terms.emplace_back(permute_vars(c, sigma), std::vector<int>{sigma[sub[0]]});
    moved = normalize_weighted(std::move(moved));
    auto a = generator_test_weight1(alpha, 4, 3, true);
    auto b = generator_test_weight1(moved, 4, 3, true);
    CHECK(a.witness_found == b.witness_found);

    auto gen = alpha_of({{"1", 1}, {"x1", 2}}, 4);
    WeightedElement gen_moved{1, {}};
    for (const auto& [c, sub] : gen.terms)
        gen_moved.terms.emplace_back(permute_vars(c, sigma), std::vector<int>{sigma[sub[0]]});
    gen_moved = normalize_weighted(std::move(gen_moved));
    CHECK(generator_test_weight1(gen, 4, 3, true).witness_found ==
          generator_test_weight1(gen_moved, 4, 3, true).witness_found);
}

TEST_CASE("q2 surjectivity examples")
{
    // q = X - Y: D vanishes, witness S = 1
    auto r1 = q2_surjectivity(q_xy("X-Y"));
    CHECK_FALSE(r1.surjective);
    CHECK(r1.d_zero);
    REQUIRE(r1.witness_found);
    CHECK(*r1.witness == parse_ratfunc<Rat>("1", {std::string("T")}, Rat()));
    CHECK(r1.truncation_corank == 1);
    CHECK(r1.consistent);

    // q = 1: D = 2, surjective
    auto r2 = q2_surjectivity(q_xy("1"));
    CHECK(r2.surjective);
    CHECK(r2.d_str == "2");
    CHECK(r2.truncation_corank == 0);
    CHECK_FALSE(r2.witness_found);
    CHECK(r2.consistent);

    // q = (X - Y) Y: witness S(T) = T
    auto r3 = q2_surjectivity(q_xy("(X-Y)*Y"));
    CHECK_FALSE(r3.surjective);
    REQUIRE(r3.witness_found);
    CHECK(*r3.witness == parse_ratfunc<Rat>("T", {std::string("T")}, Rat()));
    CHECK(r3.truncation_corank == 1);
    CHECK(r3.consistent);

    CHECK_THROWS_AS(q2_surjectivity(QFunc(2, Rat())), Error);
}

TEST_CASE("q2 with a rational witness S = 1/T")
{
    // q = X (X - Y): condition (4) forces a S(a) = b S(b), so S = 1/T
    auto r = q2_surjectivity(q_xy("X*(X-Y)"));
    CHECK_FALSE(r.surjective);
    CHECK(r.truncation_corank == 1);
    REQUIRE(r.witness_found);
    auto names = std::vector<std::string>{"T"};
    CHECK(*r.witness == parse_ratfunc<Rat>("1/T", names, Rat()));
    CHECK(r.consistent);
}

TEST_CASE("q2 corpus: products P(X) S(Y) (X-Y)^e R for symmetric R")
{
    std::vector<std::string> ps{"1", "X"};
    std::vector<std::string> ss{"1", "(Y+1)"};
    std::vector<std::string> rs{"1", "(X+Y)", "(X*Y)", "(X^2+Y^2)"};
    int checked = 0;
    for (const auto& p : ps) {
        for (const auto& s : ss) {
            for (int e = 0; e <= 1; ++e) {
                for (const auto& r : rs) {
                    std::string txt = p + "*" + s + "*" + r +
                                      (e ? "*(X-Y)" : "");
                    auto rep = q2_surjectivity(q_xy(txt), 4);
                    CHECK(rep.consistent);
                    CHECK(rep.surjective == (e == 0));
                    CHECK(rep.witness_found == (e == 1));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked == 32);
}
