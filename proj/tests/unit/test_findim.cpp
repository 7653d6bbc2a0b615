#include <doctest.h>

#include "permrep/findim.hpp"
#include "permrep/parse.hpp"

using namespace permrep;

namespace {

// Variables: X block = x1..xr, Y block = x{r+1}..x{2r}.
Matrix<QFunc> phi_of(const std::vector<std::vector<std::string>>& rows, int r)
{
    auto names = standard_var_names(2 * r);
    Matrix<QFunc> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                    QFunc(2 * r, Rat()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = parse_ratfunc(rows[i][j], names, Rat());
    return m;
}

}  // namespace

TEST_CASE("identity cocycle trivializes to the identity")
{
    auto phi = phi_of({{"1", "0"}, {"0", "1"}}, 2);
    auto res = trivialize_findim(phi, 2);
    CHECK(res.cocycle_ok);
    REQUIRE(res.found_point);
    CHECK(res.verified);
    CHECK(*res.c == Matrix<QFunc>::identity(2, QFunc::constant(4, Rat(1))));
}

TEST_CASE("rank one: Phi = P(X)/P(Y) with P the block sum")
{
    // P(X) = x1 + x2, P(Y) = x3 + x4; the box search must skip singular
    // points with P(Y0) = 0 such as (0,0) and (-1,1)
    auto phi = phi_of({{"(x1+x2)/(x3+x4)"}}, 2);
    auto res = trivialize_findim(phi, 2);
    CHECK(res.cocycle_ok);
    REQUIRE(res.found_point);
    CHECK(res.verified);
    CHECK(res.y0[0] + res.y0[1] != 0);
    // C(X) = P(X)/P(Y0) is proportional to the block sum
    auto names = standard_var_names(4);
    QFunc expected = parse_ratfunc("x1+x2", names, Rat());
    QFunc ratio = res.c->at(0, 0) / expected;
    CHECK(ratio.is_constant());
}

TEST_CASE("unipotent 2x2 block cocycle")
{
    auto phi = phi_of({{"1", "(x1+x2)-(x3+x4)"}, {"0", "1"}}, 2);
    auto res = trivialize_findim(phi, 2);
    CHECK(res.cocycle_ok);
    REQUIRE(res.found_point);
    CHECK(res.verified);
}

TEST_CASE("failing cocycle identities are reported, not trivialized")
{
    // an additive X+Y is not a multiplicative cocycle
    auto bad = phi_of({{"x1+x2"}}, 1);
    auto res = trivialize_findim(bad, 1);
    CHECK_FALSE(res.cocycle_ok);
    CHECK_FALSE(res.verified);

    auto bad2 = phi_of({{"1", "x1"}, {"0", "1"}}, 1);  // corner not antisymmetric in blocks
    auto res2 = trivialize_findim(bad2, 1);
    CHECK_FALSE(res2.cocycle_ok);
}

TEST_CASE("r = 1 one-dimensional multiplicative cocycle")
{
    auto phi = phi_of({{"x1/x2"}}, 1);
    auto res = trivialize_findim(phi, 1);
    CHECK(res.cocycle_ok);
    REQUIRE(res.found_point);
    CHECK(res.verified);
    CHECK(res.y0[0] != 0);
}
