#include <doctest.h>

#include "permrep/permmod.hpp"

using namespace permrep;

namespace {

Subobject set_sub(std::initializer_list<int> pts_1based)
{
    std::vector<int> pts;
    for (int p : pts_1based)
        pts.push_back(p - 1);
    return make_set_subobject(std::move(pts));
}

}  // namespace

TEST_CASE("boundary maps")
{
    ModelCache s3(FiniteModel::set(3));
    EquivariantMap d1 = boundary(s3, 1);
    CHECK(d1.mat.rows() == 1);
    CHECK(d1.mat.cols() == 3);
    CHECK(rank(d1.mat) == 1);
    CHECK(is_equivariant(s3, d1));

    ModelCache s5(FiniteModel::set(5));
    EquivariantMap d2 = boundary(s5, 2);
    CHECK(d2.mat.rows() == 5);
    CHECK(d2.mat.cols() == 10);
    CHECK(rank(d2.mat) == 5);
    CHECK(is_equivariant(s5, d2));

    ModelCache v24(FiniteModel::vec(2, 4, 0));
    EquivariantMap dv = boundary(v24, 2);
    CHECK(dv.mat.rows() == 15);
    CHECK(dv.mat.cols() == 35);
    CHECK(rank(dv.mat) == 15);
    CHECK(is_equivariant(v24, dv));

    CHECK_THROWS_AS(boundary(s3, 0), Error);
}

TEST_CASE("boundary surjectivity threshold")
{
    // rank(d_{s+1}) = dim(level s) exactly when n > 2s
    for (int n = 2; n <= 6; ++n) {
        ModelCache c(FiniteModel::set(n));
        for (int s = 0; s + 1 <= n; ++s) {
            EquivariantMap d = boundary(c, s + 1);
            bool surjective = rank(d.mat) == c.dim(s);
            CHECK(surjective == (n > 2 * s));
        }
    }
}

TEST_CASE("hom spaces")
{
    ModelCache s5(FiniteModel::set(5));
    auto h12 = hom_basis(s5, 1, 2);
    CHECK(h12.size() == 2);  // orbits of stab({1}) on 2-sets: containing 1 / avoiding 1
    for (const auto& f : h12)
        CHECK(is_equivariant(s5, f));

    ModelCache s4(FiniteModel::set(4));
    CHECK(hom_basis(s4, 2, 2).size() == 3);
    CHECK(hom_basis(s4, 0, 0).size() == 1);

    // hom-basis maps are linearly independent
    auto maps = hom_basis(s5, 2, 2);
    Matrix<Rat> flat(s5.dim(2) * s5.dim(2), static_cast<int>(maps.size()), Rat());
    for (int k = 0; k < static_cast<int>(maps.size()); ++k)
        for (int i = 0; i < s5.dim(2); ++i)
            for (int j = 0; j < s5.dim(2); ++j)
                flat.at(i * s5.dim(2) + j, k) = maps[k].mat.at(i, j);
    CHECK(rank(flat) == static_cast<int>(maps.size()));
}

TEST_CASE("length via commutative endomorphism algebra")
{
    ModelCache s4(FiniteModel::set(4));
    auto l = length_multiplicity_free(s4, 2);
    CHECK(l.certified);
    CHECK(l.length == 3);

    ModelCache s8(FiniteModel::set(8));
    auto l8 = length_multiplicity_free(s8, 3);
    CHECK(l8.certified);
    CHECK(l8.length == 4);

    ModelCache v24(FiniteModel::vec(2, 4, 0));
    auto lv = length_multiplicity_free(v24, 2);
    CHECK(lv.certified);
    CHECK(lv.length == 3);
}

TEST_CASE("socle dimensions")
{
    ModelCache s5(FiniteModel::set(5));
    auto soc = socle_V_T(s5, 2);
    CHECK(soc.stable);
    CHECK(soc.basis.cols() == 5);  // 10 - rank 5; also the Specht dimension of (3,2)
    CHECK(hook_dimension(Partition{3, 2}) == 5);
    // every equivariant map to the lower level kills the socle
    for (const auto& f : hom_basis(s5, 2, 1))
        CHECK((f.mat * soc.basis).is_zero());

    auto soc0 = socle_V_T(s5, 0);
    CHECK(soc0.basis.cols() == 1);

    ModelCache s6(FiniteModel::set(6));
    auto soc3 = socle_V_T(s6, 3);
    CHECK(soc3.basis.cols() == 20 - 15);
    CHECK(hook_dimension(Partition{3, 3}) == 5);

    auto below = socle_V_T(ModelCache(FiniteModel::set(3)), 2);
    CHECK_FALSE(below.stable);
    CHECK(below.basis.cols() == 3 - rank(boundary(ModelCache(FiniteModel::set(3)), 2).mat));
}

TEST_CASE("isotypic decomposition")
{
    ModelCache s4(FiniteModel::set(4));
    Matrix<Rat> full = Matrix<Rat>::identity(s4.dim(2), Rat(1));
    auto parts = isotypic_decompose(s4, 2, full, 4);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].lambda == Partition{4});
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].lambda == Partition{3, 1});
    CHECK(parts[1].multiplicity == 1);
    CHECK(parts[2].lambda == Partition{2, 2});
    CHECK(parts[2].multiplicity == 1);

    // trivial module: level 0
    ModelCache s5(FiniteModel::set(5));
    auto triv = isotypic_decompose(s5, 0, Matrix<Rat>::identity(1, Rat(1)), 5);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].lambda == Partition{5});
    CHECK(triv[0].dimension == 1);

    // socle of level 2 at n = 5 is the single Specht piece (3,2)
    auto soc = socle_V_T(s5, 2);
    auto sparts = isotypic_decompose(s5, 2, soc.basis, 5);
    REQUIRE(sparts.size() == 1);
    CHECK(sparts[0].lambda == Partition{3, 2});
    CHECK(sparts[0].multiplicity == 1);
    CHECK(sparts[0].dimension == 5);

    CHECK_THROWS_AS(isotypic_decompose(ModelCache(FiniteModel::vec(2, 3, 0)), 1,
                                       Matrix<Rat>::identity(7, Rat(1)), 3),
                    Error);
}

TEST_CASE("coinduction counting")
{
    ModelCache s5(FiniteModel::set(5));
    auto rep = coinduction_count_check(s5, set_sub({1, 2}), set_sub({3}));
    CHECK(rep.stable);
    CHECK(rep.lhs == 3);
    CHECK(rep.rhs_total == 3);
    CHECK(rep.equal);
    REQUIRE(rep.per_lambda.size() == 4);  // {}, {1}, {2}, {1,2}
    CHECK(rep.per_lambda[0].second == 1);
    CHECK(rep.per_lambda[3].second == 0);

    auto tr = coinduction_count_check(s5, make_set_subobject({}), set_sub({2, 4}));
    CHECK(tr.lhs == 1);
    CHECK(tr.rhs_total == 1);

    ModelCache s4(FiniteModel::set(4));
    auto same = coinduction_count_check(s4, set_sub({1}), set_sub({1}));
    CHECK(same.lhs == 2);
    CHECK(same.rhs_total == 2);
    CHECK(same.equal);
}

TEST_CASE("restriction decomposition")
{
    ModelCache s5(FiniteModel::set(5));
    auto blocks = restriction_decompose(s5, 2, set_sub({1}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].lambda.length() == 0);
    CHECK(blocks[0].basis_indices.size() == 6);
    CHECK(blocks[1].lambda == set_sub({1}));
    CHECK(blocks[1].basis_indices.size() == 4);

    auto whole = restriction_decompose(s5, 2, make_set_subobject({}));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].basis_indices.size() == 10);

    ModelCache v23(FiniteModel::vec(2, 3, 0));
    auto line = subobjects(FiniteModel::vec(2, 3, 0), 1)[0];
    auto vblocks = restriction_decompose(v23, 1, line);
    REQUIRE(vblocks.size() == 2);
    CHECK(vblocks[0].basis_indices.size() == 6);
    CHECK(vblocks[1].basis_indices.size() == 1);

    // blocks are stable under generators of the pointwise stabilizer of J
    auto stab = s5.group().members(SubgroupSpec::pointwise(set_sub({1})));
    for (int g : s5.group().small_gens(stab)) {
        auto p = s5.basis_perm(g, 2);
        for (const auto& b : blocks) {
            for (int i : b.basis_indices) {
                bool found = std::find(b.basis_indices.begin(), b.basis_indices.end(),
                                       p[i]) != b.basis_indices.end();
                CHECK(found);
            }
        }
    }
}

TEST_CASE("growth profile")
{
    ModelCache s8(FiniteModel::set(8));
    Matrix<Rat> full = Matrix<Rat>::identity(s8.dim(2), Rat(1));
    auto rows = growth_profile(s8, 2, full, 0, 8);
    for (const auto& r : rows) {
        CHECK(r.d == binomial(r.N, 2));
        CHECK(r.within_bounds);
    }
    CHECK(rows[4].d == 6);
    CHECK(rows[4].bound_embed == 12);

    // kernel of the boundary at level 2
    EquivariantMap d2 = boundary(s8, 2);
    auto ker = kernel_basis(d2.mat);
    Matrix<Rat> kb(s8.dim(2), static_cast<int>(ker.size()), Rat());
    for (int j = 0; j < kb.cols(); ++j)
        for (int i = 0; i < kb.rows(); ++i)
            kb.at(i, j) = ker[j][i];
    auto krows = growth_profile(s8, 2, kb, 0, 8);
    CHECK(krows[4].d == 2);  // 6 - rank 4 of the boundary restricted to Psi_4
    for (const auto& r : krows)
        CHECK(r.within_bounds);
    CHECK(krows[0].d == 0);
    CHECK(krows[1].d == 0);  // N < level: nothing fits

    CHECK_THROWS_AS(growth_profile(s8, 2, full, 0, 9), Error);
}
