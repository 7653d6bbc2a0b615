#include <doctest.h>

#include <set>

#include "permrep/group.hpp"
#include "permrep/model.hpp"

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

TEST_CASE("subobject enumeration counts")
{
    CHECK(subobjects(FiniteModel::set(4), 2).size() == 6);
    CHECK(subobjects(FiniteModel::vec(2, 2, 0), 1).size() == 3);
    // Gaussian binomial oracle: (2^4-1)(2^4-2)/((2^2-1)(2^2-2)) = 35
    CHECK((15 * 14) / (3 * 2) == 35);
    CHECK(subobjects(FiniteModel::vec(2, 4, 0), 2).size() == 35);

    for (int s = 0; s <= 4; ++s) {
        CHECK(static_cast<long long>(subobjects(FiniteModel::vec(2, 4, 0), s).size()) ==
              gaussian_binomial(4, s, 2));
        CHECK(static_cast<long long>(subobjects(FiniteModel::set(4), s).size()) ==
              binomial(4, s));
    }
    // q = 3 and q = 4 small cases
    CHECK(subobjects(FiniteModel::vec(3, 3, 0), 1).size() == 13);
    CHECK(subobjects(FiniteModel::vec(4, 2, 0), 1).size() == 5);
    // marked subspace: subspaces of F_2^3 of dim 2 containing e1
    CHECK(subobjects(FiniteModel::vec(2, 3, 1), 2).size() ==
          static_cast<size_t>(gaussian_binomial(2, 1, 2)));
    // all enumerated subobjects are distinct and canonical
    auto subs = subobjects(FiniteModel::vec(2, 4, 0), 2);
    std::set<Subobject> dedup(subs.begin(), subs.end());
    CHECK(dedup.size() == subs.size());
    CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("closure")
{
    auto c1 = closure(FiniteModel::set(6), std::vector<int>{0, 2});
    CHECK(c1.value == set_sub({1, 3}));
    CHECK(c1.stable);

    auto below = closure(FiniteModel::set(3), std::vector<int>{0, 2});
    CHECK_FALSE(below.stable);

    FiniteModel v230 = FiniteModel::vec(2, 3, 0);
    auto c2 = closure(v230, std::vector<std::vector<uint8_t>>{{1, 1, 0}});
    CHECK(c2.value.rows.size() == 1);
    CHECK(c2.value.rows[0] == std::vector<uint8_t>{1, 1, 0});

    FiniteModel v231 = FiniteModel::vec(2, 3, 1);
    auto c3 = closure(v231, std::vector<std::vector<uint8_t>>{{0, 1, 0}});
    GF gf(2);
    CHECK(c3.value.rows.size() == 2);  // contains the marked e1 as well
    CHECK(gf.in_span({1, 0, 0}, c3.value.rows));
    CHECK(gf.in_span({0, 1, 0}, c3.value.rows));

    // idempotent and monotone
    auto again = closure(v231, c3.value.rows);
    CHECK(again.value == c3.value);
    CHECK(subobject_contains(v231, c3.value, closure(v231, std::vector<std::vector<uint8_t>>{}).value));
}

TEST_CASE("intersection of closed subobjects is closed and monotone")
{
    FiniteModel m = FiniteModel::vec(2, 4, 0);
    auto planes = subobjects(m, 2);
    for (size_t i = 0; i < planes.size(); i += 7) {
        for (size_t j = 0; j < planes.size(); j += 5) {
            Subobject w = subobject_intersection(m, planes[i], planes[j]);
            CHECK(subobject_contains(m, planes[i], w));
            CHECK(subobject_contains(m, planes[j], w));
            // closed: re-closing the intersection changes nothing
            CHECK(closure(m, w.rows).value == w);
        }
    }
}

TEST_CASE("q_bracket and embedding counts")
{
    CHECK(q_bracket(FiniteModel::set(8), 5) == 5);
    CHECK(q_bracket(FiniteModel::vec(2, 4, 0), 3) == 8);
    CHECK(q_bracket(FiniteModel::set(8), 0) == 0);

    CHECK(embedding_count(FiniteModel::set(8), 2, 4) == 12);
    CHECK(embedding_count(FiniteModel::vec(2, 4, 0), 1, 2) == 3);
    CHECK(embedding_count(FiniteModel::set(8), 0, 5) == 1);
    CHECK(embedding_count(FiniteModel::vec(2, 4, 0), 0, 3) == 1);
}

TEST_CASE("group enumeration")
{
    auto s4 = Group::enumerate(FiniteModel::set(4));
    CHECK(s4->size() == 24);
    CHECK(s4->elt(0) == Elt({0, 1, 2, 3}));
    CHECK(s4->gens().size() == 3);

    auto gl22 = Group::enumerate(FiniteModel::vec(2, 2, 0));
    CHECK(gl22->size() == 6);

    auto gl32 = Group::enumerate(FiniteModel::vec(2, 3, 0));
    CHECK(gl32->size() == 168);

    // marked subspace: matrices identical on e1
    auto fix1 = Group::enumerate(FiniteModel::vec(2, 3, 1));
    CHECK(fix1->size() == (8 - 2) * (8 - 4));
    GF gf(2);
    for (int g = 0; g < fix1->size(); ++g)
        CHECK(fix1->act_vector(g, {1, 0, 0}) == std::vector<uint8_t>{1, 0, 0});

    CHECK_THROWS_AS(Group::enumerate(FiniteModel::vec(4, 3, 0)), Error);

    // group laws on a sample
    for (int a = 0; a < gl22->size(); ++a) {
        CHECK(gl22->mul(a, gl22->inv(a)) == gl22->id());
        for (int b = 0; b < gl22->size(); ++b) {
            int ab = gl22->mul(a, b);
            CHECK(gl22->mul(gl22->inv(b), gl22->inv(a)) == gl22->inv(ab));
        }
    }
}

TEST_CASE("double cosets")
{
    auto s3 = Group::enumerate(FiniteModel::set(3));
    auto dc = s3->double_cosets(SubgroupSpec::pointwise(set_sub({1})),
                                SubgroupSpec::pointwise(set_sub({1})));
    CHECK(dc.count == 2);

    auto s6 = Group::enumerate(FiniteModel::set(6));
    Subobject t2 = set_sub({1, 2});
    auto dc2 = s6->double_cosets(SubgroupSpec::setwise(t2), SubgroupSpec::setwise(t2));
    CHECK(dc2.count == 3);
    // brute-force oracle: classes of setwise stabilizer pairs are labeled by
    // the intersection size |T meet sigma(T)|
    std::set<int> labels;
    for (int g = 0; g < s6->size(); ++g)
        labels.insert(subobject_intersection(FiniteModel::set(6), t2, s6->act(g, t2)).length());
    CHECK(static_cast<long long>(labels.size()) == dc2.count);

    auto dcf = s6->double_cosets(SubgroupSpec::full(), SubgroupSpec::pointwise(t2));
    CHECK(dcf.count == 1);

    long long total = 0;
    for (long long s : dc2.sizes)
        total += s;
    CHECK(total == s6->size());
}

TEST_CASE("double coset count is conjugation invariant")
{
    auto s5 = Group::enumerate(FiniteModel::set(5));
    Subobject tu = set_sub({1, 2});
    Subobject tv = set_sub({2, 3});
    auto base = s5->double_cosets(SubgroupSpec::pointwise(tu), SubgroupSpec::setwise(tv));
    for (int g : {3, 17, 40}) {
        Subobject tug = s5->act(g, tu), tvg = s5->act(g, tv);
        auto conj = s5->double_cosets(SubgroupSpec::pointwise(tug), SubgroupSpec::setwise(tvg));
        CHECK(conj.count == base.count);
    }
}

TEST_CASE("fixed cosets")
{
    auto s5 = Group::enumerate(FiniteModel::set(5));
    Subobject t = set_sub({1, 2});
    auto fc = s5->fixed_cosets(SubgroupSpec::pointwise(t), SubgroupSpec::pointwise(t));
    CHECK(fc.fixed_reps.size() == 2);  // = |N(U)/U| with N(U)/U = Sym({1,2})
    CHECK(fc.coset_count == 5 * 4);    // |G|/|U| = 120/6

    auto fcg = s5->fixed_cosets(SubgroupSpec::full(), SubgroupSpec::full());
    CHECK(fcg.coset_count == 1);
    CHECK(fcg.fixed_reps.size() == 1);

    // setwise stabilizer of a 3-set: at n = 6 the complement is a second
    // U-stable 3-set (|T| = n/2 sits below the stable range), at n = 7 only
    // T itself survives, matching the infinite model
    auto s6 = Group::enumerate(FiniteModel::set(6));
    auto fc6 = s6->fixed_cosets(SubgroupSpec::setwise(set_sub({1, 2, 3})),
                                SubgroupSpec::setwise(set_sub({1, 2, 3})));
    CHECK(fc6.fixed_reps.size() == 2);
    auto s7 = Group::enumerate(FiniteModel::set(7));
    auto fc7 = s7->fixed_cosets(SubgroupSpec::setwise(set_sub({1, 2, 3})),
                                SubgroupSpec::setwise(set_sub({1, 2, 3})));
    CHECK(fc7.fixed_reps.size() == 1);
}

TEST_CASE("aut quotient")
{
    auto s5 = Group::enumerate(FiniteModel::set(5));
    auto aq = s5->aut_quotient(set_sub({1, 2}));
    CHECK(aq.order == 2);
    CHECK(aq.stable);

    auto aq0 = s5->aut_quotient(make_set_subobject({}));
    CHECK(aq0.order == 1);

    auto gl42 = Group::enumerate(FiniteModel::vec(2, 4, 0));
    auto planes = subobjects(FiniteModel::vec(2, 4, 0), 2);
    auto aqv = gl42->aut_quotient(planes[0]);
    CHECK(aqv.order == 6);  // |GL_2(F_2)|
    CHECK(aqv.stable);

    // free and transitive Aut(T)-action on the fixed cosets (lin-fin)
    auto fc = s5->fixed_cosets(SubgroupSpec::pointwise(set_sub({1, 2})),
                               SubgroupSpec::pointwise(set_sub({1, 2})));
    auto um = s5->members(SubgroupSpec::pointwise(set_sub({1, 2})));
    CHECK(static_cast<long long>(fc.fixed_reps.size()) == aq.order);
    std::set<int> canon;
    for (int rep : aq.coset_reps)
        canon.insert(s5->coset_canon(s5->mul(rep, fc.fixed_reps[0]), um));
    CHECK(canon.size() == fc.fixed_reps.size());  // transitive + free
}

TEST_CASE("subgroup membership and small generating sets")
{
    auto s6 = Group::enumerate(FiniteModel::set(6));
    auto pw = s6->members(SubgroupSpec::pointwise(set_sub({1, 2, 3})));
    CHECK(pw.size() == 6);  // Sym of the 3 remaining points
    auto sw = s6->members(SubgroupSpec::setwise(set_sub({1, 2, 3})));
    CHECK(sw.size() == 36);
    auto gens = s6->small_gens(sw);
    CHECK(gens.size() <= 4);
    // the generated subgroup is the subgroup itself
    std::vector<char> closed(s6->size(), 0);
    closed[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : gens) {
            int y = s6->mul(x, h);
            if (!closed[y]) {
                closed[y] = 1;
                stack.push_back(y);
            }
        }
    }
    int count = 0;
    for (char c : closed)
        count += c;
    CHECK(count == 36);
}
