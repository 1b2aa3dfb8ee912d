#include <algorithm>
#include <set>

#include "doctest.h"
#include "unit/support.hpp"

#include "bicross/error.hpp"
#include "bicross/matched_pair.hpp"

using namespace bicross;
using testing::z;

TEST_CASE("H(Z,Z2) actions and orbits") {
    auto cfg = testing::preset("h_z_z2");
    const MatchedPair& mp = *cfg.pair;
    CHECK(mp.act_right(1, z(5)) == z(-5));
    CHECK(mp.act_right(0, z(5)) == z(5));
    CHECK(mp.act_left(1, z(5)) == 1);

    auto o1 = mp.orbit_of(z(1));
    CHECK(o1->rep == z(-1));
    CHECK(o1->elements == std::vector<FElem>{z(-1), z(1)});
    CHECK(o1->stabilizer == std::vector<int>{0});
    CHECK(o1->transversal == std::vector<int>{0, 1});
    auto o0 = mp.orbit_of(z(0));
    CHECK(o0->elements == std::vector<FElem>{z(0)});
    CHECK(o0->stabilizer == std::vector<int>{0, 1});
    CHECK(o0->transversal == std::vector<int>{0});

    CHECK(mp.g_f_finv(z(1)) == std::vector<int>{1});
    CHECK(mp.g_f_finv(z(0)) == std::vector<int>{0, 1});

    CHECK(mp.orbit_product(*o1, *o1) == std::vector<FElem>{z(0), z(-2)});
    CHECK(mp.orbit_product(*o1, *mp.orbit_of(z(2))) == std::vector<FElem>{z(-1), z(-3)});
    CHECK(mp.orbit_product(*o1, *o0) == std::vector<FElem>{z(-1)});

    auto rep = mp.verify(3);
    CHECK(rep.passed());
    CHECK(rep.find("right_action_compatibility")->scope.find("verified globally") == 0);
}

TEST_CASE("Z_p on Z[x]: cyclic shift and fixed points") {
    auto cfg = testing::preset("z_poly_zp:3");
    const MatchedPair& mp = *cfg.pair;
    // g |> (a0 + a1 x + a2 x^2) = a2 + a0 x + a1 x^2
    CHECK(mp.act_right(1, FElem::vec({1, 2, 3})) == FElem::vec({3, 1, 2}));
    CHECK(mp.act_right(2, FElem::vec({1, 2, 3})) == FElem::vec({2, 3, 1}));
    CHECK(mp.orbit_of(FElem::vec({4, 4, 4}))->stabilizer.size() == 3);
    CHECK(mp.orbit_of(FElem::vec({1, 0, 0}))->stabilizer.size() == 1);
    CHECK(mp.verify(2).passed());
}

TEST_CASE("conjugation pair S3") {
    auto cfg = testing::preset("drinfeld:S3");
    const MatchedPair& mp = *cfg.pair;
    const FiniteGroup& g = mp.G();
    CHECK(mp.verify(0).passed());
    // a 3-cycle is conjugate to its inverse
    int three_cycle = -1;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 3) three_cycle = x;
    CHECK_FALSE(mp.g_f_finv(FElem::finite(three_cycle)).empty());
    std::vector<int> sizes;
    for (const auto& r : mp.orbit_reps(0)) sizes.push_back(mp.orbit_of(r)->size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});
}

TEST_CASE("orbit invariants on every preset ball") {
    for (const char* name : {"h_z_z2", "h_z_z2n:3", "z_poly_zp:3", "drinfeld:S3", "drinfeld:Q8", "klein_twisted"}) {
        CAPTURE(name);
        auto cfg = testing::preset(name);
        const MatchedPair& mp = *cfg.pair;
        const FiniteGroup& G = mp.G();
        const auto ball = mp.F().ball(2);
        for (const auto& f : ball) {
            auto o = mp.orbit_of(f);
            CHECK(o->size() * static_cast<int>(o->stabilizer.size()) == G.order());
            CHECK(o->transversal.front() == G.identity());
            CHECK(o->rep == o->elements.front());
            std::set<FElem> images(o->transversal_image.begin(), o->transversal_image.end());
            CHECK(images.size() == o->elements.size());
            for (const auto& im : images) CHECK(o->contains(im));
            for (int x = 0; x < G.order(); ++x) {
                const int h = o->coset_g[x];
                CHECK(std::binary_search(o->stabilizer.begin(), o->stabilizer.end(), h));
                CHECK(G.mul(h, o->transversal[o->coset_z[x]]) == x);
            }
            // three-way equivalence for inverses
            const bool a = !mp.g_f_finv(f).empty();
            const bool b = o->contains(mp.F().inv(f));
            bool c = true;
            for (const auto& x : o->elements) c = c && o->contains(mp.F().inv(x));
            CHECK(a == b);
            CHECK(b == c);
        }
        // orbit products are disjoint unions equal to the product set
        for (std::size_t i = 0; i < std::min<std::size_t>(ball.size(), 6); ++i) {
            for (std::size_t j = 0; j < std::min<std::size_t>(ball.size(), 6); ++j) {
                auto oa = mp.orbit_of(ball[i]);
                auto ob = mp.orbit_of(ball[j]);
                std::set<FElem> prod;
                for (const auto& x : oa->elements)
                    for (const auto& y : ob->elements) prod.insert(mp.F().mul(x, y));
                std::set<FElem> uni;
                std::size_t total = 0;
                for (const auto& r : mp.orbit_product(*oa, *ob)) {
                    auto o = mp.orbit_of(r);
                    total += o->elements.size();
                    uni.insert(o->elements.begin(), o->elements.end());
                }
                CHECK(uni == prod);
                CHECK(total == uni.size());
            }
        }
    }
}

TEST_CASE("broken action table is reported with witnesses") {
    auto cfg = testing::fixture("bad_action.json");
    auto rep = cfg.pair->verify(0);
    CHECK_FALSE(rep.passed());
    const Check* c = rep.find("matched_pair_law_right");
    REQUIRE(c);
    CHECK(c->violations > 0);
    CHECK(!c->witnesses.empty());
    CHECK(c->witnesses.front().contains("f2"));
}

TEST_CASE("linear actions must be invertible over Z") {
    auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    CHECK_THROWS_AS(MatchedPair::with_linear(g, 1, {{{1}}, {{2}}}), InvalidInput);
}
