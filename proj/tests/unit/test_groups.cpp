#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "bicross/error.hpp"
#include "bicross/groups.hpp"

using namespace bicross;

namespace {

FiniteGroup s3() { return FiniteGroup::from_permutations({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}); }
FiniteGroup q8() {
    return FiniteGroup::from_permutations(
        {parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,3,7)(2,8,4,6)", 8)});
}

std::vector<int> class_sizes(const FiniteGroup& g) {
    std::vector<int> s;
    for (const auto& c : g.conjugacy_classes()) s.push_back(static_cast<int>(c.size()));
    std::sort(s.begin(), s.end());
    return s;
}

void check_group_axioms(const FiniteGroup& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        CHECK(g.mul(a, g.identity()) == a);
        CHECK(g.mul(g.inv(a), a) == g.identity());
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

} // namespace

TEST_CASE("permutation parsing") {
    auto p = parse_cycles("(1,2,3)", 4);
    CHECK(p == Permutation{1, 2, 0, 3});
    CHECK(format_cycles(p) == "(1,2,3)");
    CHECK(format_cycles(parse_cycles("()", 3)) == "()");
    CHECK_THROWS_AS(parse_cycles("(1,5)", 4), InvalidInput);
    CHECK_THROWS_AS(parse_cycles("(1,1)", 4), InvalidInput);
}

TEST_CASE("small groups built from generators") {
    auto g = s3();
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK(g.exponent() == 6);
    CHECK_FALSE(g.is_abelian());
    CHECK(class_sizes(g) == std::vector<int>{1, 2, 3});
    CHECK(g.label(1) == "(1,2)");
    check_group_axioms(g);

    auto q = q8();
    CHECK(q.order() == 8);
    CHECK(class_sizes(q) == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(q.exponent() == 4);

    auto a4 = FiniteGroup::from_permutations({parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)});
    CHECK(a4.order() == 12);
    CHECK(class_sizes(a4) == std::vector<int>{1, 3, 4, 4});

    CHECK_THROWS_AS(FiniteGroup::from_permutations({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2)", 5)}),
                    InvalidInput);
}

TEST_CASE("table validation") {
    std::vector<std::vector<int>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    auto g = FiniteGroup::from_table(z3);
    CHECK(g.order() == 3);
    CHECK(g.is_abelian());
    // latin square without associativity
    std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1},
                                      {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), InvalidInput);
    std::vector<std::vector<int>> no_id{{1, 0}, {1, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(no_id), InvalidInput);
    std::vector<std::vector<int>> out_of_range{{0, 5}, {1, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(out_of_range), InvalidInput);
}

TEST_CASE("conjugation and classes are consistent") {
    for (const auto& g : {s3(), q8(), FiniteGroup::abelian({2, 4})}) {
        const auto cls = g.conjugacy_classes();
        const auto idx = g.class_index();
        for (int x = 0; x < g.order(); ++x)
            for (int h = 0; h < g.order(); ++h) CHECK(idx[g.conj(h, x)] == idx[x]);
        int total = 0;
        for (const auto& c : cls) total += static_cast<int>(c.size());
        CHECK(total == g.order());
        for (std::size_t i = 1; i < cls.size(); ++i) CHECK(cls[i - 1].front() < cls[i].front());
    }
}

TEST_CASE("abelian invariants") {
    struct Case {
        std::vector<int> dims;
        std::vector<int> inv;
    };
    for (const auto& c : {Case{{6}, {6}}, Case{{2, 3}, {6}}, Case{{2, 4}, {2, 4}}, Case{{4, 2}, {2, 4}},
                          Case{{2, 2, 2}, {2, 2, 2}}, Case{{6, 4}, {2, 12}}, Case{{1}, {}}, Case{{3, 9}, {3, 9}}}) {
        auto g = FiniteGroup::abelian(c.dims);
        auto d = abelian_invariants(g);
        CHECK(d.invariants == c.inv);
        REQUIRE(d.generators.size() == d.invariants.size());
        std::set<std::vector<int>> seen;
        for (int a = 0; a < g.order(); ++a) {
            int prod = g.identity();
            for (std::size_t i = 0; i < d.generators.size(); ++i) {
                CHECK(d.coords[a][i] >= 0);
                CHECK(d.coords[a][i] < d.invariants[i]);
                prod = g.mul(prod, g.power(d.generators[i], d.coords[a][i]));
            }
            CHECK(prod == a);
            seen.insert(d.coords[a]);
        }
        CHECK(static_cast<int>(seen.size()) == g.order());
        for (std::size_t i = 0; i < d.generators.size(); ++i)
            CHECK(g.element_order(d.generators[i]) == d.invariants[i]);
    }
    auto z8 = FiniteGroup::cyclic(8);
    CHECK(abelian_invariants(z8).generators == std::vector<int>{1});
}

TEST_CASE("free abelian F: ball, parsing, ordering") {
    auto f = FGroup::free_abelian(2);
    auto ball = f.ball(1);
    CHECK(ball.size() == 9);
    CHECK(ball.front() == f.identity());
    CHECK(std::is_sorted(ball.begin(), ball.end()));
    CHECK(f.parse("(1,-2)") == FElem::vec({1, -2}));
    CHECK(f.parse("1,-2") == FElem::vec({1, -2}));
    CHECK(f.format(FElem::vec({1, -2})) == "(1,-2)");
    CHECK_THROWS_AS(f.parse("(1,2,3)"), InvalidInput);
    CHECK(f.mul(FElem::vec({1, 2}), f.inv(FElem::vec({1, 2}))) == f.identity());
    auto z = FGroup::free_abelian(1);
    CHECK(z.format(FElem::vec({-3})) == "-3");
    CHECK(z.ball(4).size() == 9);

    auto fin = FGroup::finite(std::make_shared<const FiniteGroup>(s3()));
    CHECK(fin.ball(0).size() == 6);
    CHECK(fin.parse("(1,2)") == FElem::finite(1));
    CHECK(fin.parse("1") == FElem::finite(1));

    // cyclic labels are "1", "g", ...; digit strings still mean indices
    auto cyc = FGroup::finite(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4)));
    for (const auto& x : cyc.ball(0)) CHECK(cyc.parse(cyc.format(x)) == x);
    CHECK(cyc.parse("1") == FElem::finite(1));
    CHECK(cyc.parse("g^2") == FElem::finite(2));
    CHECK_THROWS_AS(cyc.parse("4"), InvalidInput);
}
