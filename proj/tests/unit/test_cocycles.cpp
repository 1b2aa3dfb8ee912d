#include <random>

#include "doctest.h"
#include "unit/support.hpp"

#include "bicross/cocycles.hpp"
#include "bicross/error.hpp"

using namespace bicross;
using testing::z;

TEST_CASE("trivial cocycles evaluate to one and verify") {
    auto cfg = testing::preset("h_z_z2");
    const auto& h = *cfg.hopf;
    CHECK(h.sigma()(1, z(3), z(5)).is_one());
    CHECK(h.tau()(0, 1, z(7)).is_one());
    CHECK(verify_cocycles(h.pair(), h.sigma(), h.tau(), 3).passed());
    auto u = is_unitary(h.pair(), h.sigma(), h.tau(), 3);
    CHECK(u.unitary);
    CHECK(u.global);
}

TEST_CASE("quotient lift factors through the quotient") {
    auto cfg = testing::fixture("broken_compat.json");
    const auto& s = cfg.hopf->sigma();
    CHECK(s(1, z(3), z(5)) == s(1, z(1), z(1)));
    CHECK(s(1, z(3), z(5)) == CycNum::root_of_unity(1, 4));
    CHECK(s(1, z(2), z(5)).is_one());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const long long a = static_cast<long long>(rng() % 41) - 20;
        const long long b = static_cast<long long>(rng() % 41) - 20;
        const long long ka = 2 * (static_cast<long long>(rng() % 11) - 5);
        const long long kb = 2 * (static_cast<long long>(rng() % 11) - 5);
        const int g = static_cast<int>(rng() % 2);
        CHECK(s(g, z(a), z(b)) == s(g, z(a + ka), z(b + kb)));
    }
}

TEST_CASE("broken compatibility is caught and nothing else fails") {
    auto cfg = testing::fixture("broken_compat.json");
    const auto& h = *cfg.hopf;
    auto rep = verify_cocycles(h.pair(), h.sigma(), h.tau(), 3);
    CHECK_FALSE(rep.passed());
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        if (c.name == "compatibility") {
            CHECK(c.violations > 0);
            REQUIRE(!c.witnesses.empty());
            CHECK(c.witnesses.front()["law"] == "compatibility");
        } else {
            CHECK(c.passed());
        }
    }
}

TEST_CASE("normalization failure at f = 1_F") {
    auto cfg = testing::fixture("tau_not_normalized.json");
    const auto& h = *cfg.hopf;
    auto rep = verify_cocycles(h.pair(), h.sigma(), h.tau(), 0);
    const Check* c = rep.find("tau_normalization");
    REQUIRE(c);
    CHECK_FALSE(c->passed());
    CHECK(c->witnesses.front()["law"] == "tau(g,g';1) = 1");
    CHECK(c->witnesses.front()["g"] == 1);
    CHECK(c->witnesses.front()["h"] == 1);
}

TEST_CASE("unitarity witness for a single non-unit value") {
    auto cfg = testing::fixture("sigma_two.json");
    const auto& h = *cfg.hopf;
    auto u = is_unitary(h.pair(), h.sigma(), h.tau(), 0);
    CHECK_FALSE(u.unitary);
    CHECK(u.witness["cocycle"] == "sigma");
    CHECK(u.witness["g"] == 1);
    CHECK(u.witness["f"] == "1");
    CHECK(u.witness["f2"] == "2");
    CHECK(u.witness["value"] == "2");
    CHECK_FALSE(h.star_allowed());
}

TEST_CASE("plus-minus one tables are unitary") {
    auto cfg = testing::preset("klein_twisted");
    const auto& h = *cfg.hopf;
    CHECK(is_unitary(h.pair(), h.sigma(), h.tau(), 0).unitary);
    CHECK(verify_cocycles(h.pair(), h.sigma(), h.tau(), 0).passed());
    CHECK(h.star_allowed());
}

TEST_CASE("beta_f on stabilizers") {
    SUBCASE("Drinfeld pair: beta trivial on every centralizer") {
        auto cfg = testing::preset("drinfeld:S3");
        const auto& h = *cfg.hopf;
        for (const auto& r : h.pair().orbit_reps(0)) {
            auto beta = beta_for_orbit(h.pair(), h.tau(), *h.pair().orbit_of(r));
            CHECK(beta.is_trivial());
            CHECK(beta.group().order() == static_cast<int>(h.pair().orbit_of(r)->stabilizer.size()));
        }
    }
    SUBCASE("Klein cocycle at the nontrivial fixed point") {
        auto cfg = testing::preset("klein_twisted");
        const auto& h = *cfg.hopf;
        auto beta = beta_for_orbit(h.pair(), h.tau(), *h.pair().orbit_of(FElem::finite(1)));
        CHECK_FALSE(beta.is_trivial());
        const FiniteGroup& k = beta.group();
        REQUIRE(k.order() == 4);
        // element index a + 2b <-> (a, b); beta((a,b),(c,d)) = (-1)^(bc)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                const int b = x / 2, c = y % 2;
                CHECK(beta(x, y) == CycNum((b * c) % 2 ? -1 : 1));
            }
        // exhaustive 4^3 cocycle identity, independently of check_cocycle_identity
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    CHECK(beta(a, b) * beta(k.mul(a, b), c) == beta(a, k.mul(b, c)) * beta(b, c));
        CHECK_NOTHROW(beta.check_cocycle_identity());
    }
}

TEST_CASE("random perturbation of a valid tau table is detected") {
    auto base = testing::preset("klein_twisted").source;
    std::mt19937_64 rng(17);
    int detected = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Json doc = base;
        const int g = 1 + static_cast<int>(rng() % 3), hh = 1 + static_cast<int>(rng() % 3);
        bool replaced = false;
        for (auto& e : doc["tau"]["values"]) {
            if (e["g"] == g && e["h"] == hh) {
                e["value"] = "z@4";
                replaced = true;
            }
        }
        if (!replaced) doc["tau"]["values"].push_back({{"g", g}, {"h", hh}, {"f", 1}, {"value", "z@4"}});
        auto cfg = parse_config_json(doc);
        auto rep = verify_cocycles(cfg.hopf->pair(), cfg.hopf->sigma(), cfg.hopf->tau(), 0);
        if (!rep.passed()) ++detected;
        const Check* c = rep.find("compatibility");
        CHECK_FALSE(c->passed()); // tau(g,h;.) must be a character of F; i is not of order 2
    }
    CHECK(detected == 10);
}
