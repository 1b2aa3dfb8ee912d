#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "unit/support.hpp"

#include "bicross/comodules.hpp"
#include "bicross/error.hpp"
#include "bicross/linalg.hpp"

using namespace bicross;
using testing::z;

namespace {

ComoduleEngine engine_for(const Config& c) { return ComoduleEngine(c.hopf, c.user_char_tables); }

Json preset_json(const std::string& name) {
    std::ifstream in(preset_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

std::vector<int> dims(const std::vector<SimpleDesc>& s) {
    std::vector<int> d;
    for (const auto& x : s) d.push_back(x.dim_total);
    return d;
}

// Extend generator matrices to a representation by closing under right multiplication.
std::vector<CycMatrix> close_rep(const FiniteGroup& g, const std::vector<std::pair<int, CycMatrix>>& gens) {
    const std::size_t m = gens.front().second.size();
    CycMatrix id(m, std::vector<CycNum>(m));
    for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
    std::vector<CycMatrix> rep(static_cast<std::size_t>(g.order()));
    std::vector<bool> done(rep.size(), false);
    rep[static_cast<std::size_t>(g.identity())] = id;
    done[static_cast<std::size_t>(g.identity())] = true;
    std::vector<int> queue{g.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int x = queue[q];
        for (const auto& [gen, a] : gens) {
            const int y = g.mul(x, gen);
            if (done[static_cast<std::size_t>(y)]) continue;
            CycMatrix r(m, std::vector<CycNum>(m));
            const auto& b = rep[static_cast<std::size_t>(x)];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t j = 0; j < m; ++j) r[i][j] += b[i][k] * a[k][j];
            rep[static_cast<std::size_t>(y)] = r;
            done[static_cast<std::size_t>(y)] = true;
            queue.push_back(y);
        }
    }
    return rep;
}

Json matrix_json(const CycMatrix& a) {
    Json rows = Json::array();
    for (const auto& r : a) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(v.to_string());
        rows.push_back(row);
    }
    return rows;
}

// Drinfeld S3 with a user table over the unit orbit that carries explicit
// matrices for the 2-dimensional irreducible representation.
Config s3_with_matrices(bool corrupt_trace = false) {
    Json doc = preset_json("drinfeld:S3");
    auto base = load_preset("drinfeld:S3");
    const FiniteGroup& G = base.hopf->G();
    auto t = ordinary_char_table(std::make_shared<const FiniteGroup>(G));
    // generators: element 1 = (1,2), element 2 = (1,2,3)
    auto two = close_rep(G, {{1, {{0, 1}, {1, 0}}}, {2, {{0, -1}, {1, -1}}}});
    Json rows = Json::array();
    for (const auto& c : t.chars) {
        Json vals = Json::object();
        for (int x = 0; x < G.order(); ++x) vals[std::to_string(x)] = c.values[static_cast<std::size_t>(x)].to_string();
        Json row{{"dim", c.dim}, {"values", vals}};
        if (c.dim == 2) {
            Json mats = Json::object();
            for (int x = 0; x < G.order(); ++x) {
                CycMatrix a = two[static_cast<std::size_t>(x)];
                if (corrupt_trace && x == 1) a[0][0] += 1;
                mats[G.label(x)] = matrix_json(a);
            }
            row["matrices"] = mats;
        }
        rows.push_back(row);
    }
    doc["char_tables"] = Json::array({Json{{"f", 0}, {"rows", rows}}});
    return parse_config_json(doc, "s3_user");
}

} // namespace

TEST_CASE("C_f subcoalgebras") {
    auto c = testing::preset("h_z_z2");
    auto e = engine_for(c);
    auto c1 = e.cf_subcoalgebra(z(1));
    CHECK(c1.dimension() == 4);
    CHECK(c1.is_simple);
    CHECK(c1.antipode_stable);
    auto c0 = e.cf_subcoalgebra(z(0));
    CHECK(c0.dimension() == 2);
    CHECK_FALSE(c0.is_simple);

    auto c4 = testing::preset("h_z_z2n:2");
    auto e4 = engine_for(c4);
    for (long long j : {1, 2, 3}) {
        auto cj = e4.cf_subcoalgebra(z(j));
        CHECK(cj.dimension() == 8);
        CHECK_FALSE(cj.is_simple);
    }
    auto c1n1 = engine_for(testing::preset("h_z_z2n:1")).cf_subcoalgebra(z(2));
    CHECK(c1n1.is_simple);
}

TEST_CASE("simples per orbit") {
    auto c = testing::preset("h_z_z2");
    auto e = engine_for(c);
    auto s1 = e.simples_for_orbit(z(1));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].dim_total == 2);
    CHECK(s1[0].id == "-1:0");
    CHECK(dims(e.simples_for_orbit(z(0))) == std::vector<int>{1, 1});

    auto d = testing::preset("drinfeld:S3");
    auto ed = engine_for(d);
    // orbit of a 3-cycle: element 2 is (1,2,3)
    auto s3 = ed.simples_for_orbit(FElem::finite(2));
    CHECK(dims(s3) == std::vector<int>{2, 2, 2});
}

TEST_CASE("enumeration") {
    auto e = engine_for(testing::preset("h_z_z2"));
    CHECK(e.enumerate(2).size() == 4);
    auto d = engine_for(testing::preset("drinfeld:S3"));
    auto all = d.enumerate(0);
    CHECK(dims(all) == std::vector<int>{1, 1, 2, 3, 3, 2, 2, 2});
    int total = 0;
    for (const auto& s : all) total += s.dim_total * s.dim_total;
    CHECK(total == 36);
    // R = 0 on an infinite F: just the irreducibles of G
    auto p = engine_for(testing::preset("z_poly_zp:3"));
    CHECK(p.enumerate(0).size() == 3);
    // ids are unique and round-trip through find()
    std::set<std::string> ids;
    for (const auto& s : all) {
        CHECK(ids.insert(s.id).second);
        CHECK(&d.find(s.id) == &d.simple(s.rep(), s.index));
    }
    CHECK_THROWS_AS(d.find("nonsense"), InvalidInput);
    CHECK_THROWS_AS(d.find("0:9"), InvalidInput);
}

TEST_CASE("characters on H(Z,Z2)") {
    auto c = testing::preset("h_z_z2");
    auto e = engine_for(c);
    const auto& s = e.simple(z(1), 0);
    CHECK(e.character(s) == HElem::basis(0, z(1)) + HElem::basis(0, z(-1)));
    CHECK(e.character(e.unit_simple()) == c.hopf->unit());
    // G_f trivial: sum over G of p_1 # (g |> f)
    auto p = testing::preset("z_poly_zp:3");
    auto ep = engine_for(p);
    const FElem f = FElem::vec({1, 0, 0});
    HElem expect;
    for (int g = 0; g < 3; ++g) expect += HElem::basis(0, p.pair->act_right(g, f));
    CHECK(ep.character(ep.simple(f, 0)) == expect);
}

TEST_CASE("character invariants on presets") {
    for (const auto& name : list_presets()) {
        CAPTURE(name);
        auto c = load_preset(name);
        auto e = engine_for(c);
        const int radius = std::min(c.radius, 2);
        std::map<FElem, std::vector<const SimpleDesc*>> by_orbit;
        for (const auto& s : e.enumerate(radius)) {
            const auto& d = e.simple(s.rep(), s.index);
            const HElem& chi = e.character(d);
            CHECK(c.hopf->counit(chi) == CycNum(d.dim_total));
            CHECK(e.character_inverse_form(d) == chi);
            const auto cf = e.cf_subcoalgebra(d.rep());
            for (const auto& [k, v] : chi.terms()) CHECK(std::binary_search(cf.keys.begin(), cf.keys.end(), k));
            by_orbit[d.rep()].push_back(&d);
        }
        for (const auto& [rep, list] : by_orbit) {
            SparseEliminator<BasisKey> elim;
            for (const auto* d : list) CHECK(elim.insert(e.character(*d).terms()));
        }
    }
}

TEST_CASE("coefficient bases, one-dimensional V") {
    auto c = testing::preset("h_z_z2");
    auto e = engine_for(c);
    const auto& s = e.simple(z(1), 0);
    auto b = e.coefficient_basis(s, e.default_matrices(s));
    CHECK(b.size() == 4);
    // spans C_1
    SparseEliminator<BasisKey> elim;
    for (const auto& x : b) elim.insert(x.terms());
    for (const auto& k : e.cf_subcoalgebra(z(1)).keys) CHECK(elim.solve(HElem::basis(k.g, k.f).terms()).has_value());

    auto unit = e.coefficient_basis(e.unit_simple(), e.default_matrices(e.unit_simple()));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == c.hopf->unit());

    // multiplicativity with nontrivial tau and on every dim-1 simple of the presets
    for (const auto& name : list_presets()) {
        CAPTURE(name);
        auto cfg = load_preset(name);
        auto en = engine_for(cfg);
        for (const auto& d : en.enumerate(std::min(cfg.radius, 2))) {
            if (d.dim_v != 1) continue;
            CHECK(en.coefficient_basis(d, en.default_matrices(d)).size() ==
                  static_cast<std::size_t>(d.dim_total * d.dim_total));
        }
    }
}

TEST_CASE("coefficient bases from user matrices") {
    auto c = s3_with_matrices();
    auto e = engine_for(c);
    CHECK(to_string(e.orbit_simples(FElem::finite(0)).table.provenance) == "user-supplied");
    const SimpleDesc* two = nullptr;
    for (const auto& d : e.simples_for_orbit(FElem::finite(0)))
        if (d.dim_v == 2) two = &d;
    REQUIRE(two != nullptr);
    auto b = e.coefficient_basis(*two, e.default_matrices(*two));
    CHECK(b.size() == 4);
    CHECK(dense_rank([&] {
              std::set<BasisKey> keys;
              for (const auto& x : b)
                  for (const auto& [k, v] : x.terms()) keys.insert(k);
              std::vector<std::vector<CycNum>> rows;
              for (const auto& x : b) {
                  std::vector<CycNum> r;
                  for (const auto& k : keys) r.push_back(x.coeff(k));
                  rows.push_back(r);
              }
              return rows;
          }()) == 4);

    auto bad = s3_with_matrices(true);
    auto eb = engine_for(bad);
    for (const auto& d : eb.simples_for_orbit(FElem::finite(0)))
        if (d.dim_v == 2) CHECK_THROWS_AS(eb.coefficient_basis(d, eb.default_matrices(d)), InvalidInput);

    // no matrices, no synthesis
    auto plain = engine_for(testing::preset("drinfeld:S3"));
    for (const auto& d : plain.simples_for_orbit(FElem::finite(0)))
        if (d.dim_v == 2) CHECK_THROWS_AS(plain.default_matrices(d), ProviderUnavailable);
}

TEST_CASE("twisted coefficient matrices on the Klein preset") {
    Json doc = preset_json("klein_twisted");
    // A(a, b) = X^a Z^b, index a + 2b
    const CycMatrix I{{1, 0}, {0, 1}}, X{{0, 1}, {1, 0}}, Z{{1, 0}, {0, -1}}, XZ{{0, -1}, {1, 0}};
    Json mats{{"0", matrix_json(I)}, {"1", matrix_json(X)}, {"2", matrix_json(Z)}, {"3", matrix_json(XZ)}};
    Json rows = Json::array({Json{{"dim", 2}, {"values", {{"0", "2"}}}, {"matrices", mats}}});
    doc["char_tables"] = Json::array({Json{{"f", 1}, {"rows", rows}}});
    auto c = parse_config_json(doc, "klein_user");
    auto e = engine_for(c);
    const auto& s = e.simple(FElem::finite(1), 0);
    CHECK(s.dim_total == 2);
    CHECK(e.coefficient_basis(s, e.default_matrices(s)).size() == 4);

    // the built-in provider finds the same single character
    auto plain = engine_for(load_preset("klein_twisted"));
    const auto& p = plain.simple(FElem::finite(1), 0);
    CHECK(plain.simples_for_orbit(FElem::finite(1)).size() == 1);
    CHECK(p.chi.values == s.chi.values);
}

TEST_CASE("user tables are validated against the orbit") {
    Json doc = preset_json("drinfeld:S3");
    // (1,2) has stabilizer {1, (1,2)}: element 2 = (1,2,3) is not in it
    Json rows = Json::array({Json{{"dim", 1}, {"values", {{"0", "1"}, {"2", "1"}}}}});
    doc["char_tables"] = Json::array({Json{{"f", 1}, {"rows", rows}}});
    auto c = parse_config_json(doc, "bad_user");
    auto e = engine_for(c);
    CHECK_THROWS_AS(e.simples_for_orbit(FElem::finite(1)), InvalidInput);
}

TEST_CASE("ids round-trip when F is cyclic") {
    const Config cfg = testing::preset("klein_twisted");
    ComoduleEngine e(cfg.hopf, cfg.user_char_tables);
    for (const auto& d : e.enumerate(0)) CHECK(&e.find(d.id) == &e.simple(d.rep(), d.index));
    CHECK(e.find("1:0").dim_total == 2);
}
