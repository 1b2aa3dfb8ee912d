#include "bicross/verification.hpp"

#include <set>

#include "bicross/error.hpp"
#include "bicross/linalg.hpp"

namespace bicross {

Json LinearCert::to_json() const {
    Json j{{"description", description}, {"rows", rows}, {"columns", columns}, {"rank", rank}, {"passed", passed}};
    j["expected"] = expected ? Json(*expected) : Json();
    if (!details.is_null()) j["details"] = details;
    return j;
}

LinearCert exact_rank(const std::vector<HElem>& vectors, std::string description, std::optional<std::size_t> expected) {
    LinearCert c;
    c.description = std::move(description);
    c.rows = vectors.size();
    std::set<BasisKey> support;
    SparseEliminator<BasisKey> elim;
    for (const auto& v : vectors) {
        for (const auto& [k, x] : v.terms()) support.insert(k);
        elim.insert(v.terms());
    }
    c.columns = support.size();
    c.rank = elim.rank();
    c.expected = expected;
    c.passed = !expected || *expected == c.rank;
    return c;
}

LinearCert direct_sum_check(const ComoduleEngine& e, int radius) {
    const MatchedPair& mp = e.pair();
    const FiniteGroup& G = e.hopf().G();
    std::vector<HElem> vectors;
    std::set<BasisKey> seen;
    Json blocks = Json::array();
    Json overlaps = Json::array();
    for (const auto& rep : mp.orbit_reps(radius)) {
        const CfBasis cf = e.cf_subcoalgebra(rep);
        blocks.push_back({{"orbit_rep", e.format_f(rep)}, {"dimension", cf.dimension()}});
        for (const auto& k : cf.keys) {
            if (!seen.insert(k).second && overlaps.size() < 20) {
                overlaps.push_back({{"g", G.label(k.g)}, {"f", e.format_f(k.f)}});
            }
            vectors.push_back(HElem::basis(k.g, k.f));
        }
    }
    Json missing = Json::array();
    for (const auto& f : mp.F().ball(radius)) {
        for (int g = 0; g < G.order(); ++g) {
            if (!seen.count({g, f}) && missing.size() < 20) missing.push_back({{"g", G.label(g)}, {"f", e.format_f(f)}});
        }
    }
    LinearCert c = exact_rank(vectors, "C_f blocks over the ball of radius " + std::to_string(radius), vectors.size());
    c.passed = c.passed && overlaps.empty() && missing.empty() && c.columns == vectors.size();
    std::size_t total = 0;
    for (const auto& b : blocks) total += b["dimension"].get<std::size_t>();
    c.details = Json{{"blocks", blocks}, {"total_dimension", total}, {"overlaps", overlaps}, {"uncovered", missing}};
    if (mp.F().is_finite()) {
        const std::size_t dim_h = static_cast<std::size_t>(G.order()) * mp.F().finite_group().order();
        c.details["dim_H"] = dim_h;
        c.passed = c.passed && total == dim_h;
    }
    return c;
}

bool DimensionAudit::passed() const {
    for (const auto& r : rows)
        if (!r.passed()) return false;
    return true;
}

Json DimensionAudit::to_json(const ComoduleEngine& e) const {
    Json rs = Json::array();
    for (const auto& r : rows) {
        Json j{{"orbit_rep", e.format_f(r.rep)},
               {"orbit_size", r.orbit_size},
               {"expected", r.expected},
               {"sum_of_squares", r.sum_squares},
               {"dims", r.dims},
               {"passed", r.passed()}};
        if (!r.error.empty()) j["error"] = r.error;
        rs.push_back(j);
    }
    return Json{{"radius", radius}, {"rows", rs}, {"passed", passed()}};
}

DimensionAudit dimension_audit(const ComoduleEngine& e, int radius) {
    const MatchedPair& mp = e.pair();
    const int ng = e.hopf().G().order();
    DimensionAudit audit;
    audit.radius = radius;
    for (const auto& rep : mp.orbit_reps(radius)) {
        DimensionRow row;
        row.rep = rep;
        std::set<FElem> orbit;
        int stab = 0;
        for (int g = 0; g < ng; ++g) {
            const FElem x = mp.act_right(g, rep);
            orbit.insert(x);
            stab += x == rep;
        }
        row.orbit_size = static_cast<int>(orbit.size());
        row.expected = static_cast<long long>(ng) * row.orbit_size;
        try {
            for (const auto& d : e.simples_for_orbit(rep)) {
                const int dim = (ng / stab) * d.chi.dim;
                row.dims.push_back(dim);
                row.sum_squares += static_cast<long long>(dim) * dim;
            }
        } catch (const InternalInconsistency& ex) {
            row.error = ex.what();
        }
        audit.rows.push_back(std::move(row));
    }
    return audit;
}

} // namespace bicross
