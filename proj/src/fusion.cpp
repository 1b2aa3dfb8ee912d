#include "bicross/fusion.hpp"

#include <algorithm>
#include <random>

#include "bicross/error.hpp"
#include "bicross/linalg.hpp"

namespace bicross {

namespace {

bool term_less(const FusionTerm& a, const FusionTerm& b) {
    if (a.rep != b.rep) return a.rep < b.rep;
    return a.index < b.index;
}

// Value of the one-dimensional character of d at G element g (g in the stabilizer).
CycNum value_at(const SimpleDesc& d, int g) {
    const auto& st = d.orbit->stabilizer;
    auto it = std::lower_bound(st.begin(), st.end(), g);
    return d.chi.values[static_cast<std::size_t>(it - st.begin())];
}

long long as_multiplicity(const CycNum& c, const std::string& where) {
    if (!c.is_rational()) throw InternalInconsistency(where + ": irrational multiplicity " + c.to_string());
    const Rational r = c.to_rational();
    if (!r.is_integer() || !r.is_small() || r.sign() < 0) {
        throw InternalInconsistency(where + ": multiplicity " + r.to_string() + " is not a nonnegative integer");
    }
    return r.small_num();
}

} // namespace

long long FusionRow::multiplicity_of(const std::string& id) const {
    for (const auto& t : summands)
        if (t.id == id) return t.multiplicity;
    return 0;
}

Json FusionRow::to_json() const {
    Json s = Json::array();
    for (const auto& t : summands) s.push_back({{"id", t.id}, {"multiplicity", t.multiplicity}, {"dim", t.dim}});
    return Json{{"left", left}, {"right", right}, {"summands", s}};
}

const FusionRow* FusionTable::find(const std::string& left, const std::string& right) const {
    for (const auto& r : rows)
        if (r.left == left && r.right == right) return &r;
    return nullptr;
}

Json FusionTable::to_json(const ComoduleEngine& e) const {
    Json simples_json = Json::array();
    for (const auto& s : simples) {
        Json j = e.to_json(s);
        j["dual"] = duals.at(s.id);
        j["fs_indicator"] = indicators.at(s.id);
        simples_json.push_back(j);
    }
    Json rows_json = Json::array();
    for (const auto& r : rows) rows_json.push_back(r.to_json());
    Json asym = Json::array();
    for (const auto& [a, b] : asymmetric) asym.push_back(Json::array({a, b}));
    return Json{{"radius", radius},
                {"unit", unit_id},
                {"simples", simples_json},
                {"rows", rows_json},
                {"asymmetric_pairs", asym},
                {"commutative", asymmetric.empty()}};
}

FusionTerm FusionEngine::term(const SimpleDesc& d, long long mult) const {
    return FusionTerm{d.id, d.rep(), d.index, d.dim_total, mult};
}

const FusionRow& FusionEngine::decompose(const SimpleDesc& a, const SimpleDesc& b, std::optional<int> ball) {
    const MatchedPair& mp = e_.pair();
    const auto reps = mp.orbit_product(*a.orbit, *b.orbit);
    if (ball && !mp.F().is_finite()) {
        for (const auto& r : reps) {
            if (r.sup_norm() > *ball) {
                throw BallTooSmall(a.id + " * " + b.id + " needs the orbit of " + e_.format_f(r) +
                                   ", outside the ball of radius " + std::to_string(*ball));
            }
        }
    }
    const auto key = std::make_pair(a.id, b.id);
    if (auto it = rows_.find(key); it != rows_.end()) return it->second;

    const std::string where = "decomposition of " + a.id + " * " + b.id;
    const HElem target = e_.hopf().mul(e_.character(a), e_.character(b));
    SparseEliminator<BasisKey> elim;
    std::vector<const SimpleDesc*> cands;
    for (const auto& r : reps) {
        for (const auto& d : e_.simples_for_orbit(r)) {
            if (!elim.insert(e_.character(d).terms())) {
                throw InternalInconsistency(where + ": candidate character " + d.id + " is linearly dependent");
            }
            cands.push_back(&d);
        }
    }
    HElem::Map residual;
    auto x = elim.solve(target.terms(), &residual);
    if (!x) {
        const auto& [k, v] = *residual.begin();
        throw InternalInconsistency(where + ": nonzero residual (" + std::to_string(residual.size()) +
                                    " terms, first at p_" + e_.hopf().G().label(k.g) + " # " + e_.format_f(k.f) +
                                    " with coefficient " + v.to_string() + ")");
    }
    FusionRow row{a.id, b.id, a.dim_total, b.dim_total, {}};
    long long dim = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const long long m = as_multiplicity((*x)[i], where);
        if (m == 0) continue;
        row.summands.push_back(term(*cands[i], m));
        dim += m * cands[i]->dim_total;
    }
    std::sort(row.summands.begin(), row.summands.end(), term_less);
    if (dim != static_cast<long long>(a.dim_total) * b.dim_total) {
        throw InternalInconsistency(where + ": dimensions do not add up");
    }
    return rows_.emplace(key, std::move(row)).first->second;
}

const SimpleDesc& FusionEngine::dual_of(const SimpleDesc& d) {
    if (auto it = duals_.find(d.id); it != duals_.end()) return *it->second;
    const HElem s = e_.hopf().antipode(e_.character(d));
    const FElem finv = e_.pair().F().inv(d.rep());
    for (const auto& c : e_.simples_for_orbit(finv)) {
        if (e_.character(c) == s) {
            duals_.emplace(d.id, &c);
            return c;
        }
    }
    throw InternalInconsistency("no simple over the orbit of " + e_.format_f(finv) + " has character S(chi(" +
                                d.id + "))");
}

int FusionEngine::fs_indicator(const SimpleDesc& d) {
    if (auto it = indicators_.find(d.id); it != indicators_.end()) return it->second;
    const HopfAlgebra& h = e_.hopf();
    HElem md;
    const HTensor delta = h.comul(e_.character(d));
    for (const auto& [k, c] : delta.terms()) {
        if (auto p = h.mul_basis(k.first, k.second)) md.add(p->key, c * p->coeff);
    }
    const CycNum nu = h.integral(md);
    const std::string where = "Frobenius-Schur indicator of " + d.id;
    if (!nu.is_rational() || !nu.to_rational().is_integer()) throw InternalInconsistency(where + " is " + nu.to_string());
    const Rational r = nu.to_rational();
    if (!r.is_small() || r.small_num() < -1 || r.small_num() > 1) throw InternalInconsistency(where + " is " + r.to_string());
    const int v = static_cast<int>(r.small_num());
    if ((v != 0) != is_self_dual(d)) {
        throw InternalInconsistency(where + " is " + std::to_string(v) + " but the simple is " +
                                    (is_self_dual(d) ? "self-dual" : "not self-dual"));
    }
    indicators_.emplace(d.id, v);
    return v;
}

bool FusionEngine::smash_setting() const {
    const HopfAlgebra& h = e_.hopf();
    return h.cocycles_trivial() && h.G().is_abelian() && h.pair().left_trivial();
}

std::optional<bool> FusionEngine::smash_self_dual(const SimpleDesc& d) const {
    if (!smash_setting()) return std::nullopt;
    const FiniteGroup& G = e_.hopf().G();
    bool v_self_dual = true;
    for (int g : d.orbit->stabilizer) v_self_dual = v_self_dual && value_at(d, g) == value_at(d, G.inv(g));
    return v_self_dual && !e_.pair().g_f_finv(d.rep()).empty();
}

bool FusionEngine::uniform_stabilizers() const {
    const MatchedPair& mp = e_.pair();
    if (mp.F().is_finite()) {
        std::optional<std::vector<int>> common;
        for (const auto& f : mp.F().ball(0)) {
            if (mp.F().is_identity(f)) continue;
            const auto& st = mp.orbit_of(f)->stabilizer;
            if (!common) common = st;
            else if (*common != st) return false;
        }
        return true;
    }
    // linear action on Z^r: every M_g is either the identity or fixes no nonzero vector
    for (const auto& m : mp.matrices()) {
        const std::size_t r = m.size();
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
        bool identity = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                a[i][j] = Rational(m[i][j] - (i == j ? 1 : 0));
                identity = identity && a[i][j].is_zero();
            }
        if (identity) continue;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < r && rank < r; ++c) {
            std::size_t p = rank;
            while (p < r && a[p][c].is_zero()) ++p;
            if (p == r) continue;
            std::swap(a[p], a[rank]);
            for (std::size_t i = rank + 1; i < r; ++i) {
                if (a[i][c].is_zero()) continue;
                const Rational f = a[i][c] / a[rank][c];
                for (std::size_t j = c; j < r; ++j) a[i][j] = a[i][j] - f * a[rank][j];
            }
            ++rank;
        }
        if (rank < r) return false;
    }
    return true;
}

std::optional<FusionRow> FusionEngine::smash_shortcut(const SimpleDesc& a, const SimpleDesc& b) {
    if (!smash_setting()) return std::nullopt;
    const MatchedPair& mp = e_.pair();
    const FGroup& F = mp.F();
    const FElem one = F.identity();
    const FElem x = a.rep(), y = b.rep();
    const auto reps = mp.orbit_product(*a.orbit, *b.orbit);
    if (!uniform_stabilizers()) return std::nullopt;

    std::map<std::string, FusionTerm> acc;
    auto add = [&](const SimpleDesc& d, long long m) {
        auto [it, inserted] = acc.emplace(d.id, term(d, m));
        if (!inserted) it->second.multiplicity += m;
    };
    // the simple over the orbit of e whose character on G_e is u
    auto match = [&](const FElem& e, auto&& u) -> const SimpleDesc& {
        for (const auto& d : e_.simples_for_orbit(e)) {
            bool ok = true;
            for (int g : d.orbit->stabilizer) ok = ok && value_at(d, g) == u(g);
            if (ok) return d;
        }
        throw InternalInconsistency("no simple over the orbit of " + e_.format_f(e) + " matches the product character");
    };
    auto product = [&](int g) { return value_at(a, g) * value_at(b, g); };

    const bool x1 = F.is_identity(x), y1 = F.is_identity(y);
    if (x1 || y1) {
        // cases (1)-(3): a single induced summand over the orbit of the non-identity factor (or 1_F)
        add(match(x1 ? y : x, product), 1);
    } else {
        bool unit_in = false;
        for (const auto& e : reps) {
            if (F.is_identity(e)) {
                unit_in = true;
                continue;
            }
            add(match(e, product), 1);
        }
        if (unit_in) {
            // case (5): |O_x| simples of G restricting to U on G_x; resolved by an exact solve
            HElem target;
            for (int g : a.orbit->stabilizer) target.add({g, one}, product(g) * CycNum(a.orbit->size()));
            SparseEliminator<BasisKey> elim;
            const auto& units = e_.simples_for_orbit(one);
            for (const auto& d : units) elim.insert(e_.character(d).terms());
            auto sol = elim.solve(target.terms());
            if (!sol) throw InternalInconsistency("case (5) family does not exist for " + a.id + " * " + b.id);
            long long count = 0;
            for (std::size_t i = 0; i < units.size(); ++i) {
                const long long m = as_multiplicity((*sol)[i], "case (5) for " + a.id + " * " + b.id);
                if (m == 0) continue;
                for (int g : a.orbit->stabilizer) {
                    if (value_at(units[i], g) != product(g)) {
                        throw InternalInconsistency("case (5): " + units[i].id + " does not restrict to U");
                    }
                }
                add(units[i], m);
                count += m;
            }
            if (count != a.orbit->size()) throw InternalInconsistency("case (5): family has the wrong size");
        }
    }
    FusionRow row{a.id, b.id, a.dim_total, b.dim_total, {}};
    for (auto& [id, t] : acc) row.summands.push_back(std::move(t));
    std::sort(row.summands.begin(), row.summands.end(), term_less);
    return row;
}

FusionTable fusion_table(FusionEngine& fe, const std::vector<SimpleDesc>& simples, int radius) {
    FusionTable t;
    t.simples = simples;
    t.radius = radius;
    t.unit_id = fe.comodules().unit_simple().id;
    for (const auto& a : simples)
        for (const auto& b : simples) t.rows.push_back(fe.decompose(a, b));
    for (const auto& s : simples) {
        t.duals[s.id] = fe.dual_of(s).id;
        t.indicators[s.id] = fe.fs_indicator(s);
    }
    const std::size_t n = simples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.rows[i * n + j].summands != t.rows[j * n + i].summands) t.asymmetric.emplace_back(simples[i].id, simples[j].id);
    return t;
}

CheckReport verify_based_ring(const FusionTable& t, FusionEngine* fe, std::size_t triples) {
    CheckReport rep;
    const std::string scope = "fusion table, radius " + std::to_string(t.radius);
    const ComoduleEngine* ce = fe ? &fe->comodules() : nullptr;

    auto row = [&](const std::string& l, const std::string& r) -> const FusionRow* {
        if (const auto* p = t.find(l, r)) return p;
        if (!fe) return nullptr;
        return &fe->decompose(ce->find(l), ce->find(r));
    };
    auto dual = [&](const std::string& id) -> std::optional<std::string> {
        if (auto it = t.duals.find(id); it != t.duals.end()) return it->second;
        if (!fe) return std::nullopt;
        return fe->dual_of(ce->find(id)).id;
    };
    auto single = [](const FusionRow& r, const std::string& id) {
        return r.summands.size() == 1 && r.summands[0].id == id && r.summands[0].multiplicity == 1;
    };

    auto& unit = rep.add("unit_law", scope);
    for (const auto& s : t.simples) {
        for (bool left : {true, false}) {
            const FusionRow* r = left ? row(t.unit_id, s.id) : row(s.id, t.unit_id);
            if (!r) continue;
            unit.record(single(*r, s.id), [&] { return Json{{"simple", s.id}, {"row", r->to_json()}}; });
        }
    }

    auto& unit_mult = rep.add("unit_multiplicity", scope);
    auto& dims = rep.add("dimension_homomorphism", scope);
    auto& anti = rep.add("duality_anti_involution", scope);
    for (const auto& r : t.rows) {
        long long total = 0;
        for (const auto& s : r.summands) total += s.multiplicity * s.dim;
        dims.record(total == static_cast<long long>(r.left_dim) * r.right_dim, [&] { return r.to_json(); });

        if (auto dl = dual(r.left)) {
            const long long expect = *dl == r.right ? 1 : 0;
            unit_mult.record(r.multiplicity_of(t.unit_id) == expect, [&] {
                return Json{{"row", r.to_json()}, {"expected_unit_multiplicity", expect}};
            });
        }
        // N_{ij}^k = N_{j* i*}^{k*}
        auto dl = dual(r.left), dr = dual(r.right);
        if (!dl || !dr) continue;
        const FusionRow* mirror = row(*dr, *dl);
        if (!mirror) continue;
        bool ok = mirror->summands.size() == r.summands.size();
        bool known = true;
        for (const auto& s : r.summands) {
            auto ds = dual(s.id);
            if (!ds) {
                known = false;
                break;
            }
            ok = ok && mirror->multiplicity_of(*ds) == s.multiplicity;
        }
        if (!known) continue;
        anti.record(ok, [&] { return Json{{"row", r.to_json()}, {"dual_row", mirror->to_json()}}; });
    }

    auto& invol = rep.add("dual_involution", scope);
    auto& ind = rep.add("indicator_duality", scope);
    for (const auto& s : t.simples) {
        auto d = dual(s.id);
        if (!d) continue;
        if (auto dd = dual(*d)) invol.record(*dd == s.id, [&] { return Json{{"simple", s.id}, {"dual", *d}, {"double_dual", *dd}}; });
        auto a = t.indicators.find(s.id), b = t.indicators.find(*d);
        if (a != t.indicators.end() && b != t.indicators.end()) {
            ind.record(a->second == b->second, [&] {
                return Json{{"simple", s.id}, {"indicator", a->second}, {"dual", *d}, {"dual_indicator", b->second}};
            });
        }
    }

    auto& assoc = rep.add("associativity", scope + ", sampled triples");
    if (!t.simples.empty()) {
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<std::size_t> pick(0, t.simples.size() - 1);
        for (std::size_t n = 0; n < triples; ++n) {
            const auto& a = t.simples[pick(rng)].id;
            const auto& b = t.simples[pick(rng)].id;
            const auto& c = t.simples[pick(rng)].id;
            const FusionRow* ab = row(a, b);
            const FusionRow* bc = row(b, c);
            if (!ab || !bc) continue;
            std::map<std::string, long long> lhs, rhs;
            bool complete = true;
            for (const auto& k : ab->summands) {
                const FusionRow* kc = row(k.id, c);
                if (!kc) {
                    complete = false;
                    break;
                }
                for (const auto& s : kc->summands) lhs[s.id] += k.multiplicity * s.multiplicity;
            }
            for (const auto& k : bc->summands) {
                if (!complete) break;
                const FusionRow* ak = row(a, k.id);
                if (!ak) {
                    complete = false;
                    break;
                }
                for (const auto& s : ak->summands) rhs[s.id] += k.multiplicity * s.multiplicity;
            }
            if (!complete) continue;
            assoc.record(lhs == rhs, [&] { return Json{{"triple", Json::array({a, b, c})}}; });
        }
    }
    return rep;
}

} // namespace bicross
