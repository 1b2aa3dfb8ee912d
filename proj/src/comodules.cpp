#include "bicross/comodules.hpp"

#include <algorithm>

#include "bicross/config.hpp"
#include "bicross/error.hpp"
#include "bicross/linalg.hpp"

namespace bicross {

namespace {

CycNum parse_literal(const Json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return CycNum(v.get<std::int64_t>());
        if (v.is_string()) return CycNum::parse(v.get<std::string>());
    } catch (const Error& e) {
        throw InvalidInput(where + ": " + e.what());
    }
    throw InvalidInput(where + ": expected a cyclotomic literal");
}

int stabilizer_position(const Orbit& o, int g) {
    auto it = std::lower_bound(o.stabilizer.begin(), o.stabilizer.end(), g);
    if (it == o.stabilizer.end() || *it != g) return -1;
    return static_cast<int>(it - o.stabilizer.begin());
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
    const std::size_t n = a.size();
    CycMatrix r(n, std::vector<CycNum>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

} // namespace

bool simple_less(const SimpleDesc& a, const SimpleDesc& b) {
    if (a.rep() != b.rep()) return a.rep() < b.rep();
    return a.index < b.index;
}

ComoduleEngine::ComoduleEngine(std::shared_ptr<const HopfAlgebra> h, std::map<FElem, Json> user_tables,
                               int max_extension_order)
    : h_(std::move(h)), user_tables_(std::move(user_tables)), max_extension_order_(max_extension_order) {}

CfBasis ComoduleEngine::cf_subcoalgebra(const FElem& f) const {
    CfBasis b;
    b.orbit = pair().orbit_of(f);
    for (const auto& e : b.orbit->elements)
        for (int g = 0; g < h_->G().order(); ++g) b.keys.push_back({g, e});
    std::sort(b.keys.begin(), b.keys.end());
    b.is_simple = b.orbit->stabilizer.size() == 1;
    b.antipode_stable = !pair().g_f_finv(b.orbit->rep).empty();
    return b;
}

Json ComoduleEngine::user_rows_by_stabilizer(const Orbit& o) const {
    const Json& rows = user_tables_.at(o.rep);
    const std::string where = "character table for " + format_f(o.rep);
    if (!rows.is_array()) throw InvalidInput(where + ": expected an array of rows");
    Json out = Json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Json row = rows[r];
        if (!row.is_object() || !row.contains("values") || !row["values"].is_object()) {
            throw InvalidInput(where + ", row " + std::to_string(r) + ": needs a 'values' object");
        }
        Json vals = Json::object();
        for (auto it = row["values"].begin(); it != row["values"].end(); ++it) {
            const std::string path = where + ", row " + std::to_string(r) + ", element '" + it.key() + "'";
            const int g = parse_g_ref(Json(it.key()), h_->G(), path);
            const int pos = stabilizer_position(o, g);
            if (pos < 0) throw InvalidInput(path + ": not in the stabilizer");
            vals[std::to_string(pos)] = it.value();
        }
        row["values"] = vals;
        out.push_back(row);
    }
    return out;
}

CharTable ComoduleEngine::build_table(const Orbit& o, const TwoCocycle& beta) const {
    if (user_tables_.count(o.rep)) {
        try {
            return user_char_table(beta.group_ptr(), user_rows_by_stabilizer(o), &beta);
        } catch (const InvalidInput& e) {
            throw InvalidInput("orbit of " + format_f(o.rep) + ": " + e.what());
        }
    }
    return twisted_char_table(beta, max_extension_order_);
}

const OrbitSimples& ComoduleEngine::orbit_simples(const FElem& f) const {
    auto orbit = pair().orbit_of(f);
    if (auto it = orbits_.find(orbit->rep); it != orbits_.end()) return *it->second;

    auto os = std::make_unique<OrbitSimples>(OrbitSimples{orbit, beta_for_orbit(pair(), h_->tau(), *orbit), {}, {}});
    os->table = build_table(*orbit, os->beta);
    const int t = static_cast<int>(orbit->transversal.size());
    long long total = 0;
    for (std::size_t i = 0; i < os->table.chars.size(); ++i) {
        SimpleDesc d;
        d.id = format_f(orbit->rep) + ":" + std::to_string(i);
        d.orbit = orbit;
        d.index = static_cast<int>(i);
        d.chi = os->table.chars[i];
        d.dim_v = d.chi.dim;
        d.dim_total = t * d.dim_v;
        total += static_cast<long long>(d.dim_total) * d.dim_total;
        os->simples.push_back(std::move(d));
    }
    const long long expected = static_cast<long long>(h_->G().order()) * orbit->size();
    if (total != expected) {
        throw InternalInconsistency("orbit of " + format_f(orbit->rep) + ": sum of squared dimensions " +
                                    std::to_string(total) + " != |G||O_f| = " + std::to_string(expected));
    }
    const FElem rep = orbit->rep;
    return *orbits_.emplace(rep, std::move(os)).first->second;
}

const SimpleDesc& ComoduleEngine::simple(const FElem& f, int index) const {
    const auto& s = simples_for_orbit(f);
    if (index < 0 || index >= static_cast<int>(s.size())) {
        throw InvalidInput("orbit of " + format_f(pair().canonical(f)) + " has " + std::to_string(s.size()) +
                           " simples; index " + std::to_string(index) + " is out of range");
    }
    return s[static_cast<std::size_t>(index)];
}

const SimpleDesc& ComoduleEngine::find(const std::string& id) const {
    auto sep = id.rfind(':');
    if (sep == std::string::npos) sep = id.rfind(',');
    if (sep == std::string::npos || sep == 0 || sep + 1 == id.size()) {
        throw InvalidInput("simple id '" + id + "' must look like <f>:<index>");
    }
    const std::string idx = id.substr(sep + 1);
    if (!std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }) || idx.size() > 6) {
        throw InvalidInput("simple id '" + id + "': bad index '" + idx + "'");
    }
    const FElem f = pair().F().parse(id.substr(0, sep));
    return simple(f, std::stoi(idx));
}

const SimpleDesc& ComoduleEngine::unit_simple() const {
    for (const auto& d : simples_for_orbit(pair().F().identity())) {
        if (std::all_of(d.chi.values.begin(), d.chi.values.end(), [](const CycNum& v) { return v.is_one(); })) return d;
    }
    throw InternalInconsistency("no trivial character over the orbit of the identity");
}

const HElem& ComoduleEngine::character(const SimpleDesc& d) const {
    const auto key = std::make_pair(d.rep(), d.index);
    if (auto it = characters_.find(key); it != characters_.end()) return it->second;
    const FiniteGroup& G = h_->G();
    const Orbit& o = *d.orbit;
    const TauCocycle& tau = h_->tau();
    HElem chi;
    for (std::size_t zp = 0; zp < o.transversal.size(); ++zp) {
        const int z = o.transversal[zp];
        const int zi = G.inv(z);
        for (std::size_t gp = 0; gp < o.stabilizer.size(); ++gp) {
            const CycNum& c = d.chi.values[gp];
            if (c.is_zero()) continue;
            const int g = o.stabilizer[gp];
            const int conj = G.mul(G.mul(zi, g), z);
            const CycNum coeff = tau(zi, g, o.rep).inverse() * tau(conj, zi, o.rep) * c;
            chi.add({conj, o.transversal_image[zp]}, coeff);
        }
    }
    return characters_.emplace(key, std::move(chi)).first->second;
}

HElem ComoduleEngine::character_inverse_form(const SimpleDesc& d) const {
    const FiniteGroup& G = h_->G();
    const Orbit& o = *d.orbit;
    const TauCocycle& tau = h_->tau();
    HElem chi;
    for (std::size_t zp = 0; zp < o.transversal.size(); ++zp) {
        const int z = o.transversal[zp];
        const int zi = G.inv(z);
        for (int g : o.stabilizer) {
            const int gi = G.inv(g);
            const CycNum& c = d.chi.values[static_cast<std::size_t>(stabilizer_position(o, gi))];
            if (c.is_zero()) continue;
            const int conj = G.mul(G.mul(zi, gi), z);
            chi.add({conj, o.transversal_image[zp]}, tau(zi, gi, o.rep).inverse() * tau(conj, zi, o.rep) * c);
        }
    }
    return chi;
}

std::vector<SimpleDesc> ComoduleEngine::enumerate(int radius) const {
    std::vector<SimpleDesc> out;
    for (const auto& rep : pair().orbit_reps(radius)) {
        const auto& s = simples_for_orbit(rep);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::vector<CycMatrix> ComoduleEngine::user_matrices(const SimpleDesc& d) const {
    auto it = user_tables_.find(d.rep());
    const std::string where = "simple " + d.id;
    if (it == user_tables_.end() || !it->second.is_array() || d.index >= static_cast<int>(it->second.size()) ||
        !it->second[static_cast<std::size_t>(d.index)].contains("matrices")) {
        throw ProviderUnavailable(where + ": no coaction matrices supplied");
    }
    const Json& m = it->second[static_cast<std::size_t>(d.index)]["matrices"];
    if (!m.is_object()) throw InvalidInput(where + ": 'matrices' must be an object");
    const Orbit& o = *d.orbit;
    std::vector<CycMatrix> out(o.stabilizer.size());
    std::vector<bool> seen(o.stabilizer.size(), false);
    for (auto e = m.begin(); e != m.end(); ++e) {
        const std::string path = where + ", matrix for '" + e.key() + "'";
        const int pos = stabilizer_position(o, parse_g_ref(Json(e.key()), h_->G(), path));
        if (pos < 0) throw InvalidInput(path + ": not in the stabilizer");
        const Json& rows = e.value();
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d.dim_v)) {
            throw InvalidInput(path + ": expected " + std::to_string(d.dim_v) + " rows");
        }
        CycMatrix a;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(d.dim_v)) {
                throw InvalidInput(path + ": row " + std::to_string(r) + " has the wrong length");
            }
            std::vector<CycNum> row;
            for (const auto& v : rows[r]) row.push_back(parse_literal(v, path));
            a.push_back(std::move(row));
        }
        out[static_cast<std::size_t>(pos)] = std::move(a);
        seen[static_cast<std::size_t>(pos)] = true;
    }
    for (std::size_t p = 0; p < seen.size(); ++p) {
        if (!seen[p]) throw InvalidInput(where + ": missing matrix for " + h_->G().label(o.stabilizer[p]));
    }
    return out;
}

std::vector<CycMatrix> ComoduleEngine::default_matrices(const SimpleDesc& d) const {
    if (d.dim_v == 1) {
        std::vector<CycMatrix> out;
        for (const auto& v : d.chi.values) out.push_back({{v}});
        return out;
    }
    return user_matrices(d);
}

std::vector<std::vector<HElem>> ComoduleEngine::coefficient_matrix(const SimpleDesc& d,
                                                                   const std::vector<CycMatrix>& a) const {
    const FiniteGroup& G = h_->G();
    const Orbit& o = *d.orbit;
    const TauCocycle& tau = h_->tau();
    const auto& os = orbit_simples(o.rep);
    const FiniteGroup& S = os.beta.group();
    const std::size_t m = static_cast<std::size_t>(d.dim_v);
    const std::string where = "coaction matrices for " + d.id;

    if (a.size() != o.stabilizer.size()) throw InvalidInput(where + ": need one matrix per stabilizer element");
    for (const auto& x : a) {
        if (x.size() != m || std::any_of(x.begin(), x.end(), [&](const auto& r) { return r.size() != m; })) {
            throw InvalidInput(where + ": matrices must be " + std::to_string(m) + "x" + std::to_string(m));
        }
    }
    for (std::size_t p = 0; p < a.size(); ++p) {
        CycNum tr(0);
        for (std::size_t i = 0; i < m; ++i) tr += a[p][i][i];
        if (tr != d.chi.values[p]) {
            throw InvalidInput(where + ": trace at " + G.label(o.stabilizer[p]) + " is " + tr.to_string() +
                               ", character value is " + d.chi.values[p].to_string());
        }
    }
    for (int x = 0; x < S.order(); ++x) {
        for (int y = 0; y < S.order(); ++y) {
            CycMatrix rhs = a[static_cast<std::size_t>(S.mul(x, y))];
            for (auto& row : rhs)
                for (auto& v : row) v *= os.beta(x, y);
            if (mat_mul(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]) != rhs) {
                throw InvalidInput(where + ": not a comodule, A(" + G.label(o.stabilizer[x]) + ") A(" +
                                   G.label(o.stabilizer[y]) + ") != beta A(product)");
            }
        }
    }

    const std::size_t t = o.transversal.size();
    const std::size_t n = t * m;
    std::vector<std::vector<HElem>> c(n, std::vector<HElem>(n));
    for (std::size_t zp2 = 0; zp2 < t; ++zp2) {
        const int zi2 = G.inv(o.transversal[zp2]);
        for (std::size_t zp = 0; zp < t; ++zp) {
            const int z = o.transversal[zp];
            const int zi = G.inv(z);
            for (std::size_t gp = 0; gp < o.stabilizer.size(); ++gp) {
                const int g = o.stabilizer[gp];
                const int key_g = G.mul(G.mul(zi2, g), z);
                const CycNum factor = tau(zi2, g, o.rep).inverse() * tau(key_g, zi, o.rep);
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t i = 0; i < m; ++i) {
                        const CycNum& v = a[gp][j][i];
                        if (!v.is_zero()) c[zp2 * m + j][zp * m + i].add({key_g, o.transversal_image[zp]}, factor * v);
                    }
            }
        }
    }

    // postconditions
    HElem trace;
    for (std::size_t r = 0; r < n; ++r) trace += c[r][r];
    if (trace != character(d)) throw InternalInconsistency(where + ": trace of the coefficient matrix != character");
    SparseEliminator<BasisKey> elim;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            if (h_->counit(c[r][s]) != CycNum(r == s ? 1 : 0)) {
                throw InternalInconsistency(where + ": counit fails at entry (" + std::to_string(r) + "," +
                                            std::to_string(s) + ")");
            }
            HTensor expect;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [k1, c1] : c[r][k].terms())
                    for (const auto& [k2, c2] : c[k][s].terms()) expect.add({k1, k2}, c1 * c2);
            if (!(h_->comul(c[r][s]) == expect)) {
                throw InternalInconsistency(where + ": comultiplication is not multiplicative at entry (" +
                                            std::to_string(r) + "," + std::to_string(s) + ")");
            }
            elim.insert(c[r][s].terms());
        }
    }
    if (elim.rank() != n * n) {
        throw InternalInconsistency(where + ": coefficient elements have rank " + std::to_string(elim.rank()) +
                                    ", expected " + std::to_string(n * n));
    }
    return c;
}

std::vector<HElem> ComoduleEngine::coefficient_basis(const SimpleDesc& d, const std::vector<CycMatrix>& a) const {
    std::vector<HElem> out;
    for (auto& row : coefficient_matrix(d, a))
        for (auto& e : row) out.push_back(std::move(e));
    return out;
}

Json ComoduleEngine::to_json(const SimpleDesc& d) const {
    const FiniteGroup& G = h_->G();
    Json stab = Json::array(), trans = Json::array(), chi = Json::object();
    for (std::size_t p = 0; p < d.orbit->stabilizer.size(); ++p) {
        stab.push_back(G.label(d.orbit->stabilizer[p]));
        chi[G.label(d.orbit->stabilizer[p])] = d.chi.values[p].to_string();
    }
    for (int z : d.orbit->transversal) trans.push_back(G.label(z));
    return Json{{"id", d.id},
                {"orbit_rep", format_f(d.rep())},
                {"orbit_size", d.orbit->size()},
                {"index", d.index},
                {"dim_v", d.dim_v},
                {"dim_total", d.dim_total},
                {"stabilizer", stab},
                {"transversal", trans},
                {"provenance", to_string(orbit_simples(d.rep()).table.provenance)},
                {"chi", chi}};
}

} // namespace bicross
