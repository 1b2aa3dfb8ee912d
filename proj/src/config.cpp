#include "bicross/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "bicross/error.hpp"

namespace bicross {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw InvalidInput(path + ": " + msg); }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(path, "missing field '" + key + "'");
    return *it;
}

long long as_int(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) bad(path, "expected an integer");
    return v.get<long long>();
}

std::string as_string(const Json& v, const std::string& path) {
    if (!v.is_string()) bad(path, "expected a string");
    return v.get<std::string>();
}

CycNum parse_value(const Json& v, const std::string& path) {
    try {
        if (v.is_number_integer()) return CycNum(Rational(v.get<std::int64_t>()));
        return CycNum::parse(as_string(v, path));
    } catch (const InvalidInput& e) {
        bad(path, e.what());
    }
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) bad(path, "unknown field '" + it.key() + "'");
    }
}

std::shared_ptr<const FiniteGroup> parse_group(const Json& spec, const std::string& path, int max_order) {
    if (!spec.is_object()) bad(path, "expected a group description object");
    check_keys(spec, {"cyclic", "abelian", "permutations", "degree", "table", "labels"}, path);
    try {
        std::shared_ptr<FiniteGroup> g;
        if (spec.contains("cyclic")) {
            const long long n = as_int(spec["cyclic"], path + ".cyclic");
            if (n < 1 || n > max_order) bad(path + ".cyclic", "order must be in 1.." + std::to_string(max_order));
            g = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(static_cast<int>(n)));
        } else if (spec.contains("abelian")) {
            const Json& dims = spec["abelian"];
            if (!dims.is_array() || dims.empty()) bad(path + ".abelian", "expected a nonempty array of orders");
            std::vector<int> d;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                const long long n = as_int(dims[i], path + ".abelian[" + std::to_string(i) + "]");
                if (n < 1 || n > max_order) bad(path + ".abelian[" + std::to_string(i) + "]", "bad factor order");
                d.push_back(static_cast<int>(n));
            }
            g = std::make_shared<FiniteGroup>(FiniteGroup::abelian(d, max_order));
        } else if (spec.contains("permutations")) {
            const long long degree = as_int(require(spec, "degree", path), path + ".degree");
            if (degree < 1 || degree > 64) bad(path + ".degree", "degree must be in 1..64");
            const Json& gens = spec["permutations"];
            if (!gens.is_array()) bad(path + ".permutations", "expected an array of cycle strings");
            std::vector<Permutation> perms;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const std::string p = path + ".permutations[" + std::to_string(i) + "]";
                try {
                    perms.push_back(parse_cycles(as_string(gens[i], p), static_cast<int>(degree)));
                } catch (const InvalidInput& e) {
                    bad(p, e.what());
                }
            }
            g = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(perms, max_order));
        } else if (spec.contains("table")) {
            const Json& t = spec["table"];
            if (!t.is_array()) bad(path + ".table", "expected an array of rows");
            std::vector<std::vector<int>> table;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::string p = path + ".table[" + std::to_string(i) + "]";
                if (!t[i].is_array()) bad(p, "expected a row array");
                std::vector<int> row;
                for (std::size_t j = 0; j < t[i].size(); ++j) {
                    row.push_back(static_cast<int>(as_int(t[i][j], p + "[" + std::to_string(j) + "]")));
                }
                table.push_back(std::move(row));
            }
            g = std::make_shared<FiniteGroup>(FiniteGroup::from_table(table, max_order));
        } else {
            bad(path, "expected one of 'cyclic', 'abelian', 'permutations', 'table'");
        }
        if (spec.contains("labels")) {
            const Json& l = spec["labels"];
            if (!l.is_array()) bad(path + ".labels", "expected an array of strings");
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(as_string(l[i], path + ".labels"));
            g->set_labels(std::move(labels));
        }
        return g;
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        bad(path, what);
    }
}

std::vector<CycNum> sparse_table(const Json& values, std::size_t size, const std::string& path,
                                 const std::function<std::size_t(const Json&, const std::string&)>& index) {
    std::vector<CycNum> dense(size, CycNum(1));
    if (!values.is_array()) bad(path, "expected an array of entries");
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const std::size_t at = index(values[i], p);
        if (!seen.insert(at).second) bad(p, "duplicate entry");
        const CycNum v = parse_value(require(values[i], "value", p), p + ".value");
        if (v.is_zero()) bad(p + ".value", "cocycle values must be nonzero");
        dense[at] = v;
    }
    return dense;
}

std::vector<int> parse_moduli(const Json& spec, int rank, const std::string& path) {
    const Json& m = require(spec, "moduli", path);
    if (!m.is_array() || static_cast<int>(m.size()) != rank) {
        bad(path + ".moduli", "expected one modulus per coordinate of F (" + std::to_string(rank) + ")");
    }
    std::vector<int> moduli;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const long long v = as_int(m[i], path + ".moduli[" + std::to_string(i) + "]");
        if (v < 1) bad(path + ".moduli[" + std::to_string(i) + "]", "moduli must be positive");
        moduli.push_back(static_cast<int>(v));
    }
    quotient_order(moduli); // validates the size limit
    return moduli;
}

int parse_q_ref(const Json& v, const std::vector<int>& moduli, const std::string& path) {
    std::vector<long long> coords;
    if (v.is_number_integer()) {
        coords.push_back(v.get<long long>());
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(as_int(v[i], path));
    } else {
        bad(path, "expected a residue or residue vector");
    }
    if (coords.size() != moduli.size()) bad(path, "residue vector length must match the moduli");
    int q = 0;
    int stride = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        long long r = coords[i] % moduli[i];
        if (r < 0) r += moduli[i];
        q += static_cast<int>(r) * stride;
        stride *= moduli[i];
    }
    return q;
}

SigmaCocycle parse_sigma(const Json* spec, const MatchedPair& mp, const std::string& path) {
    if (!spec || spec->is_null()) return SigmaCocycle::trivial();
    const std::string type = as_string(require(*spec, "type", path), path + ".type");
    const int ng = mp.G().order();
    if (type == "trivial") {
        check_keys(*spec, {"type"}, path);
        return SigmaCocycle::trivial();
    }
    if (type == "table") {
        check_keys(*spec, {"type", "values"}, path);
        if (!mp.F().is_finite()) bad(path, "table cocycles need a finite F; use quotient_lift for Z^r");
        const int nf = mp.F().finite_group().order();
        auto dense = sparse_table(require(*spec, "values", path), static_cast<std::size_t>(ng) * nf * nf,
                                  path + ".values", [&](const Json& e, const std::string& p) {
                                      const int g = parse_g_ref(require(e, "g", p), mp.G(), p + ".g");
                                      const int f = parse_f_ref(require(e, "f", p), mp.F(), p + ".f").index();
                                      const int f2 = parse_f_ref(require(e, "f2", p), mp.F(), p + ".f2").index();
                                      return (static_cast<std::size_t>(g) * nf + f) * nf + f2;
                                  });
        return SigmaCocycle::finite_table(ng, nf, dense);
    }
    if (type == "quotient_lift") {
        check_keys(*spec, {"type", "values", "moduli"}, path);
        if (mp.F().is_finite()) bad(path, "quotient_lift cocycles need F = Z^r");
        auto moduli = parse_moduli(*spec, mp.F().rank(), path);
        const int nq = quotient_order(moduli);
        auto dense = sparse_table(require(*spec, "values", path), static_cast<std::size_t>(ng) * nq * nq,
                                  path + ".values", [&](const Json& e, const std::string& p) {
                                      const int g = parse_g_ref(require(e, "g", p), mp.G(), p + ".g");
                                      const int q = parse_q_ref(require(e, "q", p), moduli, p + ".q");
                                      const int q2 = parse_q_ref(require(e, "q2", p), moduli, p + ".q2");
                                      return (static_cast<std::size_t>(g) * nq + q) * nq + q2;
                                  });
        return SigmaCocycle::quotient_lift(ng, moduli, dense);
    }
    bad(path + ".type", "expected 'trivial', 'table' or 'quotient_lift'");
}

TauCocycle parse_tau(const Json* spec, const MatchedPair& mp, const std::string& path) {
    if (!spec || spec->is_null()) return TauCocycle::trivial();
    const std::string type = as_string(require(*spec, "type", path), path + ".type");
    const int ng = mp.G().order();
    if (type == "trivial") {
        check_keys(*spec, {"type"}, path);
        return TauCocycle::trivial();
    }
    if (type == "table") {
        check_keys(*spec, {"type", "values"}, path);
        if (!mp.F().is_finite()) bad(path, "table cocycles need a finite F; use quotient_lift for Z^r");
        const int nf = mp.F().finite_group().order();
        auto dense = sparse_table(require(*spec, "values", path), static_cast<std::size_t>(ng) * ng * nf,
                                  path + ".values", [&](const Json& e, const std::string& p) {
                                      const int g = parse_g_ref(require(e, "g", p), mp.G(), p + ".g");
                                      const int h = parse_g_ref(require(e, "h", p), mp.G(), p + ".h");
                                      const int f = parse_f_ref(require(e, "f", p), mp.F(), p + ".f").index();
                                      return (static_cast<std::size_t>(g) * ng + h) * nf + f;
                                  });
        return TauCocycle::finite_table(ng, nf, dense);
    }
    if (type == "quotient_lift") {
        check_keys(*spec, {"type", "values", "moduli"}, path);
        if (mp.F().is_finite()) bad(path, "quotient_lift cocycles need F = Z^r");
        auto moduli = parse_moduli(*spec, mp.F().rank(), path);
        const int nq = quotient_order(moduli);
        auto dense = sparse_table(require(*spec, "values", path), static_cast<std::size_t>(ng) * ng * nq,
                                  path + ".values", [&](const Json& e, const std::string& p) {
                                      const int g = parse_g_ref(require(e, "g", p), mp.G(), p + ".g");
                                      const int h = parse_g_ref(require(e, "h", p), mp.G(), p + ".h");
                                      const int q = parse_q_ref(require(e, "q", p), moduli, p + ".q");
                                      return (static_cast<std::size_t>(g) * ng + h) * nq + q;
                                  });
        return TauCocycle::quotient_lift(ng, moduli, dense);
    }
    bad(path + ".type", "expected 'trivial', 'table' or 'quotient_lift'");
}

std::shared_ptr<const MatchedPair> parse_actions(const Json* spec, std::shared_ptr<const FiniteGroup> g, FGroup f,
                                                 const std::string& path) {
    const int ng = g->order();
    std::string type = "trivial";
    if (spec && !spec->is_null()) type = as_string(require(*spec, "type", path), path + ".type");

    if (!f.is_finite()) {
        if (type == "trivial") {
            check_keys(spec ? *spec : Json::object(), {"type"}, path);
            const int r = f.rank();
            std::vector<IntMatrix> ms(static_cast<std::size_t>(ng), IntMatrix(r, std::vector<long long>(r, 0)));
            for (auto& m : ms)
                for (int i = 0; i < r; ++i) m[i][i] = 1;
            return MatchedPair::with_linear(std::move(g), r, std::move(ms));
        }
        if (type == "linear") {
            check_keys(*spec, {"type", "matrices", "left"}, path);
            if (spec->contains("left")) {
                bad(path + ".left", "a nontrivial left action on Z^r is not supported; linear actions use a trivial left action");
            }
            const Json& mats = require(*spec, "matrices", path);
            if (!mats.is_array() || static_cast<int>(mats.size()) != ng) {
                bad(path + ".matrices", "expected one matrix per element of G (" + std::to_string(ng) + ")");
            }
            const int r = f.rank();
            std::vector<IntMatrix> ms;
            for (int a = 0; a < ng; ++a) {
                const std::string p = path + ".matrices[" + std::to_string(a) + "]";
                const Json& m = mats[static_cast<std::size_t>(a)];
                if (!m.is_array() || static_cast<int>(m.size()) != r) bad(p, "expected " + std::to_string(r) + " rows");
                IntMatrix im;
                for (int i = 0; i < r; ++i) {
                    const Json& row = m[static_cast<std::size_t>(i)];
                    if (!row.is_array() || static_cast<int>(row.size()) != r) {
                        bad(p + "[" + std::to_string(i) + "]", "expected " + std::to_string(r) + " entries");
                    }
                    std::vector<long long> rr;
                    for (int j = 0; j < r; ++j) rr.push_back(as_int(row[static_cast<std::size_t>(j)], p));
                    im.push_back(std::move(rr));
                }
                ms.push_back(std::move(im));
            }
            try {
                return MatchedPair::with_linear(std::move(g), r, std::move(ms));
            } catch (const InvalidInput& e) {
                bad(path + ".matrices", e.what());
            }
        }
        bad(path + ".type", "F = Z^r supports action types 'trivial' and 'linear'");
    }

    const FiniteGroup& fg = f.finite_group();
    const int nf = fg.order();
    std::vector<int> right(static_cast<std::size_t>(ng) * nf), left(static_cast<std::size_t>(ng) * nf);
    for (int a = 0; a < ng; ++a) {
        for (int x = 0; x < nf; ++x) {
            right[static_cast<std::size_t>(a) * nf + x] = x;
            left[static_cast<std::size_t>(a) * nf + x] = a;
        }
    }
    if (type == "trivial") {
        if (spec) check_keys(*spec, {"type"}, path);
    } else if (type == "conjugation") {
        check_keys(*spec, {"type"}, path);
        if (fg.table() != g->table()) bad(path, "conjugation needs F to be the same group as G (use \"F\": \"same_as_G\")");
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < nf; ++x) right[static_cast<std::size_t>(a) * nf + x] = g->conj(a, x);
    } else if (type == "tables") {
        check_keys(*spec, {"type", "right", "left"}, path);
        auto read = [&](const char* key, std::vector<int>& out, bool to_g) {
            if (!spec->contains(key)) return;
            const Json& t = (*spec)[key];
            const std::string p = path + "." + key;
            if (!t.is_array() || static_cast<int>(t.size()) != ng) bad(p, "expected |G| rows");
            for (int a = 0; a < ng; ++a) {
                const Json& row = t[static_cast<std::size_t>(a)];
                const std::string pr = p + "[" + std::to_string(a) + "]";
                if (!row.is_array() || static_cast<int>(row.size()) != nf) bad(pr, "expected |F| entries");
                for (int x = 0; x < nf; ++x) {
                    const std::string pe = pr + "[" + std::to_string(x) + "]";
                    out[static_cast<std::size_t>(a) * nf + x] =
                        to_g ? parse_g_ref(row[static_cast<std::size_t>(x)], *g, pe)
                             : parse_f_ref(row[static_cast<std::size_t>(x)], f, pe).index();
                }
            }
        };
        if (!spec->contains("right")) bad(path, "missing field 'right'");
        read("right", right, false);
        read("left", left, true);
    } else {
        bad(path + ".type", "finite F supports action types 'trivial', 'conjugation' and 'tables'");
    }
    return MatchedPair::with_tables(std::move(g), std::move(f), std::move(right), std::move(left));
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

int parse_g_ref(const Json& v, const FiniteGroup& g, const std::string& path) {
    if (v.is_number_integer()) {
        const long long i = v.get<long long>();
        if (i < 0 || i >= g.order()) bad(path, "element index " + std::to_string(i) + " out of range");
        return static_cast<int>(i);
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto& labels = g.labels();
        auto it = std::find(labels.begin(), labels.end(), s);
        if (it != labels.end()) return static_cast<int>(it - labels.begin());
        if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return parse_g_ref(Json(std::stoll(s)), g, path);
        }
        bad(path, "unknown element '" + s + "'");
    }
    bad(path, "expected an element index or label");
}

FElem parse_f_ref(const Json& v, const FGroup& f, const std::string& path) {
    try {
        if (f.is_finite()) {
            if (v.is_number_integer()) {
                const long long i = v.get<long long>();
                if (i < 0 || i >= f.finite_group().order()) bad(path, "element index out of range");
                return FElem::finite(static_cast<int>(i));
            }
            if (v.is_string()) return f.parse(v.get<std::string>());
            bad(path, "expected an element index or label");
        }
        if (v.is_number_integer()) {
            if (f.rank() != 1) bad(path, "expected a vector of length " + std::to_string(f.rank()));
            return FElem::vec({v.get<std::int64_t>()});
        }
        if (v.is_array()) {
            if (static_cast<int>(v.size()) != f.rank()) bad(path, "expected a vector of length " + std::to_string(f.rank()));
            FElem::Data d;
            for (std::size_t i = 0; i < v.size(); ++i) d.push_back(as_int(v[i], path));
            return FElem::vec(std::move(d));
        }
        if (v.is_string()) return f.parse(v.get<std::string>());
        bad(path, "expected an integer vector");
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        bad(path, what);
    }
}

std::string config_hash(const Json& doc) {
    const std::string s = doc.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Config parse_config(std::string_view text, const std::string& origin) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InvalidInput(origin + ": JSON syntax error at " + line_col(text, e.byte));
    }
    return parse_config_json(doc, origin);
}

Config parse_config_json(const Json& doc, const std::string& origin) {
    const std::string root = origin;
    if (!doc.is_object()) bad(root, "configuration must be a JSON object");
    check_keys(doc, {"name", "description", "level", "radius", "max_group_order", "G", "F", "actions", "sigma", "tau",
                     "char_tables"},
               root);
    Config cfg;
    cfg.source = doc;
    cfg.hash = config_hash(doc);
    cfg.name = doc.contains("name") ? as_string(doc["name"], root + ".name") : std::string("unnamed");

    if (doc.contains("max_group_order")) {
        const long long m = as_int(doc["max_group_order"], root + ".max_group_order");
        if (m < 1 || m > 256) bad(root + ".max_group_order", "must be in 1..256");
        cfg.max_group_order = static_cast<int>(m);
    }
    if (doc.contains("radius")) {
        const long long r = as_int(doc["radius"], root + ".radius");
        if (r < 0 || r > 64) bad(root + ".radius", "must be in 0..64");
        cfg.radius = static_cast<int>(r);
    }

    auto g = parse_group(require(doc, "G", root), root + ".G", cfg.max_group_order);

    FGroup f = FGroup::free_abelian(1);
    const Json& fspec = require(doc, "F", root);
    const std::string fpath = root + ".F";
    if (fspec.is_string()) {
        if (fspec.get<std::string>() != "same_as_G") bad(fpath, "expected \"same_as_G\" or an object");
        f = FGroup::finite(g);
    } else if (fspec.is_object() && fspec.contains("free_abelian")) {
        check_keys(fspec, {"free_abelian"}, fpath);
        const long long r = as_int(fspec["free_abelian"], fpath + ".free_abelian");
        if (r < 1 || r > 16) bad(fpath + ".free_abelian", "rank must be in 1..16");
        f = FGroup::free_abelian(static_cast<int>(r));
    } else {
        f = FGroup::finite(parse_group(fspec, fpath, cfg.max_group_order));
    }

    cfg.pair = parse_actions(doc.contains("actions") ? &doc["actions"] : nullptr, g, f, root + ".actions");
    SigmaCocycle sigma = parse_sigma(doc.contains("sigma") ? &doc["sigma"] : nullptr, *cfg.pair, root + ".sigma");
    TauCocycle tau = parse_tau(doc.contains("tau") ? &doc["tau"] : nullptr, *cfg.pair, root + ".tau");

    long long level = g->exponent();
    level = lcm_ll(level, sigma.table().level());
    level = lcm_ll(level, tau.table().level());
    if (doc.contains("level")) {
        const long long l = as_int(doc["level"], root + ".level");
        if (l < 1 || l > kMaxLevel) bad(root + ".level", "must be in 1.." + std::to_string(kMaxLevel));
        level = lcm_ll(level, l);
    }
    if (level > kMaxLevel) bad(root, "working level " + std::to_string(level) + " exceeds " + std::to_string(kMaxLevel));
    cfg.level = static_cast<int>(level);

    cfg.hopf = std::make_shared<const HopfAlgebra>(cfg.pair, std::move(sigma), std::move(tau));

    if (doc.contains("char_tables")) {
        const Json& ct = doc["char_tables"];
        const std::string p = root + ".char_tables";
        if (!ct.is_array()) bad(p, "expected an array");
        for (std::size_t i = 0; i < ct.size(); ++i) {
            const std::string pi = p + "[" + std::to_string(i) + "]";
            const FElem fe = parse_f_ref(require(ct[i], "f", pi), cfg.pair->F(), pi + ".f");
            const FElem rep = cfg.pair->canonical(fe);
            if (!cfg.user_char_tables.emplace(rep, require(ct[i], "rows", pi)).second) {
                bad(pi, "duplicate character table for the orbit of " + cfg.pair->F().format(rep));
            }
        }
    }
    return cfg;
}

Config load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.filename().string());
}

std::filesystem::path preset_dir() {
    if (const char* env = std::getenv("BICROSS_PRESET_DIR"); env && *env) return env;
#ifdef BICROSS_DEFAULT_PRESET_DIR
    return BICROSS_DEFAULT_PRESET_DIR;
#else
    return "presets";
#endif
}

std::filesystem::path preset_path(const std::string& name) {
    std::string file = name;
    std::replace(file.begin(), file.end(), ':', '_');
    if (file.empty() || file.find('/') != std::string::npos || file.find("..") != std::string::npos) {
        throw InvalidInput("bad preset name '" + name + "'");
    }
    return preset_dir() / (file + ".json");
}

Config load_preset(const std::string& name) {
    const auto path = preset_path(name);
    if (!std::filesystem::exists(path)) throw InvalidInput("unknown preset '" + name + "' (looked for " + path.string() + ")");
    Config cfg = load_config_file(path);
    return cfg;
}

std::vector<std::string> list_presets() {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(preset_dir(), ec)) {
        if (e.path().extension() != ".json") continue;
        std::string name = e.path().stem().string();
        // parametrized families are listed as "family:parameter"
        for (const std::string family : {"h_z_z2n_", "z_poly_zp_", "drinfeld_"}) {
            if (name.rfind(family, 0) == 0 && name.size() > family.size()) {
                name[family.size() - 1] = ':';
                break;
            }
        }
        out.push_back(name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bicross
