// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicross/cocycles.hpp"
#include "bicross/commands.hpp"
#include "bicross/comodules.hpp"
#include "bicross/config.hpp"
#include "bicross/error.hpp"
#include "bicross/fusion.hpp"
#include "bicross/linalg.hpp"
#include "bicross/verification.hpp"

using namespace bicross;

namespace {

// Thrown by expect(); carries the first failed condition.
struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

struct Setup {
    Config cfg;
    ComoduleEngine ce;
    FusionEngine fe;
    explicit Setup(const std::string& preset)
        : cfg(load_preset(preset)), ce(cfg.hopf, cfg.user_char_tables), fe(ce) {}
};

std::map<std::string, long long> as_map(const FusionRow& r) {
    std::map<std::string, long long> m;
    for (const auto& t : r.summands) m[t.id] = t.multiplicity;
    return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Radius used when a criterion says "the ball of radius 4".
constexpr int kBall = 4;

std::string criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> names{"h_z_z2", "h_z_z2n:2", "h_z_z2n:3", "z_poly_zp:3", "drinfeld:S3"};
    const std::vector<std::string> required{"associativity",     "unit_laws",        "coassociativity",
                                            "counit_laws",       "antipode_law",     "antipode_squared_identity",
                                            "left_integral_law", "integral_normalized", "comultiplication_multiplicative",
                                            "counit_multiplicative"};
    std::uint64_t instances = 0;
    for (const auto& name : names) {
        const Config cfg = load_preset(name);
        const auto rep = verify_hopf(*cfg.hopf, 3);
        for (const auto& c : required) {
            const Check* ch = rep.find(c);
            expect(ch != nullptr, name + ": missing check " + c);
            expect(ch->instances > 0, name + ": no instances of " + c);
            expect(ch->passed(), name + ": " + c + " violated");
        }
        expect(rep.passed(), name + ": Hopf report failed");
        for (const auto& c : rep.checks) instances += c.instances;
    }
    const double secs = seconds_since(t0);
    expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << names.size() << " presets, " << instances << " instances, " << secs << " s";
    return s.str();
}

std::string criterion2() {
    int presets = 0, orbits = 0;
    for (const auto& name : list_presets()) {
        Setup s(name);
        const auto audit = dimension_audit(s.ce, s.cfg.radius);
        for (const auto& row : audit.rows)
            expect(row.passed(), name + ": orbit " + s.ce.format_f(row.rep) + " " + row.error);
        expect(!audit.rows.empty(), name + ": no orbits");
        ++presets;
        orbits += static_cast<int>(audit.rows.size());
    }
    Setup s3("drinfeld:S3");
    std::vector<int> dims;
    long long total = 0;
    for (const auto& d : s3.ce.enumerate(0)) {
        dims.push_back(d.dim_total);
        total += static_cast<long long>(d.dim_total) * d.dim_total;
    }
    expect(dims == std::vector<int>{1, 1, 2, 3, 3, 2, 2, 2}, "D(S3) simple dimensions");
    expect(total == 36, "D(S3) sum of squares");
    return std::to_string(presets) + " presets, " + std::to_string(orbits) + " orbits; D(S3) dims 1,1,2,3,3,2,2,2 sum 36";
}

std::string criterion3() {
    Setup s("h_z_z2");
    const HopfAlgebra& h = *s.cfg.hopf;
    const int one = h.G().identity();
    const int g = 1 - one;
    auto zf = [](long long v) { return FElem::vec({v}); };
    auto e = [&](long long i) { return HElem::basis(one, zf(-i)); };
    auto f = [&](long long i) { return HElem::basis(g, zf(i)); };
    int checked = 0;
    for (long long i = -5; i <= 5; ++i) {
        for (long long j = -5; j <= 5; ++j) {
            expect(h.mul(e(i), e(j)) == e(i + j), "e_i e_j");
            expect(h.mul(f(i), f(j)) == f(i + j), "f_i f_j");
            expect(h.mul(e(i), f(j)).is_zero(), "e_i f_j");
            checked += 3;
        }
        HTensor de;
        de.add({BasisKey{one, zf(-i)}, BasisKey{one, zf(-i)}}, 1);
        de.add({BasisKey{g, zf(i)}, BasisKey{g, zf(-i)}}, 1);
        expect(h.comul(e(i)) == de, "Delta(e_i)");
        expect(h.antipode(f(i)) == f(i), "S(f_i)");
        checked += 2;
    }

    std::set<std::string> ids;
    for (const auto& d : s.ce.enumerate(5)) {
        ids.insert(d.id);
        expect(d.dim_total == (d.id.starts_with("0:") ? 1 : 2), "dimension of " + d.id);
    }
    std::set<std::string> want{"0:0", "0:1"};
    for (int i = 1; i <= 5; ++i) want.insert("-" + std::to_string(i) + ":0");
    expect(ids == want, "simples in the ball of radius 5");
    for (int i = 1; i <= 5; ++i) {
        const auto& c = s.ce.find("-" + std::to_string(i) + ":0");
        expect(s.ce.character(c) == e(i) + e(-i), "chi(C_" + std::to_string(i) + ")");
    }
    expect(s.ce.character(s.ce.find("0:0")) == e(0) + f(0), "trivial character");
    expect(s.ce.character(s.ce.find("0:1")) == e(0) - f(0), "sign character");
    return std::to_string(checked) + " relations, " + std::to_string(ids.size()) + " simples, characters of C_1..C_5";
}

std::string criterion4() {
    int rows = 0;
    for (int n : {1, 2, 3}) {
        Setup s("h_z_z2n:" + std::to_string(n));
        auto kg = [n](int i) { return "0:" + std::to_string(((i % (2 * n)) + 2 * n) % (2 * n)); };
        auto E = [n](int j, int k) { return "-" + std::to_string(j) + ":" + std::to_string(((k % n) + n) % n); };
        auto prod = [&](const std::string& a, const std::string& b) {
            ++rows;
            return as_map(s.fe.decompose(s.ce.find(a), s.ce.find(b)));
        };
        const std::string tag = "n=" + std::to_string(n) + ": ";
        for (int i = 0; i < 2 * n; ++i)
            for (int i2 = 0; i2 < 2 * n; ++i2)
                expect(prod(kg(i), kg(i2)) == std::map<std::string, long long>{{kg(i + i2), 1}},
                       tag + kg(i) + " x " + kg(i2));
        for (int j = 1; j <= 4; ++j)
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < 2 * n; ++i) {
                    const std::map<std::string, long long> want{{E(j, i + k), 1}};
                    expect(prod(kg(i), E(j, k)) == want, tag + kg(i) + " x " + E(j, k));
                    expect(prod(E(j, k), kg(i)) == want, tag + E(j, k) + " x " + kg(i));
                }
                for (int j2 = 1; j2 <= 4; ++j2)
                    for (int l = 0; l < n; ++l) {
                        std::map<std::string, long long> want;
                        if (j == j2)
                            want = {{kg(k + l), 1}, {kg(n + k + l), 1}, {E(2 * j, k + l), 1}};
                        else
                            want = {{E(j + j2, k + l), 1}, {E(std::abs(j - j2), k + l), 1}};
                        expect(prod(E(j, k), E(j2, l)) == want, tag + E(j, k) + " x " + E(j2, l));
                    }
                expect(s.fe.dual_of(s.ce.find(E(j, k))).id == E(j, n - k), tag + "dual of " + E(j, k));
            }
        for (int i = 0; i < 2 * n; ++i)
            expect(s.fe.dual_of(s.ce.find(kg(i))).id == kg(-i), tag + "dual of " + kg(i));
    }
    return std::to_string(rows) + " products for n = 1, 2, 3 and j, j' <= 4, with duals";
}

std::string criterion5() {
    int simples = 0;
    std::map<int, int> counts;
    for (const auto& name : list_presets()) {
        Setup s(name);
        for (const auto& d : s.ce.enumerate(kBall)) {
            const int nu = s.fe.fs_indicator(d);
            expect(nu >= -1 && nu <= 1, name + ": indicator of " + d.id);
            expect((nu != 0) == s.fe.is_self_dual(d), name + ": indicator vs self-duality at " + d.id);
            if (name == "h_z_z2") expect(nu == 1, "h_z_z2: indicator of " + d.id);
            ++counts[nu];
            ++simples;
        }
    }
    std::ostringstream s;
    s << simples << " simples at radius " << kBall << "; nu=1: " << counts[1] << ", nu=0: " << counts[0]
      << ", nu=-1: " << counts[-1];
    return s.str();
}

std::string criterion6() {
    int simples = 0, smash = 0;
    for (const auto& name : list_presets()) {
        Setup s(name);
        for (const auto& d : s.ce.enumerate(kBall)) {
            const auto& dual = s.fe.dual_of(d);
            expect(s.fe.dual_of(dual).id == d.id, name + ": dual of dual of " + d.id);
            expect(dual.dim_total == d.dim_total, name + ": dual dimension of " + d.id);
            if (const auto crit = s.fe.smash_self_dual(d)) {
                expect(*crit == s.fe.is_self_dual(d), name + ": smash criterion at " + d.id);
                ++smash;
            }
            ++simples;
        }
    }
    expect(smash > 0, "smash criterion never applied");
    return std::to_string(simples) + " involution checks, " + std::to_string(smash) + " smash criterion comparisons";
}

std::string criterion7() {
    constexpr int radius = 3;
    int presets = 0, norms = 0;
    for (const auto& name : list_presets()) {
        const Config cfg = load_preset(name);
        const HopfAlgebra& h = *cfg.hopf;
        if (!h.cocycles_trivial()) continue;
        expect(is_unitary(*cfg.pair, h.sigma(), h.tau(), radius).unitary, name + ": not unitary");
        const auto star = verify_star(h, radius);
        expect(star.passed(), name + ": star structure");
        const Check* gram = star.find("haar_basis_norm");
        expect(gram && gram->instances > 0, name + ": no Haar norm instances");
        // direct oracle: h(x* x) = 1/|G| on basis elements
        const CycNum want(Rational(1, h.G().order()));
        for (const auto& f : cfg.pair->F().ball(radius))
            for (int g = 0; g < h.G().order(); ++g) {
                const HElem x = HElem::basis(g, f);
                expect(h.haar_gram(x, x) == want, name + ": Haar norm of a basis element");
                ++norms;
            }
        ++presets;
    }

    const Config bad = load_config_file(std::string(BICROSS_FIXTURE_DIR) + "/sigma_two.json");
    const Report r = run_command(bad, CommandRequest{"cqg-check", {}, std::nullopt});
    expect(r.status == "fail" && r.exit_code == kExitVerificationFailed, "sigma_two not rejected");
    const Json want{{"cocycle", "sigma"}, {"g", 1}, {"f", "1"}, {"f2", "2"}, {"value", "2"}};
    expect(r.payload.at("witness") == want, "sigma_two witness " + r.payload.at("witness").dump());
    return std::to_string(presets) + " presets unitary with star and Haar norms (" + std::to_string(norms) +
           " basis elements); sigma_two rejected at sigma(1; 1, 2) = 2";
}

std::string criterion8() {
    constexpr int pairs = 100;
    std::mt19937 rng(20240611);
    int total = 0;
    for (const auto& name : list_presets()) {
        Setup s(name);
        const HopfAlgebra& h = *s.cfg.hopf;
        const auto simples = s.ce.enumerate(kBall);
        std::uniform_int_distribution<std::size_t> pick(0, simples.size() - 1);
        for (int n = 0; n < pairs; ++n) {
            const auto& a = simples[pick(rng)];
            const auto& b = simples[pick(rng)];
            const auto& row = s.fe.decompose(a, b);
            // recompose independently: sum m_c chi_c must equal chi_a chi_b
            HElem sum;
            long long dim = 0;
            for (const auto& t : row.summands) {
                expect(t.multiplicity > 0, name + ": nonpositive multiplicity in " + a.id + " x " + b.id);
                const auto& c = s.ce.simple(t.rep, t.index);
                sum += s.ce.character(c).scaled(CycNum(Rational(static_cast<std::int64_t>(t.multiplicity))));
                dim += t.multiplicity * c.dim_total;
            }
            expect(sum == h.mul(s.ce.character(a), s.ce.character(b)), name + ": " + a.id + " x " + b.id);
            expect(dim == static_cast<long long>(a.dim_total) * b.dim_total, name + ": dimension of " + a.id + " x " + b.id);
            ++total;
        }
    }
    return std::to_string(total) + " random pairs recomposed exactly";
}

std::string criterion9() {
    const Config cfg = load_preset("klein_twisted");
    const auto& F = cfg.pair->F();
    const auto orbit = cfg.pair->orbit_of(F.parse("1"));
    const TwoCocycle beta = beta_for_orbit(*cfg.pair, cfg.hopf->tau(), *orbit);
    const FiniteGroup& K = beta.group();
    const int n = K.order();
    expect(n == 4, "stabilizer order");

    // brute force on the twisted group algebra: the center is the kernel of
    // z -> ([z, e_b])_b, and the regular trace of e_a is n [a = 1]
    std::vector<std::vector<CycNum>> rows(static_cast<std::size_t>(n),
                                          std::vector<CycNum>(static_cast<std::size_t>(n * n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto& r = rows[static_cast<std::size_t>(a)];
            r[static_cast<std::size_t>(b * n + K.mul(a, b))] += beta(a, b);
            r[static_cast<std::size_t>(b * n + K.mul(b, a))] -= beta(b, a);
        }
    const std::size_t centre = static_cast<std::size_t>(n) - dense_rank(rows);
    expect(centre == 1, "center dimension " + std::to_string(centre));
    std::vector<CycNum> regular(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (K.mul(a, b) == b) regular[static_cast<std::size_t>(a)] += beta(a, b);
    // one simple block M_d with n = d^2; the regular module is d copies of it
    const int d = 2;
    std::vector<CycNum> brute;
    for (const auto& v : regular) brute.push_back(v * CycNum(Rational(1, d)));

    ComoduleEngine ce(cfg.hopf, cfg.user_char_tables);
    const auto& simples = ce.simples_for_orbit(orbit->rep);
    expect(simples.size() == centre, "number of simples over the twisted orbit");
    expect(simples[0].dim_v == d && simples[0].dim_total == d, "dimension of the twisted simple");
    expect(simples[0].chi.values == brute, "twisted character");
    const auto& plain = ce.simples_for_orbit(F.identity());
    expect(plain.size() == 4, "untwisted orbit simples");
    for (const auto& s : plain) expect(s.dim_total == 1, "untwisted orbit dimensions");
    return "center of dimension 1, one simple of dimension 2 with character (2, 0, 0, 0)";
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(BICROSS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    expect(pipe != nullptr, "cannot run " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    return out;
}

std::string criterion10() {
    const std::vector<std::string> names{"h_z_z2", "h_z_z2n:3", "h_z_z2_tau", "klein_twisted", "drinfeld:S3",
                                         "z_poly_zp:2"};
    std::size_t bytes = 0;
    for (const auto& name : names) {
        const std::string args = "fusion-table --preset " + name + " --radius 4 --format json";
        const std::string first = run_cli(args);
        const std::string second = run_cli(args);
        expect(!first.empty(), name + ": empty output");
        expect(first == second, name + ": outputs differ");
        const Json doc = Json::parse(first);
        expect(doc.at("status") == "pass", name + ": fusion-table status " + doc.at("status").dump());
        // a fresh in-process run gives the same document
        const Report r = run_command(load_preset(name), CommandRequest{"fusion-table", {}, 4});
        expect(r.to_json() == doc, name + ": in-process report differs");
        bytes += first.size();
    }
    return std::to_string(names.size()) + " presets byte-identical across runs (" + std::to_string(bytes) + " bytes each pass)";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"Hopf axioms on the ball of radius 3", criterion1},
        {"dimension audit per orbit", criterion2},
        {"H(Z,Z2) relations, simples and characters", criterion3},
        {"H(Z,Z2n) fusion rules and duals", criterion4},
        {"Frobenius-Schur indicators", criterion5},
        {"duality", criterion6},
        {"compact quantum group structure", criterion7},
        {"random products decompose integrally", criterion8},
        {"twisted Klein stabilizer", criterion9},
        {"deterministic fusion-table output", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [title, run] = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        std::string verdict, detail;
        try {
            detail = run();
            verdict = "PASS";
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.what;
        } catch (const Error& e) {
            verdict = "FAIL";
            detail = to_string(e.kind()) + ": " + e.what();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        if (verdict == "FAIL") ++failed;
        std::printf("criterion %2zu %s  %s: %s (%.2f s)\n", i + 1, verdict.c_str(), title.c_str(), detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
