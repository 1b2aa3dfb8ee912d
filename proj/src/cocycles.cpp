#include "bicross/cocycles.hpp"

#include <map>

#include "bicross/error.hpp"

namespace bicross {
namespace {

const CycNum& one() {
    static const CycNum v(1);
    return v;
}

} // namespace

TwoCocycle TwoCocycle::trivial(std::shared_ptr<const FiniteGroup> h) {
    TwoCocycle c;
    const std::size_t n = static_cast<std::size_t>(h->order());
    c.h_ = std::move(h);
    c.values_.assign(n * n, CycNum(1));
    c.trivial_ = true;
    return c;
}

TwoCocycle TwoCocycle::from_values(std::shared_ptr<const FiniteGroup> h, std::vector<CycNum> values) {
    const std::size_t n = static_cast<std::size_t>(h->order());
    if (values.size() != n * n) throw InvalidInput("2-cocycle table must have |H|^2 entries");
    TwoCocycle c;
    c.h_ = std::move(h);
    c.values_ = std::move(values);
    c.trivial_ = true;
    for (const auto& v : c.values_) {
        if (v.is_zero()) throw InvalidInput("2-cocycle value is zero");
        if (!v.is_one()) c.trivial_ = false;
    }
    return c;
}

void TwoCocycle::check_cocycle_identity() const {
    const FiniteGroup& h = *h_;
    const int e = h.identity();
    for (int a = 0; a < h.order(); ++a) {
        if (!(*this)(e, a).is_one() || !(*this)(a, e).is_one()) {
            throw InvalidInput("2-cocycle not normalized at element " + std::to_string(a));
        }
    }
    if (trivial_) return;
    for (int a = 0; a < h.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) {
            const CycNum& ab = (*this)(a, b);
            for (int c = 0; c < h.order(); ++c) {
                if (ab * (*this)(h.mul(a, b), c) != (*this)(a, h.mul(b, c)) * (*this)(b, c)) {
                    throw InvalidInput("2-cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                       "," + std::to_string(c) + ")");
                }
            }
        }
    }
}

int quotient_order(const std::vector<int>& moduli) {
    long long q = 1;
    for (int m : moduli) {
        if (m < 1) throw InvalidInput("quotient moduli must be positive");
        q *= m;
        if (q > 4096) throw InvalidInput("quotient group larger than 4096 is not supported");
    }
    return static_cast<int>(q);
}

FElem quotient_element(const std::vector<int>& moduli, int q) {
    FElem::Data d;
    for (int m : moduli) {
        d.push_back(q % m);
        q /= m;
    }
    return FElem::vec(std::move(d));
}

CocycleTable::CocycleTable(CocycleKind kind, int ng, int g_slots, int f_slots, int f_size, std::vector<int> moduli,
                           const std::vector<CycNum>& dense)
    : kind_(kind), f_size_(f_size), moduli_(std::move(moduli)) {
    std::size_t expected = 1;
    for (int i = 0; i < g_slots; ++i) expected *= static_cast<std::size_t>(ng);
    for (int i = 0; i < f_slots; ++i) expected *= static_cast<std::size_t>(f_size);
    if (kind_ == CocycleKind::Trivial) return;
    if (dense.size() != expected) {
        throw InvalidInput("cocycle table has " + std::to_string(dense.size()) + " entries, expected " +
                           std::to_string(expected));
    }
    pool_.clear();
    std::map<CycNum, std::uint32_t, decltype(&canonical_less)> index(&canonical_less);
    ids_.reserve(dense.size());
    for (const auto& v : dense) {
        if (v.is_zero()) throw InvalidInput("cocycle value must be nonzero");
        auto [it, inserted] = index.emplace(v, static_cast<std::uint32_t>(pool_.size()));
        if (inserted) pool_.push_back(v);
        ids_.push_back(it->second);
    }
    for (const auto& v : pool_) {
        if (!v.is_modulus_one()) all_unitary_ = false;
    }
}

int CocycleTable::reduce(const FElem& f) const {
    if (kind_ == CocycleKind::FiniteTable) return f.index();
    int q = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        const long long m = moduli_[i];
        long long r = f.coords()[i] % m;
        if (r < 0) r += m;
        q = q * static_cast<int>(m) + static_cast<int>(r);
    }
    return q;
}

bool CocycleTable::all_nonzero() const {
    for (const auto& v : pool_) {
        if (v.is_zero()) return false;
    }
    return true;
}

int CocycleTable::level() const {
    long long l = 1;
    for (const auto& v : pool_) l = lcm_ll(l, v.level());
    return static_cast<int>(l);
}

SigmaCocycle SigmaCocycle::trivial() { return SigmaCocycle(); }

SigmaCocycle SigmaCocycle::finite_table(int ng, int nf, const std::vector<CycNum>& dense) {
    SigmaCocycle s;
    s.ng_ = ng;
    s.t_ = CocycleTable(CocycleKind::FiniteTable, ng, 1, 2, nf, {}, dense);
    return s;
}

SigmaCocycle SigmaCocycle::quotient_lift(int ng, std::vector<int> moduli, const std::vector<CycNum>& dense) {
    SigmaCocycle s;
    s.ng_ = ng;
    const int q = quotient_order(moduli);
    s.t_ = CocycleTable(CocycleKind::QuotientLift, ng, 1, 2, q, std::move(moduli), dense);
    return s;
}

const CycNum& SigmaCocycle::operator()(int g, const FElem& f, const FElem& f2) const {
    if (t_.is_trivial()) return one();
    const std::size_t n = static_cast<std::size_t>(t_.f_size());
    return t_.at((static_cast<std::size_t>(g) * n + static_cast<std::size_t>(t_.reduce(f))) * n +
                 static_cast<std::size_t>(t_.reduce(f2)));
}

TauCocycle TauCocycle::trivial() { return TauCocycle(); }

TauCocycle TauCocycle::finite_table(int ng, int nf, const std::vector<CycNum>& dense) {
    TauCocycle t;
    t.ng_ = ng;
    t.t_ = CocycleTable(CocycleKind::FiniteTable, ng, 2, 1, nf, {}, dense);
    return t;
}

TauCocycle TauCocycle::quotient_lift(int ng, std::vector<int> moduli, const std::vector<CycNum>& dense) {
    TauCocycle t;
    t.ng_ = ng;
    const int q = quotient_order(moduli);
    t.t_ = CocycleTable(CocycleKind::QuotientLift, ng, 2, 1, q, std::move(moduli), dense);
    return t;
}

const CycNum& TauCocycle::operator()(int g, int h, const FElem& f) const {
    if (t_.is_trivial()) return one();
    const std::size_t n = static_cast<std::size_t>(t_.f_size());
    return t_.at((static_cast<std::size_t>(g) * static_cast<std::size_t>(ng_) + static_cast<std::size_t>(h)) * n +
                 static_cast<std::size_t>(t_.reduce(f)));
}

CheckReport verify_cocycles(const MatchedPair& mp, const SigmaCocycle& sigma, const TauCocycle& tau, int radius) {
    const FiniteGroup& G = mp.G();
    const FGroup& F = mp.F();
    const auto ball = F.ball(radius);
    const std::string scope = F.is_finite() ? scope_exhaustive() : scope_ball(radius);
    const int e = G.identity();
    const FElem one_f = F.identity();
    auto fs = [](const FElem& x) { return x.to_string(); };
    CheckReport report;

    Check& nz = report.add("cocycle_values_nonzero", scope_global("every stored value"));
    nz.record(sigma.table().all_nonzero(), [] { return Json{{"cocycle", "sigma"}}; });
    nz.record(tau.table().all_nonzero(), [] { return Json{{"cocycle", "tau"}}; });

    Check& sn = report.add("sigma_normalization", sigma.is_trivial() ? scope_global("trivial cocycle") : scope);
    if (sigma.is_trivial()) {
        sn.pass();
    } else {
        for (int g = 0; g < G.order(); ++g) {
            for (const auto& f : ball) {
                sn.record(sigma(g, one_f, f).is_one(), [&] { return Json{{"law", "sigma(g;1,f) = 1"}, {"g", g}, {"f", fs(f)}}; });
                sn.record(sigma(g, f, one_f).is_one(), [&] { return Json{{"law", "sigma(g;f,1) = 1"}, {"g", g}, {"f", fs(f)}}; });
            }
        }
        for (const auto& f : ball) {
            for (const auto& f2 : ball) {
                sn.record(sigma(e, f, f2).is_one(), [&] {
                    return Json{{"law", "sigma(1;f,f') = 1"}, {"f", fs(f)}, {"f2", fs(f2)}};
                });
            }
        }
    }

    Check& tn = report.add("tau_normalization", tau.is_trivial() ? scope_global("trivial cocycle") : scope);
    if (tau.is_trivial()) {
        tn.pass();
    } else {
        for (int g = 0; g < G.order(); ++g) {
            for (const auto& f : ball) {
                tn.record(tau(e, g, f).is_one(), [&] { return Json{{"law", "tau(1,g;f) = 1"}, {"g", g}, {"f", fs(f)}}; });
                tn.record(tau(g, e, f).is_one(), [&] { return Json{{"law", "tau(g,1;f) = 1"}, {"g", g}, {"f", fs(f)}}; });
            }
            for (int h = 0; h < G.order(); ++h) {
                tn.record(tau(g, h, one_f).is_one(), [&] { return Json{{"law", "tau(g,g';1) = 1"}, {"g", g}, {"h", h}}; });
            }
        }
    }

    // sigma(g <| f; f', f'') sigma(g; f, f'f'') = sigma(g; f, f') sigma(g; ff', f'')
    auto sigma_law = [&](Check& c, const std::vector<FElem>& dom) {
        for (int g = 0; g < G.order(); ++g) {
            for (const auto& f : dom) {
                const int glf = mp.act_left(g, f);
                for (const auto& f2 : dom) {
                    const FElem ff2 = F.mul(f, f2);
                    const CycNum& s12 = sigma(g, f, f2);
                    for (const auto& f3 : dom) {
                        const CycNum lhs = sigma(glf, f2, f3) * sigma(g, f, F.mul(f2, f3));
                        const CycNum rhs = s12 * sigma(g, ff2, f3);
                        c.record(lhs == rhs, [&] {
                            return Json{{"law", "sigma cocycle"}, {"g", g}, {"f", fs(f)}, {"f2", fs(f2)}, {"f3", fs(f3)}};
                        });
                    }
                }
            }
        }
    };
    if (sigma.is_trivial()) {
        report.add("sigma_cocycle_law", scope_global("trivial cocycle")).pass();
    } else if (sigma.kind() == CocycleKind::QuotientLift && mp.left_trivial()) {
        // sigma factors through Q and <| is trivial, so the law is an identity on G x Q^3.
        const auto& m = sigma.table().moduli();
        std::vector<FElem> q;
        for (int i = 0; i < quotient_order(m); ++i) q.push_back(quotient_element(m, i));
        sigma_law(report.add("sigma_cocycle_law", scope_global("checked on all of G x Q^3")), q);
    } else {
        sigma_law(report.add("sigma_cocycle_law", scope), ball);
    }

    // tau(g, h; k |> f) tau(gh, k; f) = tau(g, hk; f) tau(h, k; f)
    Check& tl = report.add("tau_cocycle_law", tau.is_trivial() ? scope_global("trivial cocycle") : scope);
    if (tau.is_trivial()) {
        tl.pass();
    } else {
        for (int g = 0; g < G.order(); ++g) {
            for (int h = 0; h < G.order(); ++h) {
                const int gh = G.mul(g, h);
                for (int k = 0; k < G.order(); ++k) {
                    const int hk = G.mul(h, k);
                    for (const auto& f : ball) {
                        const CycNum lhs = tau(g, h, mp.act_right(k, f)) * tau(gh, k, f);
                        const CycNum rhs = tau(g, hk, f) * tau(h, k, f);
                        tl.record(lhs == rhs, [&] {
                            return Json{{"law", "tau cocycle"}, {"g", g}, {"h", h}, {"k", k}, {"f", fs(f)}};
                        });
                    }
                }
            }
        }
    }

    // sigma(gh; f, f') tau(g, h; ff') =
    //   sigma(g; h |> f, (h <| f) |> f') sigma(h; f, f') tau(g, h; f) tau(g <| (h |> f), h <| f; f')
    Check& cp = report.add("compatibility",
                           sigma.is_trivial() && tau.is_trivial() ? scope_global("trivial cocycles") : scope);
    if (sigma.is_trivial() && tau.is_trivial()) {
        cp.pass();
    } else {
        for (int g = 0; g < G.order(); ++g) {
            for (int h = 0; h < G.order(); ++h) {
                const int gh = G.mul(g, h);
                for (const auto& f : ball) {
                    const FElem hf = mp.act_right(h, f);
                    const int hlf = mp.act_left(h, f);
                    const int g2 = mp.act_left(g, hf);
                    for (const auto& f2 : ball) {
                        const CycNum lhs = sigma(gh, f, f2) * tau(g, h, F.mul(f, f2));
                        const CycNum rhs = sigma(g, hf, mp.act_right(hlf, f2)) * sigma(h, f, f2) * tau(g, h, f) *
                                           tau(g2, hlf, f2);
                        cp.record(lhs == rhs, [&] {
                            return Json{{"law", "compatibility"}, {"g", g}, {"h", h}, {"f", fs(f)}, {"f2", fs(f2)}};
                        });
                    }
                }
            }
        }
    }
    return report;
}

Json UnitaryResult::to_json() const {
    Json j;
    j["unitary"] = unitary;
    j["global"] = global;
    j["witness"] = witness;
    return j;
}

UnitaryResult is_unitary(const MatchedPair& mp, const SigmaCocycle& sigma, const TauCocycle& tau, int radius) {
    UnitaryResult r;
    r.global = sigma.table().all_unitary() && tau.table().all_unitary();
    if (r.global) return r;
    const FiniteGroup& G = mp.G();
    const auto ball = mp.F().ball(radius);
    if (!sigma.table().all_unitary()) {
        for (int g = 0; g < G.order(); ++g) {
            for (const auto& f : ball) {
                for (const auto& f2 : ball) {
                    const CycNum& v = sigma(g, f, f2);
                    if (!v.is_modulus_one()) {
                        r.unitary = false;
                        r.witness = Json{{"cocycle", "sigma"}, {"g", g}, {"f", f.to_string()}, {"f2", f2.to_string()},
                                         {"value", v.to_string()}};
                        return r;
                    }
                }
            }
        }
    }
    if (!tau.table().all_unitary()) {
        for (int g = 0; g < G.order(); ++g) {
            for (int h = 0; h < G.order(); ++h) {
                for (const auto& f : ball) {
                    const CycNum& v = tau(g, h, f);
                    if (!v.is_modulus_one()) {
                        r.unitary = false;
                        r.witness = Json{{"cocycle", "tau"}, {"g", g}, {"h", h}, {"f", f.to_string()},
                                         {"value", v.to_string()}};
                        return r;
                    }
                }
            }
        }
    }
    return r; // every value on the ball has modulus one; some value outside it does not
}

TwoCocycle beta_for_orbit(const MatchedPair& mp, const TauCocycle& tau, const Orbit& orbit) {
    auto h = std::make_shared<const FiniteGroup>(FiniteGroup::subgroup(mp.G(), orbit.stabilizer));
    if (tau.is_trivial()) return TwoCocycle::trivial(h);
    std::vector<CycNum> values;
    values.reserve(orbit.stabilizer.size() * orbit.stabilizer.size());
    for (int a : orbit.stabilizer) {
        for (int b : orbit.stabilizer) values.push_back(tau(a, b, orbit.rep));
    }
    TwoCocycle beta = TwoCocycle::from_values(h, std::move(values));
    try {
        beta.check_cocycle_identity();
    } catch (const InvalidInput& ex) {
        throw InvalidInput("inconsistent tau on the stabilizer of " + orbit.rep.to_string() + ": " + ex.what());
    }
    return beta;
}

} // namespace bicross
