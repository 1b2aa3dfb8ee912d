#include "bicross/hopf.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "bicross/error.hpp"

namespace bicross {

HElem HElem::basis(int g, FElem f, CycNum c) {
    HElem h;
    h.add(BasisKey{g, std::move(f)}, c);
    return h;
}

void HElem::add(const BasisKey& k, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CycNum HElem::coeff(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? CycNum() : it->second;
}

HElem& HElem::operator+=(const HElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

HElem& HElem::operator-=(const HElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

HElem HElem::scaled(const CycNum& c) const {
    HElem r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Json HElem::to_json(const FiniteGroup& g) const {
    Json arr = Json::array();
    for (const auto& [k, c] : terms_) {
        arr.push_back(Json{{"g", g.label(k.g)}, {"g_index", k.g}, {"f", k.f.to_string()}, {"coeff", c.to_string()}});
    }
    return arr;
}

std::string HElem::to_string(const FiniteGroup& g) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + c.to_string() + ")*";
        s += "p[" + g.label(k.g) + "]#" + k.f.to_string();
    }
    return s;
}

void HTensor::add(const KeyPair& k, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

HTensor& HTensor::operator+=(const HTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Json HTensor::to_json(const FiniteGroup& g) const {
    Json arr = Json::array();
    for (const auto& [k, c] : terms_) {
        arr.push_back(Json{{"left", Json{{"g", g.label(k.first.g)}, {"f", k.first.f.to_string()}}},
                           {"right", Json{{"g", g.label(k.second.g)}, {"f", k.second.f.to_string()}}},
                           {"coeff", c.to_string()}});
    }
    return arr;
}

HopfAlgebra::HopfAlgebra(std::shared_ptr<const MatchedPair> mp, SigmaCocycle sigma, TauCocycle tau)
    : mp_(std::move(mp)), sigma_(std::move(sigma)), tau_(std::move(tau)) {}

bool HopfAlgebra::star_allowed() const { return sigma_.table().all_unitary() && tau_.table().all_unitary(); }

HElem HopfAlgebra::unit() const {
    HElem u;
    const FElem one = F().identity();
    for (int g = 0; g < G().order(); ++g) u.add(BasisKey{g, one}, CycNum(1));
    return u;
}

std::optional<ScaledKey> HopfAlgebra::mul_basis(const BasisKey& a, const BasisKey& b) const {
    if (mp_->act_left(a.g, a.f) != b.g) return std::nullopt;
    return ScaledKey{sigma_(a.g, a.f, b.f), BasisKey{a.g, F().mul(a.f, b.f)}};
}

HElem HopfAlgebra::mul(const HElem& a, const HElem& b) const {
    HElem r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (auto p = mul_basis(ka, kb)) r.add(p->key, ca * cb * p->coeff);
        }
    }
    return r;
}

std::vector<std::pair<CycNum, KeyPair>> HopfAlgebra::comul_basis(const BasisKey& a) const {
    const FiniteGroup& g = G();
    std::vector<std::pair<CycNum, KeyPair>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) {
        const int gx = g.mul(a.g, g.inv(x));
        out.emplace_back(tau_(gx, x, a.f), KeyPair{BasisKey{gx, mp_->act_right(x, a.f)}, BasisKey{x, a.f}});
    }
    return out;
}

HTensor HopfAlgebra::comul(const HElem& a) const {
    HTensor t;
    for (const auto& [k, c] : a.terms()) {
        for (const auto& [v, kp] : comul_basis(k)) t.add(kp, c * v);
    }
    return t;
}

HTensor HopfAlgebra::tensor_mul(const HTensor& a, const HTensor& b) const {
    HTensor r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            auto l = mul_basis(ka.first, kb.first);
            if (!l) continue;
            auto rr = mul_basis(ka.second, kb.second);
            if (!rr) continue;
            r.add(KeyPair{l->key, rr->key}, ca * cb * l->coeff * rr->coeff);
        }
    }
    return r;
}

CycNum HopfAlgebra::counit(const HElem& a) const {
    CycNum s;
    for (const auto& [k, c] : a.terms()) {
        if (k.g == G().identity()) s += c;
    }
    return s;
}

ScaledKey HopfAlgebra::antipode_basis(const BasisKey& a) const {
    const FiniteGroup& g = G();
    const int ginv = g.inv(a.g);
    const FElem gf = mp_->act_right(a.g, a.f);
    const FElem gf_inv = F().inv(gf);
    const CycNum coeff = (sigma_(ginv, gf, gf_inv) * tau_(ginv, a.g, a.f)).inverse();
    return ScaledKey{coeff, BasisKey{g.inv(mp_->act_left(a.g, a.f)), gf_inv}};
}

HElem HopfAlgebra::antipode(const HElem& a) const {
    HElem r;
    for (const auto& [k, c] : a.terms()) {
        const auto s = antipode_basis(k);
        r.add(s.key, c * s.coeff);
    }
    return r;
}

ScaledKey HopfAlgebra::star_basis(const BasisKey& a) const {
    if (!star_allowed()) throw NonUnitary("the *-structure needs cocycle values of modulus one");
    const FElem finv = F().inv(a.f);
    return ScaledKey{sigma_(a.g, a.f, finv).conj(), BasisKey{mp_->act_left(a.g, a.f), finv}};
}

HElem HopfAlgebra::star(const HElem& a) const {
    HElem r;
    for (const auto& [k, c] : a.terms()) {
        const auto s = star_basis(k);
        r.add(s.key, c.conj() * s.coeff);
    }
    return r;
}

CycNum HopfAlgebra::integral(const HElem& a) const {
    CycNum s;
    for (const auto& [k, c] : a.terms()) {
        if (F().is_identity(k.f)) s += c;
    }
    return s * CycNum(Rational(1, G().order()));
}

CycNum HopfAlgebra::haar_gram(const HElem& x, const HElem& y) const { return integral(mul(star(y), x)); }

HaarPositivity haar_positivity(const HopfAlgebra& h, const HElem& x) {
    HaarPositivity r;
    r.value = h.haar_gram(x, x);
    bool rational = true;
    for (const auto& [k, c] : x.terms()) rational = rational && c.is_rational();
    const int n = r.value.level();
    r.min_embedding = r.value.embed(1).real();
    for (int k = 1; k <= n; ++k) {
        if (gcd_ll(k, n) != 1) continue;
        r.min_embedding = std::min(r.min_embedding, r.value.embed(k).real());
    }
    r.numerically_positive = x.is_zero() ? r.min_embedding > -1e-12L : r.min_embedding > 1e-12L;
    if (rational && r.value.is_rational()) {
        const int s = r.value.to_rational().sign();
        r.certified = x.is_zero() ? s == 0 : s > 0;
    }
    return r;
}

namespace {

// Interned F-elements with memoized group operations, so the hot loops of
// the axiom checks work on small integers.
class FArith {
public:
    explicit FArith(const MatchedPair& mp) : mp_(mp), right_(static_cast<std::size_t>(mp.G().order())),
                                             left_(static_cast<std::size_t>(mp.G().order())) {}

    int id(const FElem& f) {
        auto [it, inserted] = ids_.emplace(f, static_cast<int>(elems_.size()));
        if (inserted) elems_.push_back(f);
        return it->second;
    }
    const FElem& elem(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return elems_.size(); }

    int mul(int a, int b) {
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        if (auto it = mul_.find(key); it != mul_.end()) return it->second;
        const int r = id(mp_.F().mul(elem(a), elem(b)));
        mul_.emplace(key, r);
        return r;
    }
    int right(int g, int f) { return memo(right_, g, f, [&] { return id(mp_.act_right(g, elem(f))); }); }
    int left(int g, int f) { return memo(left_, g, f, [&] { return mp_.act_left(g, elem(f)); }); }

    // Dense product table rows x cols.
    std::vector<int> table(const std::vector<int>& rows, const std::vector<int>& cols) {
        std::vector<int> t;
        t.reserve(rows.size() * cols.size());
        for (int a : rows) {
            for (int b : cols) t.push_back(id(mp_.F().mul(elem(a), elem(b))));
        }
        return t;
    }

private:
    template <class Fn>
    int memo(std::vector<std::vector<int>>& m, int g, int f, Fn compute) {
        auto& row = m[static_cast<std::size_t>(g)];
        if (row.size() <= static_cast<std::size_t>(f)) row.resize(std::max<std::size_t>(elems_.size(), f + 1), -1);
        int& slot = row[static_cast<std::size_t>(f)];
        if (slot < 0) {
            const int v = compute();
            m[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = v; // row may not move: compute does not touch m[g]
            return v;
        }
        return slot;
    }

    const MatchedPair& mp_;
    std::unordered_map<FElem, int, FElemHash> ids_;
    std::vector<FElem> elems_;
    std::unordered_map<std::uint64_t, int> mul_;
    std::vector<std::vector<int>> right_;
    std::vector<std::vector<int>> left_;
};

Json key_json(const FiniteGroup& g, int gi, const FElem& f) {
    return Json{{"g", g.label(gi)}, {"g_index", gi}, {"f", f.to_string()}};
}

void check_associativity(const HopfAlgebra& h, FArith& fa, const std::vector<int>& ball, Check& c) {
    const FiniteGroup& G = h.G();
    const auto& sigma = h.sigma();
    const bool trivial = sigma.is_trivial();
    const std::size_t nb = ball.size();
    // products of two ball elements, then products of those with ball elements on either side
    const std::vector<int> pairs = fa.table(ball, ball);
    std::vector<int> s2 = pairs;
    std::sort(s2.begin(), s2.end());
    s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
    std::vector<int> s2_pos(fa.size(), -1);
    for (std::size_t i = 0; i < s2.size(); ++i) s2_pos[static_cast<std::size_t>(s2[i])] = static_cast<int>(i);
    const std::vector<int> left_mul = fa.table(s2, ball);  // (ff') f''
    const std::vector<int> right_mul = fa.table(ball, s2); // f (f'f'')

    for (int g = 0; g < G.order(); ++g) {
        for (std::size_t i = 0; i < nb; ++i) {
            const int fi = ball[i];
            const int g1 = fa.left(g, fi); // the only g' with (p_g#f)(p_g'#f') != 0
            for (std::size_t j = 0; j < nb; ++j) {
                const int fj = ball[j];
                const int ij = pairs[i * nb + j];
                const int gl = fa.left(g, ij); // g'' making ((ab)c) nonzero
                const int gr = fa.left(g1, fj); // g'' making (bc) nonzero
                if (gl != gr) {
                    c.fail(Json{{"a", key_json(G, g, fa.elem(fi))}, {"b", key_json(G, g1, fa.elem(fj))},
                                {"reason", "supports of (ab)c and a(bc) differ"},
                                {"g_left", gl}, {"g_right", gr}});
                    continue;
                }
                const std::size_t ij_pos = static_cast<std::size_t>(s2_pos[static_cast<std::size_t>(ij)]);
                for (std::size_t k = 0; k < nb; ++k) {
                    const int fk = ball[k];
                    const int jk = pairs[j * nb + k];
                    const int lhs = left_mul[ij_pos * nb + k];
                    const int rhs = right_mul[i * s2.size() + static_cast<std::size_t>(s2_pos[static_cast<std::size_t>(jk)])];
                    bool ok = lhs == rhs;
                    if (ok && !trivial) {
                        const CycNum l = sigma(g, fa.elem(fi), fa.elem(fj)) * sigma(g, fa.elem(ij), fa.elem(fk));
                        const CycNum r = sigma(g1, fa.elem(fj), fa.elem(fk)) * sigma(g, fa.elem(fi), fa.elem(jk));
                        ok = l == r;
                    }
                    c.record(ok, [&] {
                        return Json{{"a", key_json(G, g, fa.elem(fi))}, {"b", key_json(G, g1, fa.elem(fj))},
                                    {"c", key_json(G, gl, fa.elem(fk))}};
                    });
                }
            }
        }
    }
}

void check_comul_multiplicative(const HopfAlgebra& h, FArith& fa, const std::vector<int>& ball, Check& c,
                                Check& eps) {
    const FiniteGroup& G = h.G();
    const auto& sigma = h.sigma();
    const auto& tau = h.tau();
    const bool trivial = h.cocycles_trivial();
    const std::size_t nb = ball.size();
    const std::vector<int> pairs = fa.table(ball, ball);
    const int e = G.identity();
    for (int g = 0; g < G.order(); ++g) {
        for (std::size_t i = 0; i < nb; ++i) {
            const int fi = ball[i];
            const int glf = fa.left(g, fi);
            for (int g2 = 0; g2 < G.order(); ++g2) {
                for (std::size_t j = 0; j < nb; ++j) {
                    const int fj = ball[j];
                    const int ij = pairs[i * nb + j];
                    const bool prod_nonzero = glf == g2;
                    auto witness = [&](int x) {
                        return Json{{"a", key_json(G, g, fa.elem(fi))}, {"b", key_json(G, g2, fa.elem(fj))}, {"x", x}};
                    };
                    // counit is multiplicative
                    {
                        CycNum lhs;
                        if (prod_nonzero && g == e) lhs = sigma(g, fa.elem(fi), fa.elem(fj));
                        const CycNum rhs = (g == e && g2 == e) ? CycNum(1) : CycNum();
                        eps.record(lhs == rhs, [&] { return witness(-1); });
                    }
                    bool ok = true;
                    int bad_x = -1;
                    // compare the term with right leg p_x # ff' on both sides, for every x
                    for (int x = 0; x < G.order() && ok; ++x) {
                        const int gx = G.mul(g, G.inv(x));
                        const int xfi = fa.right(x, fi);
                        const int y = fa.left(x, fi);
                        const int gy = G.mul(g2, G.inv(y));
                        const bool rhs_nonzero = fa.left(gx, xfi) == gy;
                        if (prod_nonzero != rhs_nonzero) {
                            ok = false;
                            bad_x = x;
                            break;
                        }
                        if (!prod_nonzero) continue;
                        const int lhs_f = fa.right(x, ij);
                        const int rhs_f = fa.mul(xfi, fa.right(y, fj));
                        if (lhs_f != rhs_f) {
                            ok = false;
                            bad_x = x;
                            break;
                        }
                        if (!trivial) {
                            const CycNum lhs = tau(gx, x, fa.elem(ij)) * sigma(g, fa.elem(fi), fa.elem(fj));
                            const CycNum rhs = tau(gx, x, fa.elem(fi)) * tau(gy, y, fa.elem(fj)) *
                                               sigma(gx, fa.elem(xfi), fa.elem(fa.right(y, fj))) *
                                               sigma(x, fa.elem(fi), fa.elem(fj));
                            if (lhs != rhs) {
                                ok = false;
                                bad_x = x;
                            }
                        }
                    }
                    c.record(ok, [&] { return witness(bad_x); });
                }
            }
        }
    }
}

} // namespace

CheckReport verify_hopf(const HopfAlgebra& h, int radius) {
    const FiniteGroup& G = h.G();
    const FGroup& F = h.F();
    const auto ball_elems = F.ball(radius);
    const std::string scope = F.is_finite() ? scope_exhaustive() : scope_ball(radius);
    FArith fa(h.pair());
    std::vector<int> ball;
    for (const auto& f : ball_elems) ball.push_back(fa.id(f));

    std::vector<BasisKey> basis;
    for (const auto& f : ball_elems) {
        for (int g = 0; g < G.order(); ++g) basis.push_back(BasisKey{g, f});
    }
    auto bj = [&](const BasisKey& k) { return key_json(G, k.g, k.f); };

    CheckReport report;
    check_associativity(h, fa, ball, report.add("associativity", scope));

    const HElem one = h.unit();
    Check& unit_law = report.add("unit_laws", scope);
    for (const auto& b : basis) {
        const HElem x = HElem::basis(b.g, b.f);
        unit_law.record(h.mul(one, x) == x, [&] { return Json{{"law", "1 b = b"}, {"b", bj(b)}}; });
        unit_law.record(h.mul(x, one) == x, [&] { return Json{{"law", "b 1 = b"}, {"b", bj(b)}}; });
    }

    Check& coassoc = report.add("coassociativity", scope);
    Check& counit = report.add("counit_laws", scope);
    Check& antipode = report.add("antipode_law", scope);
    Check& s2 = report.add("antipode_squared_identity", scope);
    Check& integral_law = report.add("left_integral_law", scope);
    for (const auto& b : basis) {
        const auto delta = h.comul_basis(b);
        // (Delta (x) id) Delta vs (id (x) Delta) Delta as maps of key triples
        std::map<std::tuple<BasisKey, BasisKey, BasisKey>, CycNum> lhs;
        std::map<std::tuple<BasisKey, BasisKey, BasisKey>, CycNum> rhs;
        auto acc = [](auto& m, auto key, const CycNum& c) {
            auto [it, inserted] = m.emplace(std::move(key), c);
            if (!inserted) it->second += c;
        };
        for (const auto& [c, kp] : delta) {
            for (const auto& [c2, kp2] : h.comul_basis(kp.first)) acc(lhs, std::tuple{kp2.first, kp2.second, kp.second}, c * c2);
            for (const auto& [c2, kp2] : h.comul_basis(kp.second)) acc(rhs, std::tuple{kp.first, kp2.first, kp2.second}, c * c2);
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
        coassoc.record(lhs == rhs, [&] { return Json{{"b", bj(b)}}; });

        HElem left_counit;
        HElem right_counit;
        for (const auto& [c, kp] : delta) {
            if (kp.first.g == G.identity()) left_counit.add(kp.second, c);
            if (kp.second.g == G.identity()) right_counit.add(kp.first, c);
        }
        const HElem x = HElem::basis(b.g, b.f);
        counit.record(left_counit == x, [&] { return Json{{"law", "(eps (x) id) Delta = id"}, {"b", bj(b)}}; });
        counit.record(right_counit == x, [&] { return Json{{"law", "(id (x) eps) Delta = id"}, {"b", bj(b)}}; });

        const HElem expected = b.g == G.identity() ? one : HElem();
        HElem sl;
        HElem sr;
        for (const auto& [c, kp] : delta) {
            const auto s1 = h.antipode_basis(kp.first);
            if (auto p = h.mul_basis(s1.key, kp.second)) sl.add(p->key, c * s1.coeff * p->coeff);
            const auto s2b = h.antipode_basis(kp.second);
            if (auto p = h.mul_basis(kp.first, s2b.key)) sr.add(p->key, c * s2b.coeff * p->coeff);
        }
        antipode.record(sl == expected, [&] { return Json{{"law", "m(S (x) id)Delta = eps 1"}, {"b", bj(b)}}; });
        antipode.record(sr == expected, [&] { return Json{{"law", "m(id (x) S)Delta = eps 1"}, {"b", bj(b)}}; });

        const auto once = h.antipode_basis(b);
        const auto twice = h.antipode_basis(once.key);
        s2.record(twice.key == b && (once.coeff * twice.coeff).is_one(), [&] { return Json{{"b", bj(b)}}; });

        HElem lhs_int;
        for (const auto& [c, kp] : delta) {
            const CycNum t = h.integral(HElem::basis(kp.second.g, kp.second.f));
            lhs_int.add(kp.first, c * t);
        }
        const HElem rhs_int = one.scaled(h.integral(x));
        integral_law.record(lhs_int == rhs_int, [&] { return Json{{"b", bj(b)}}; });
    }

    Check& normalized = report.add("integral_normalized", scope_global("single identity"));
    normalized.record(h.integral(one).is_one(), [&] { return Json{{"value", h.integral(one).to_string()}}; });

    check_comul_multiplicative(h, fa, ball, report.add("comultiplication_multiplicative", scope),
                               report.add("counit_multiplicative", scope));
    return report;
}

CheckReport verify_star(const HopfAlgebra& h, int radius, std::size_t sample_pairs) {
    const FiniteGroup& G = h.G();
    const FGroup& F = h.F();
    const std::string scope = F.is_finite() ? scope_exhaustive() : scope_ball(radius);
    std::vector<BasisKey> basis;
    for (const auto& f : F.ball(radius)) {
        for (int g = 0; g < G.order(); ++g) basis.push_back(BasisKey{g, f});
    }
    auto bj = [&](const BasisKey& k) { return key_json(G, k.g, k.f); };
    CheckReport report;
    Check& invol = report.add("star_involution", scope);
    Check& delta = report.add("star_comultiplication", scope);
    Check& gram = report.add("haar_basis_norm", scope);
    const CycNum inv_order(Rational(1, G.order()));
    for (const auto& b : basis) {
        const HElem x = HElem::basis(b.g, b.f);
        const HElem xs = h.star(x);
        invol.record(h.star(xs) == x, [&] { return Json{{"b", bj(b)}}; });
        // Delta(x*) = (* (x) *) Delta(x)
        HTensor lhs = h.comul(xs);
        HTensor rhs;
        for (const auto& [c, kp] : h.comul_basis(b)) {
            const auto l = h.star_basis(kp.first);
            const auto r = h.star_basis(kp.second);
            rhs.add(KeyPair{l.key, r.key}, c.conj() * l.coeff * r.coeff);
        }
        delta.record(lhs == rhs, [&] { return Json{{"b", bj(b)}}; });
        const CycNum v = h.haar_gram(x, x);
        gram.record(v == inv_order, [&] { return Json{{"b", bj(b)}, {"value", v.to_string()}}; });
    }

    Check& unit = report.add("star_unit", scope_global("single identity"));
    unit.record(h.star(h.unit()) == h.unit(), [] { return Json{{"law", "1* = 1"}}; });

    Check& anti = report.add("star_antimultiplicative", "sampled pairs, " + scope);
    Check& conj_lin = report.add("star_conjugate_linear", "sampled pairs, " + scope);
    Check& ortho = report.add("haar_basis_orthogonal", "sampled pairs, " + scope);
    std::mt19937_64 rng(0x5eed);
    const CycNum i4 = CycNum::root_of_unity(1, 4);
    const std::size_t n = basis.size();
    const std::size_t total = std::min<std::size_t>(sample_pairs, n * n);
    for (std::size_t s = 0; s < total; ++s) {
        std::size_t ia = 0;
        std::size_t ib = 0;
        if (n * n <= sample_pairs) {
            ia = s / n;
            ib = s % n;
        } else {
            ia = static_cast<std::size_t>(rng() % n);
            ib = static_cast<std::size_t>(rng() % n);
        }
        const HElem a = HElem::basis(basis[ia].g, basis[ia].f);
        const HElem b = HElem::basis(basis[ib].g, basis[ib].f);
        anti.record(h.star(h.mul(a, b)) == h.mul(h.star(b), h.star(a)), [&] {
            return Json{{"a", bj(basis[ia])}, {"b", bj(basis[ib])}};
        });
        const HElem combo = a.scaled(i4) + b.scaled(CycNum(2));
        conj_lin.record(h.star(combo) == h.star(a).scaled(i4.conj()) + h.star(b).scaled(CycNum(2)), [&] {
            return Json{{"a", bj(basis[ia])}, {"b", bj(basis[ib])}};
        });
        if (ia != ib) {
            const CycNum v = h.haar_gram(a, b);
            ortho.record(v.is_zero(), [&] {
                return Json{{"a", bj(basis[ia])}, {"b", bj(basis[ib])}, {"value", v.to_string()}};
            });
        }
    }
    return report;
}

} // namespace bicross
