#include "bicross/matched_pair.hpp"

#include <algorithm>
#include <set>

#include "bicross/error.hpp"

namespace bicross {

bool Orbit::contains(const FElem& f) const { return std::binary_search(elements.begin(), elements.end(), f); }

int Orbit::transversal_position(const FElem& f) const {
    for (std::size_t i = 0; i < transversal_image.size(); ++i) {
        if (transversal_image[i] == f) return static_cast<int>(i);
    }
    return -1;
}

std::shared_ptr<const MatchedPair> MatchedPair::with_tables(std::shared_ptr<const FiniteGroup> g, FGroup f,
                                                            std::vector<int> right, std::vector<int> left) {
    if (!f.is_finite()) throw InvalidInput("table actions require a finite group F");
    const int ng = g->order();
    const int nf = f.finite_group().order();
    const std::size_t size = static_cast<std::size_t>(ng) * nf;
    if (right.size() != size || left.size() != size) {
        throw InvalidInput("action tables must have |G| x |F| = " + std::to_string(size) + " entries");
    }
    for (std::size_t i = 0; i < size; ++i) {
        if (right[i] < 0 || right[i] >= nf) throw InvalidInput("right action table entry out of range at " + std::to_string(i));
        if (left[i] < 0 || left[i] >= ng) throw InvalidInput("left action table entry out of range at " + std::to_string(i));
    }
    auto mp = std::shared_ptr<MatchedPair>(new MatchedPair());
    mp->g_ = std::move(g);
    mp->f_ = std::move(f);
    mp->right_ = std::move(right);
    mp->left_ = std::move(left);
    mp->left_trivial_ = true;
    for (int gi = 0; gi < ng; ++gi) {
        for (int fi = 0; fi < nf; ++fi) {
            if (mp->left_[static_cast<std::size_t>(gi) * nf + fi] != gi) mp->left_trivial_ = false;
        }
    }
    return mp;
}

std::shared_ptr<const MatchedPair> MatchedPair::with_linear(std::shared_ptr<const FiniteGroup> g, int rank,
                                                            std::vector<IntMatrix> matrices) {
    FGroup f = FGroup::free_abelian(rank);
    if (static_cast<int>(matrices.size()) != g->order()) {
        throw InvalidInput("linear action needs one matrix per element of G (" + std::to_string(g->order()) + ")");
    }
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        if (static_cast<int>(matrices[i].size()) != rank) throw InvalidInput("action matrix " + std::to_string(i) + " has wrong row count");
        for (const auto& row : matrices[i]) {
            if (static_cast<int>(row.size()) != rank) throw InvalidInput("action matrix " + std::to_string(i) + " has wrong column count");
        }
    }
    auto mul = [rank](const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank), 0));
        for (int i = 0; i < rank; ++i) {
            for (int k = 0; k < rank; ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < rank; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        }
        return c;
    };
    IntMatrix id(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) id[i][i] = 1;
    for (int a = 0; a < g->order(); ++a) {
        if (mul(matrices[a], matrices[g->inv(a)]) != id) {
            throw InvalidInput("action matrix for element " + std::to_string(a) +
                               " is not invertible over the integers with inverse M_{g^-1}");
        }
    }
    auto mp = std::shared_ptr<MatchedPair>(new MatchedPair());
    mp->g_ = std::move(g);
    mp->f_ = std::move(f);
    mp->linear_ = true;
    mp->left_trivial_ = true;
    mp->matrices_ = std::move(matrices);
    return mp;
}

FElem MatchedPair::act_right(int g, const FElem& f) const {
    if (!linear_) {
        const int nf = f_.finite_group().order();
        return FElem::finite(right_[static_cast<std::size_t>(g) * nf + f.index()]);
    }
    const auto& m = matrices_[static_cast<std::size_t>(g)];
    const auto& v = f.coords();
    FElem::Data out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
        out[i] = s;
    }
    return FElem::vec(std::move(out));
}

int MatchedPair::act_left(int g, const FElem& f) const {
    if (linear_) return g;
    const int nf = f_.finite_group().order();
    return left_[static_cast<std::size_t>(g) * nf + f.index()];
}

std::shared_ptr<const Orbit> MatchedPair::orbit_of(const FElem& f) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(f); it != cache_.end()) return it->second;
    }
    f_.check(f);
    const FiniteGroup& G = *g_;
    std::vector<FElem> elems;
    for (int g = 0; g < G.order(); ++g) elems.push_back(act_right(g, f));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    auto orbit = std::make_shared<Orbit>();
    orbit->rep = elems.front();
    orbit->elements = std::move(elems);
    const FElem& rep = orbit->rep;
    for (int g = 0; g < G.order(); ++g) {
        if (act_right(g, rep) == rep) orbit->stabilizer.push_back(g);
    }
    orbit->coset_g.assign(static_cast<std::size_t>(G.order()), -1);
    orbit->coset_z.assign(static_cast<std::size_t>(G.order()), -1);
    // sweep G in index order, starting from the identity
    std::vector<int> order;
    order.push_back(G.identity());
    for (int x = 0; x < G.order(); ++x) {
        if (x != G.identity()) order.push_back(x);
    }
    for (int x : order) {
        if (orbit->coset_z[static_cast<std::size_t>(x)] >= 0) continue;
        const int pos = static_cast<int>(orbit->transversal.size());
        orbit->transversal.push_back(x);
        orbit->transversal_image.push_back(act_right(G.inv(x), rep));
        for (int h : orbit->stabilizer) {
            const int y = G.mul(h, x);
            orbit->coset_g[static_cast<std::size_t>(y)] = h;
            orbit->coset_z[static_cast<std::size_t>(y)] = pos;
        }
    }
    if (orbit->transversal.size() * orbit->stabilizer.size() != static_cast<std::size_t>(G.order()) ||
        orbit->transversal.size() != orbit->elements.size()) {
        throw InternalInconsistency("orbit-stabilizer count failed for " + f.to_string());
    }
    std::shared_ptr<const Orbit> result = orbit;
    std::lock_guard lock(cache_mutex_);
    for (const auto& e : result->elements) cache_.emplace(e, result);
    return cache_.at(f);
}

std::vector<int> MatchedPair::g_f_finv(const FElem& f) const {
    const FElem finv = f_.inv(f);
    std::vector<int> out;
    for (int g = 0; g < g_->order(); ++g) {
        if (act_right(g, f) == finv) out.push_back(g);
    }
    return out;
}

std::vector<FElem> MatchedPair::orbit_product(const Orbit& a, const Orbit& b) const {
    std::set<FElem> products;
    for (const auto& x : a.elements) {
        for (const auto& y : b.elements) products.insert(f_.mul(x, y));
    }
    std::vector<FElem> reps;
    std::set<FElem> covered;
    for (const auto& p : products) {
        if (covered.count(p)) continue;
        const auto o = orbit_of(p);
        for (const auto& e : o->elements) {
            if (!products.count(e)) {
                throw InternalInconsistency("orbit product is not a union of orbits (element " + e.to_string() + ")");
            }
            covered.insert(e);
        }
        reps.push_back(o->rep);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<FElem> MatchedPair::orbit_reps(int radius) const {
    std::set<FElem> reps;
    for (const auto& f : f_.ball(radius)) reps.insert(orbit_of(f)->rep);
    return {reps.begin(), reps.end()};
}

CheckReport MatchedPair::verify(int radius) const {
    const FiniteGroup& G = *g_;
    const auto ball = f_.ball(radius);
    CheckReport report;

    std::string scope = f_.is_finite() ? scope_exhaustive() : scope_ball(radius);
    if (linear_) {
        Check& hom = report.add("linear_action_homomorphism", scope_exhaustive());
        IntMatrix id(matrices_.front().size(), std::vector<long long>(matrices_.front().size(), 0));
        for (std::size_t i = 0; i < id.size(); ++i) id[i][i] = 1;
        hom.record(matrices_[static_cast<std::size_t>(G.identity())] == id,
                   [] { return Json{{"law", "M_1 = I"}}; });
        for (int g = 0; g < G.order(); ++g) {
            for (int h = 0; h < G.order(); ++h) {
                const auto& a = matrices_[static_cast<std::size_t>(g)];
                const auto& b = matrices_[static_cast<std::size_t>(h)];
                IntMatrix c(id.size(), std::vector<long long>(id.size(), 0));
                for (std::size_t i = 0; i < id.size(); ++i) {
                    for (std::size_t k = 0; k < id.size(); ++k) {
                        for (std::size_t j = 0; j < id.size(); ++j) c[i][j] += a[i][k] * b[k][j];
                    }
                }
                hom.record(c == matrices_[static_cast<std::size_t>(G.mul(g, h))],
                           [&] { return Json{{"law", "M_gh = M_g M_h"}, {"g", g}, {"h", h}}; });
            }
        }
        if (hom.passed()) scope = scope_global("linear action is a homomorphism and <| is trivial");
    }

    const int e = G.identity();
    const FElem one = f_.identity();
    auto fs = [](const FElem& x) { return x.to_string(); };

    Check& c_id = report.add("right_action_identity", scope);
    for (const auto& f : ball) {
        c_id.record(act_right(e, f) == f, [&] { return Json{{"law", "1_G |> f = f"}, {"f", fs(f)}}; });
    }
    Check& c_unit = report.add("right_action_fixes_unit", scope);
    for (int g = 0; g < G.order(); ++g) {
        c_unit.record(act_right(g, one) == one, [&] { return Json{{"law", "g |> 1_F = 1_F"}, {"g", g}}; });
    }
    Check& c_lunit = report.add("left_action_unit", scope);
    for (int g = 0; g < G.order(); ++g) {
        c_lunit.record(act_left(g, one) == g, [&] { return Json{{"law", "g <| 1_F = g"}, {"g", g}}; });
    }
    for (const auto& f : ball) {
        c_lunit.record(act_left(e, f) == e, [&] { return Json{{"law", "1_G <| f = 1_G"}, {"f", fs(f)}}; });
    }
    Check& c_rc = report.add("right_action_compatibility", scope);
    Check& c_law2 = report.add("matched_pair_law_left", scope);
    for (int g = 0; g < G.order(); ++g) {
        for (int h = 0; h < G.order(); ++h) {
            const int gh = G.mul(g, h);
            for (const auto& f : ball) {
                const FElem hf = act_right(h, f);
                c_rc.record(act_right(gh, f) == act_right(g, hf), [&] {
                    return Json{{"law", "(gh) |> f = g |> (h |> f)"}, {"g", g}, {"h", h}, {"f", fs(f)}};
                });
                c_law2.record(act_left(gh, f) == G.mul(act_left(g, hf), act_left(h, f)), [&] {
                    return Json{{"law", "(gh) <| f = (g <| (h |> f))(h <| f)"}, {"g", g}, {"h", h}, {"f", fs(f)}};
                });
            }
        }
    }
    Check& c_lc = report.add("left_action_compatibility", scope);
    Check& c_law1 = report.add("matched_pair_law_right", scope);
    for (int g = 0; g < G.order(); ++g) {
        for (const auto& f : ball) {
            const FElem gf = act_right(g, f);
            const int glf = act_left(g, f);
            for (const auto& f2 : ball) {
                const FElem ff2 = f_.mul(f, f2);
                if (!linear_) {
                    c_lc.record(act_left(g, ff2) == act_left(glf, f2), [&] {
                        return Json{{"law", "g <| (ff') = (g <| f) <| f'"}, {"g", g}, {"f", fs(f)}, {"f2", fs(f2)}};
                    });
                } else {
                    c_lc.pass();
                }
                c_law1.record(act_right(g, ff2) == f_.mul(gf, act_right(glf, f2)), [&] {
                    return Json{{"law", "g |> (ff') = (g |> f)((g <| f) |> f')"}, {"g", g}, {"f", fs(f)}, {"f2", fs(f2)}};
                });
            }
        }
    }
    Check& c_inv = report.add("inverse_identities", scope);
    for (int g = 0; g < G.order(); ++g) {
        for (const auto& f : ball) {
            const FElem gf = act_right(g, f);
            const int glf = act_left(g, f);
            c_inv.record(f_.inv(gf) == act_right(glf, f_.inv(f)), [&] {
                return Json{{"law", "(g |> f)^-1 = (g <| f) |> f^-1"}, {"g", g}, {"f", fs(f)}};
            });
            c_inv.record(G.inv(glf) == act_left(G.inv(g), gf), [&] {
                return Json{{"law", "(g <| f)^-1 = g^-1 <| (g |> f)"}, {"g", g}, {"f", fs(f)}};
            });
        }
    }
    return report;
}

} // namespace bicross
