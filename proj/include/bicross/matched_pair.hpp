#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "bicross/groups.hpp"
#include "bicross/report.hpp"

namespace bicross {

using IntMatrix = std::vector<std::vector<long long>>;

// Orbit of the canonical representative `rep` under the left action of G.
struct Orbit {
    FElem rep;
    std::vector<FElem> elements;          // sorted
    std::vector<int> stabilizer;          // G_f, sorted indices
    std::vector<int> transversal;         // right coset representatives, identity first
    std::vector<FElem> transversal_image; // z^-1 |> rep for each transversal element
    std::vector<int> coset_g;             // x = coset_g[x] * transversal[coset_z[x]]
    std::vector<int> coset_z;

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(const FElem& f) const;
    // Position of z^-1 |> rep == f in the transversal, or -1.
    int transversal_position(const FElem& f) const;
};

// A matched pair (F, G, <|, |>): G acts on F from the left by |> and F acts
// on G from the right by <|. For F = Z^r the action is linear (g |> v = M_g v)
// and <| is trivial.
class MatchedPair {
public:
    // right[g * |F| + f] = index of g |> f,  left[g * |F| + f] = index of g <| f.
    static std::shared_ptr<const MatchedPair> with_tables(std::shared_ptr<const FiniteGroup> g, FGroup f,
                                                          std::vector<int> right, std::vector<int> left);
    static std::shared_ptr<const MatchedPair> with_linear(std::shared_ptr<const FiniteGroup> g, int rank,
                                                          std::vector<IntMatrix> matrices);

    const FiniteGroup& G() const { return *g_; }
    const FGroup& F() const { return f_; }
    bool is_linear() const { return linear_; }
    bool left_trivial() const { return left_trivial_; }
    const std::vector<IntMatrix>& matrices() const { return matrices_; }

    FElem act_right(int g, const FElem& f) const;
    int act_left(int g, const FElem& f) const;

    std::shared_ptr<const Orbit> orbit_of(const FElem& f) const;
    FElem canonical(const FElem& f) const { return orbit_of(f)->rep; }
    std::vector<int> g_f_finv(const FElem& f) const;
    // Canonical representatives of the orbits whose disjoint union is O1 * O2, sorted.
    std::vector<FElem> orbit_product(const Orbit& a, const Orbit& b) const;
    // Canonical representatives of all orbits meeting the ball, sorted.
    std::vector<FElem> orbit_reps(int radius) const;

    CheckReport verify(int radius) const;

private:
    MatchedPair() = default;

    std::shared_ptr<const FiniteGroup> g_;
    FGroup f_;
    bool linear_ = false;
    bool left_trivial_ = true;
    std::vector<int> right_;
    std::vector<int> left_;
    std::vector<IntMatrix> matrices_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<FElem, std::shared_ptr<const Orbit>, FElemHash> cache_;
};

} // namespace bicross
