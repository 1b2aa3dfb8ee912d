#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicross/comodules.hpp"

namespace bicross {

struct FusionTerm {
    std::string id;
    FElem rep;
    int index = 0;
    int dim = 0; // dim_total of the summand
    long long multiplicity = 0;

    friend bool operator==(const FusionTerm& a, const FusionTerm& b) {
        return a.id == b.id && a.multiplicity == b.multiplicity;
    }
};

struct FusionRow {
    std::string left, right;
    int left_dim = 0, right_dim = 0;
    std::vector<FusionTerm> summands; // sorted by (rep, index)

    long long multiplicity_of(const std::string& id) const;
    Json to_json() const;
};

struct FusionTable {
    std::vector<SimpleDesc> simples;
    std::vector<FusionRow> rows; // (i, j) for all i, j in `simples`, row-major
    std::map<std::string, std::string> duals;
    std::map<std::string, int> indicators;
    std::vector<std::pair<std::string, std::string>> asymmetric; // pairs with i < j and row(i,j) != row(j,i)
    std::string unit_id;
    int radius = 0;

    const FusionRow* find(const std::string& left, const std::string& right) const;
    Json to_json(const ComoduleEngine& e) const;
};

// Decomposition of products of irreducible characters, with memoized rows.
// Not thread-safe.
class FusionEngine {
public:
    explicit FusionEngine(const ComoduleEngine& e) : e_(e) {}

    const ComoduleEngine& comodules() const { return e_; }

    // Solves chi_a chi_b = sum m_c chi_c over the simples of every orbit in
    // O_a O_b. Non-integral, negative or unsolvable results throw
    // InternalInconsistency. With `ball`, candidate orbits must meet it
    // (BallTooSmall otherwise).
    const FusionRow& decompose(const SimpleDesc& a, const SimpleDesc& b, std::optional<int> ball = std::nullopt);

    // The simple whose character is S(chi(d)).
    const SimpleDesc& dual_of(const SimpleDesc& d);
    bool is_self_dual(const SimpleDesc& d) { return &dual_of(d) == &e_.simple(d.rep(), d.index); }
    // nu_2 = T(m(Delta(chi))), checked to lie in {-1, 0, 1} and to vanish exactly off self-dual simples.
    int fs_indicator(const SimpleDesc& d);

    // Closed-form rows for smash products with abelian G and trivial <|, when
    // all non-identity elements of F have the same stabilizer. nullopt when the
    // hypotheses fail.
    std::optional<FusionRow> smash_shortcut(const SimpleDesc& a, const SimpleDesc& b);
    // Self-duality by V = V* and G_{f,f^-1} nonempty; nullopt outside that setting.
    std::optional<bool> smash_self_dual(const SimpleDesc& d) const;

private:
    FusionTerm term(const SimpleDesc& d, long long mult) const;
    bool smash_setting() const;
    bool uniform_stabilizers() const;

    const ComoduleEngine& e_;
    std::map<std::pair<std::string, std::string>, FusionRow> rows_;
    std::map<std::string, const SimpleDesc*> duals_;
    std::map<std::string, int> indicators_;
};

FusionTable fusion_table(FusionEngine& fe, const std::vector<SimpleDesc>& simples, int radius);

// Based-ring axioms on a table: unit laws, unit multiplicity = [j = i*],
// dimension homomorphism, N_ij^k = N_{j* i*}^{k*}, indicator symmetry under
// duality, and associativity on sampled triples. Missing rows are computed
// through `fe` when given, otherwise those instances are skipped.
CheckReport verify_based_ring(const FusionTable& t, FusionEngine* fe = nullptr, std::size_t triples = 200);

} // namespace bicross
