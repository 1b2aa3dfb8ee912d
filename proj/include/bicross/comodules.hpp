#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bicross/hopf.hpp"
#include "bicross/reps.hpp"

namespace bicross {

// A simple right H-comodule, given as the comodule induced from the simple
// comodule of the twisted stabilizer coalgebra with character `chi`.
struct SimpleDesc {
    std::string id; // "<orbit rep>:<index>"
    std::shared_ptr<const Orbit> orbit;
    int index = 0;  // position in the orbit's character table
    TwistedChar chi; // on the stabilizer, element i = orbit->stabilizer[i]
    int dim_v = 1;
    int dim_total = 1; // |T_f| * dim_v

    const FElem& rep() const { return orbit->rep; }
};

// Order used everywhere simples are listed: (orbit rep, index).
bool simple_less(const SimpleDesc& a, const SimpleDesc& b);

struct CfBasis {
    std::shared_ptr<const Orbit> orbit;
    std::vector<BasisKey> keys; // p_g # f' for g in G, f' in the orbit, sorted
    bool is_simple = false;        // G_f trivial
    bool antipode_stable = false;  // some g maps f to f^-1

    int dimension() const { return static_cast<int>(keys.size()); }
};

// Everything attached to one orbit; built once per engine.
struct OrbitSimples {
    std::shared_ptr<const Orbit> orbit;
    TwoCocycle beta; // tau(a, b; f) on the stabilizer
    CharTable table;
    std::vector<SimpleDesc> simples;
};

// Dense square matrix over Q(zeta_N).
using CycMatrix = std::vector<std::vector<CycNum>>;

// Caches orbit data, character tables and characters for one Hopf algebra.
// Not thread-safe; use one engine per thread.
class ComoduleEngine {
public:
    // `user_tables` maps canonical orbit representatives to raw rows whose
    // values are keyed by G element (index or label).
    explicit ComoduleEngine(std::shared_ptr<const HopfAlgebra> h, std::map<FElem, Json> user_tables = {},
                            int max_extension_order = kMaxExtensionOrder);

    const HopfAlgebra& hopf() const { return *h_; }
    const MatchedPair& pair() const { return h_->pair(); }

    CfBasis cf_subcoalgebra(const FElem& f) const;

    // Throws InternalInconsistency if the counting identity
    // sum dim_total^2 = |G| |O_f| fails.
    const OrbitSimples& orbit_simples(const FElem& f) const;
    const std::vector<SimpleDesc>& simples_for_orbit(const FElem& f) const { return orbit_simples(f).simples; }

    const SimpleDesc& simple(const FElem& f, int index) const;
    // Accepts "<f>:<i>" or "<f>,<i>" (split at the last separator).
    const SimpleDesc& find(const std::string& id) const;
    // Trivial comodule: the trivial character over the orbit of 1_F.
    const SimpleDesc& unit_simple() const;

    // sum_z sum_g tau(z^-1, g; f)^-1 tau(z^-1 g z, z^-1; f) chi(g) p_{z^-1 g z} # (z^-1 |> f)
    const HElem& character(const SimpleDesc& d) const;
    // The same sum written over g^-1; must coincide with character().
    HElem character_inverse_form(const SimpleDesc& d) const;

    // Simples over every orbit meeting the ball, sorted by (rep, index).
    std::vector<SimpleDesc> enumerate(int radius) const;

    // Coaction matrices A^g (g in the stabilizer, by position) with
    // A^a A^b = tau(a, b; f) A^{ab}; derived from chi when dim_v = 1.
    std::vector<CycMatrix> default_matrices(const SimpleDesc& d) const;
    // Multiplicative matrix of the coefficient coalgebra, indexed by
    // (transversal position, i). Validates the matrices against chi and the
    // cocycle (InvalidInput), then checks multiplicativity, counit, trace and
    // linear independence (InternalInconsistency).
    std::vector<std::vector<HElem>> coefficient_matrix(const SimpleDesc& d, const std::vector<CycMatrix>& a) const;
    std::vector<HElem> coefficient_basis(const SimpleDesc& d, const std::vector<CycMatrix>& a) const;

    // Matrices given in a user table row under "matrices": {"<g>": [[lit, ...], ...]}.
    std::vector<CycMatrix> user_matrices(const SimpleDesc& d) const;

    std::string format_f(const FElem& f) const { return pair().F().format(f); }
    Json to_json(const SimpleDesc& d) const;

private:
    CharTable build_table(const Orbit& o, const TwoCocycle& beta) const;
    Json user_rows_by_stabilizer(const Orbit& o) const;

    std::shared_ptr<const HopfAlgebra> h_;
    std::map<FElem, Json> user_tables_;
    int max_extension_order_;
    mutable std::map<FElem, std::unique_ptr<OrbitSimples>> orbits_;
    mutable std::map<std::pair<FElem, int>, HElem> characters_;
};

} // namespace bicross
