#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bicross/cyclotomic.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/report.hpp"
#include "bicross/two_cocycle.hpp"

namespace bicross {

enum class CocycleKind { Trivial, FiniteTable, QuotientLift };

// Shared storage for sigma and tau: a dense index table into a pool of
// distinct values. `slots` counts the F-dependent arguments (2 for sigma,
// 1 for tau), `g_slots` the G-dependent ones (1 for sigma, 2 for tau).
class CocycleTable {
public:
    CocycleTable() = default;
    CocycleTable(CocycleKind kind, int ng, int g_slots, int f_slots, int f_size, std::vector<int> moduli,
                 const std::vector<CycNum>& dense);

    CocycleKind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == CocycleKind::Trivial; }
    const std::vector<int>& moduli() const { return moduli_; }
    int f_size() const { return f_size_; }
    int reduce(const FElem& f) const;
    const CycNum& at(std::size_t flat) const { return pool_[ids_[flat]]; }
    const std::vector<CycNum>& pool() const { return pool_; }
    bool all_unitary() const { return all_unitary_; }
    bool all_nonzero() const;
    int level() const;

private:
    CocycleKind kind_ = CocycleKind::Trivial;
    int f_size_ = 0;
    std::vector<int> moduli_;
    std::vector<std::uint32_t> ids_;
    std::vector<CycNum> pool_{CycNum(1)};
    bool all_unitary_ = true;
};

// sigma : G x F x F -> k^x
class SigmaCocycle {
public:
    static SigmaCocycle trivial();
    // dense[(g * |F| + f) * |F| + f2]
    static SigmaCocycle finite_table(int ng, int nf, const std::vector<CycNum>& dense);
    // dense[(g * |Q| + q) * |Q| + q2], Q = prod Z/m_i with the first coordinate fastest
    static SigmaCocycle quotient_lift(int ng, std::vector<int> moduli, const std::vector<CycNum>& dense);

    const CycNum& operator()(int g, const FElem& f, const FElem& f2) const;
    const CocycleTable& table() const { return t_; }
    bool is_trivial() const { return t_.is_trivial(); }
    CocycleKind kind() const { return t_.kind(); }

private:
    CocycleTable t_;
    int ng_ = 1;
};

// tau : G x G x F -> k^x
class TauCocycle {
public:
    static TauCocycle trivial();
    // dense[(g * |G| + h) * |F| + f]
    static TauCocycle finite_table(int ng, int nf, const std::vector<CycNum>& dense);
    static TauCocycle quotient_lift(int ng, std::vector<int> moduli, const std::vector<CycNum>& dense);

    const CycNum& operator()(int g, int h, const FElem& f) const;
    const CocycleTable& table() const { return t_; }
    bool is_trivial() const { return t_.is_trivial(); }
    CocycleKind kind() const { return t_.kind(); }

private:
    CocycleTable t_;
    int ng_ = 1;
};

// Number of elements of the quotient prod Z/m_i.
int quotient_order(const std::vector<int>& moduli);
// Vector with coordinates equal to the mixed-radix digits of q.
FElem quotient_element(const std::vector<int>& moduli, int q);

CheckReport verify_cocycles(const MatchedPair& mp, const SigmaCocycle& sigma, const TauCocycle& tau, int radius);

struct UnitaryResult {
    bool unitary = true;
    bool global = true; // every stored value has modulus one, not just those on the ball
    Json witness;       // first failing tuple in (g, f, f') / (g, g', f) enumeration order
    Json to_json() const;
};

UnitaryResult is_unitary(const MatchedPair& mp, const SigmaCocycle& sigma, const TauCocycle& tau, int radius);

// The 2-cocycle beta_f(a, b) = tau(a, b; f) on the stabilizer of the orbit
// representative f, with the stabilizer realized as its own FiniteGroup
// (element i of that group is orbit.stabilizer[i] in G).
TwoCocycle beta_for_orbit(const MatchedPair& mp, const TauCocycle& tau, const Orbit& orbit);

} // namespace bicross
