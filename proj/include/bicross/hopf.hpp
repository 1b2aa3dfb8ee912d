#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bicross/cocycles.hpp"
#include "bicross/cyclotomic.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/report.hpp"

namespace bicross {

// p_g # f
struct BasisKey {
    int g = 0;
    FElem f;

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
        if (auto c = a.f <=> b.f; c != 0) return c;
        return a.g <=> b.g;
    }
};

// Finitely supported linear combination of basis elements; zero
// coefficients are never stored.
class HElem {
public:
    using Map = std::map<BasisKey, CycNum>;

    HElem() = default;
    static HElem basis(int g, FElem f, CycNum c = CycNum(1));

    void add(const BasisKey& k, const CycNum& c);
    const Map& terms() const { return terms_; }
    CycNum coeff(const BasisKey& k) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    HElem& operator+=(const HElem& o);
    HElem& operator-=(const HElem& o);
    friend HElem operator+(HElem a, const HElem& b) { return a += b; }
    friend HElem operator-(HElem a, const HElem& b) { return a -= b; }
    HElem scaled(const CycNum& c) const;
    friend bool operator==(const HElem& a, const HElem& b) { return a.terms_ == b.terms_; }

    // [{"g": label, "g_index": i, "f": literal, "coeff": literal}, ...] in key order.
    Json to_json(const FiniteGroup& g) const;
    std::string to_string(const FiniteGroup& g) const;

private:
    Map terms_;
};

using KeyPair = std::pair<BasisKey, BasisKey>;

class HTensor {
public:
    using Map = std::map<KeyPair, CycNum>;

    void add(const KeyPair& k, const CycNum& c);
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    HTensor& operator+=(const HTensor& o);
    friend bool operator==(const HTensor& a, const HTensor& b) { return a.terms_ == b.terms_; }
    Json to_json(const FiniteGroup& g) const;

private:
    Map terms_;
};

struct ScaledKey {
    CycNum coeff;
    BasisKey key;
};

// H = k^G tau#_sigma kF.
class HopfAlgebra {
public:
    HopfAlgebra(std::shared_ptr<const MatchedPair> mp, SigmaCocycle sigma, TauCocycle tau);

    const MatchedPair& pair() const { return *mp_; }
    std::shared_ptr<const MatchedPair> pair_ptr() const { return mp_; }
    const FiniteGroup& G() const { return mp_->G(); }
    const FGroup& F() const { return mp_->F(); }
    const SigmaCocycle& sigma() const { return sigma_; }
    const TauCocycle& tau() const { return tau_; }
    bool cocycles_trivial() const { return sigma_.is_trivial() && tau_.is_trivial(); }
    // All stored cocycle values have modulus one.
    bool star_allowed() const;

    HElem unit() const;

    std::optional<ScaledKey> mul_basis(const BasisKey& a, const BasisKey& b) const;
    HElem mul(const HElem& a, const HElem& b) const;

    // Delta(p_g # f) = sum_x tau(g x^-1, x; f) p_{g x^-1} # (x |> f) (x) p_x # f, in x order.
    std::vector<std::pair<CycNum, KeyPair>> comul_basis(const BasisKey& a) const;
    HTensor comul(const HElem& a) const;
    HTensor tensor_mul(const HTensor& a, const HTensor& b) const;

    CycNum counit(const HElem& a) const;

    ScaledKey antipode_basis(const BasisKey& a) const;
    HElem antipode(const HElem& a) const;

    ScaledKey star_basis(const BasisKey& a) const; // throws NonUnitary unless star_allowed()
    HElem star(const HElem& a) const;

    CycNum integral(const HElem& a) const;
    CycNum haar_gram(const HElem& x, const HElem& y) const;

private:
    std::shared_ptr<const MatchedPair> mp_;
    SigmaCocycle sigma_;
    TauCocycle tau_;
};

// All Hopf axioms on basis elements whose F-part lies in the ball.
CheckReport verify_hopf(const HopfAlgebra& h, int radius);

struct HaarPositivity {
    CycNum value;
    bool certified = false; // exact certificate (rational coefficients)
    bool numerically_positive = false;
    long double min_embedding = 0; // smallest real part over all complex embeddings
};

HaarPositivity haar_positivity(const HopfAlgebra& h, const HElem& x);

// *-structure checks on the ball: involution, conjugate linearity, antimultiplicativity
// on sampled pairs, Delta compatibility, unit fixed, orthogonality of the basis.
CheckReport verify_star(const HopfAlgebra& h, int radius, std::size_t sample_pairs = 2000);

} // namespace bicross
