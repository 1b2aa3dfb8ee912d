#pragma once

#include <complex>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bicross/rational.hpp"

namespace bicross {

namespace detail {
struct LevelData;
const LevelData& level_data(int n);
} // namespace detail

// Largest level accepted for Q(zeta_N); the reduction table is N x phi(N).
inline constexpr int kMaxLevel = 4096;

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1)
// reduced modulo Phi_N. Values keep their level; mixed-level operations lift
// both operands to the lcm.
class CycNum {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    CycNum();
    CycNum(Rational r); // NOLINT(google-explicit-constructor)
    CycNum(std::int64_t n) : CycNum(Rational(n)) {} // NOLINT(google-explicit-constructor)
    CycNum(int n) : CycNum(Rational(std::int64_t{n})) {} // NOLINT(google-explicit-constructor)

    static CycNum root_of_unity(long long k, int n);
    static CycNum from_coeffs(int level, const std::vector<Rational>& coeffs);
    // Sum of c_k * z^k for arbitrary exponents k (taken mod level).
    static CycNum from_exponents(int level, const std::vector<std::pair<long long, Rational>>& terms);

    // Literal grammar: see docs/literals.md.
    static CycNum parse(std::string_view text);
    std::string to_string() const;

    int level() const;
    const Coeffs& coeffs() const { return coeffs_; }

    CycNum lift(int multiple) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const; // throws InvalidInput if not rational

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    CycNum inverse() const;
    CycNum conj() const;
    bool is_modulus_one() const;
    // Multiplicative order if this is a root of unity, otherwise 0.
    int root_order() const;

    // Image under zeta_N -> exp(2 pi i k / N); k = 1 is the principal embedding.
    std::complex<long double> embed(long long k = 1) const;
    // Principal embedding rounded to `digits` decimal places (diagnostics only).
    std::complex<double> approx_complex(int digits = 12) const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    // Total order used only for deterministic sorting: by value at a common
    // level, coefficient vectors compared lexicographically.
    friend std::strong_ordering canonical_compare(const CycNum& a, const CycNum& b);

private:
    CycNum(const detail::LevelData* d, Coeffs c) : field_(d), coeffs_(std::move(c)) {}

    const detail::LevelData* field_;
    Coeffs coeffs_;
};

inline bool canonical_less(const CycNum& a, const CycNum& b) { return canonical_compare(a, b) < 0; }

} // namespace bicross
