#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bicross {

// Exact rational number. Values that fit in int64 numerator/denominator are
// stored inline; anything larger spills to a shared immutable mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    // Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    // Only valid when the value fits (is_small()).
    bool is_small() const { return !big_; }
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }

    mpq_class to_mpq() const;
    double to_double() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    void assign_mpq(mpq_class q); // canonicalizes and demotes when possible
    void set_small(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace bicross
