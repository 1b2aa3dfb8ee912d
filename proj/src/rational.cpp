#include "bicross/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "bicross/error.hpp"

namespace bicross {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from(i128 v) {
    const u128 mag = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != mpz_class(std::numeric_limits<long>::min());
}

} // namespace

Rational::Rational(std::int64_t n) {
    if (n == std::numeric_limits<std::int64_t>::min()) {
        assign_mpq(mpq_class(mpz_from(n)));
    } else {
        num_ = n;
    }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    set_small(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

void Rational::set_small(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (n <= kMax && n >= -kMax && d <= kMax) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from(n), mpz_from(d));
    q.canonicalize();
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Rational::assign_mpq(mpq_class q) {
    q.canonicalize();
    if (fits_small(q.get_num()) && fits_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidInput("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from(num_), mpz_from(den_));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_mpq(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s = 0;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                num_ = s;
                return *this;
            }
        }
        set_small(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const std::int64_t g1 = std::gcd(num_, o.den_);
        const std::int64_t g2 = std::gcd(o.num_, den_);
        const i128 n = i128(num_ / g1) * (o.num_ / g2);
        const i128 d = i128(den_ / g2) * (o.den_ / g1);
        if (n <= kMax && n >= -kMax && d <= kMax) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        set_small(n, d);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    if (big_) {
        r.assign_mpq(1 / *big_);
    } else {
        r.set_small(den_, num_);
    }
    return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical: small and big never represent the same value
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 l = i128(a.num_) * b.den_;
        const i128 r = i128(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    const std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace bicross
