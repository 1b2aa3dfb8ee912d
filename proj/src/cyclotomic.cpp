#include "bicross/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>

#include "bicross/error.hpp"

namespace bicross {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

struct LevelData {
    int n = 1;
    int phi = 1;
    // red[j] = coefficients of x^j mod Phi_n, for 0 <= j < n.
    std::vector<std::vector<long long>> red;
};

namespace {

std::recursive_mutex& registry_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<int, std::vector<long long>>& poly_cache() {
    static std::map<int, std::vector<long long>> c;
    return c;
}

std::map<int, std::unique_ptr<LevelData>>& level_cache() {
    static std::map<int, std::unique_ptr<LevelData>> c;
    return c;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const long long c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    for (std::size_t k = 0; k < dd; ++k) {
        if (num[k] != 0) throw InternalInconsistency("cyclotomic polynomial division not exact");
    }
    return q;
}

} // namespace

const LevelData& level_data(int n) {
    if (n < 1 || n > kMaxLevel) {
        throw InvalidInput("cyclotomic level " + std::to_string(n) + " outside supported range 1.." +
                           std::to_string(kMaxLevel));
    }
    std::lock_guard lock(registry_mutex());
    auto& cache = level_cache();
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
    auto d = std::make_unique<LevelData>();
    d->n = n;
    const auto& phi_poly = cyclotomic_polynomial(n);
    d->phi = static_cast<int>(phi_poly.size()) - 1;
    d->red.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(d->phi), 0));
    for (int j = 0; j < n; ++j) {
        if (j < d->phi) {
            d->red[j][j] = 1;
            continue;
        }
        const auto& prev = d->red[j - 1];
        const long long top = prev[d->phi - 1];
        auto& cur = d->red[j];
        for (int i = d->phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < d->phi; ++i) cur[i] -= top * phi_poly[i];
        }
    }
    const LevelData& ref = *d;
    cache.emplace(n, std::move(d));
    return ref;
}

} // namespace detail

const std::vector<long long>& cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidInput("cyclotomic polynomial index must be positive");
    std::lock_guard lock(detail::registry_mutex());
    auto& cache = detail::poly_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = detail::divide_monic(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

namespace {

using detail::LevelData;

// Polynomials over Q as coefficient vectors, constant term first, trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Returns quotient; remainder left in `a`.
Poly poly_divmod(Poly& a, const Poly& b) {
    if (a.size() < b.size()) return {};
    Poly q(a.size() - b.size() + 1);
    const Rational lead_inv = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i].is_zero()) continue;
        const Rational c = a[i] * lead_inv;
        q[i - (b.size() - 1)] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[i - (b.size() - 1) + k] -= c * b[k];
    }
    trim(a);
    trim(q);
    return q;
}

} // namespace

CycNum::CycNum() : field_(&detail::level_data(1)), coeffs_(1) {}

CycNum::CycNum(Rational r) : field_(&detail::level_data(1)), coeffs_{std::move(r)} {}

int CycNum::level() const { return field_->n; }

CycNum CycNum::from_exponents(int level, const std::vector<std::pair<long long, Rational>>& terms) {
    const LevelData& d = detail::level_data(level);
    Coeffs c(static_cast<std::size_t>(d.phi));
    for (const auto& [k, v] : terms) {
        if (v.is_zero()) continue;
        long long e = k % level;
        if (e < 0) e += level;
        if (e < d.phi) {
            c[static_cast<std::size_t>(e)] += v;
        } else {
            const auto& row = d.red[static_cast<std::size_t>(e)];
            for (int i = 0; i < d.phi; ++i) {
                if (row[i] != 0) c[static_cast<std::size_t>(i)] += v * Rational(row[i]);
            }
        }
    }
    return CycNum(&d, std::move(c));
}

CycNum CycNum::root_of_unity(long long k, int n) {
    if (n < 1) throw InvalidInput("root of unity needs a positive level");
    return from_exponents(n, {{k, Rational(1)}});
}

CycNum CycNum::from_coeffs(int level, const std::vector<Rational>& coeffs) {
    const LevelData& d = detail::level_data(level);
    if (coeffs.size() != static_cast<std::size_t>(d.phi)) {
        throw InvalidInput("coefficient vector length must equal phi(" + std::to_string(level) + ")");
    }
    return CycNum(&d, Coeffs(coeffs.begin(), coeffs.end()));
}

CycNum CycNum::lift(int multiple) const {
    const int n = level();
    if (multiple == n) return *this;
    if (multiple % n != 0) {
        throw InvalidInput("cannot lift level " + std::to_string(n) + " to " + std::to_string(multiple));
    }
    const long long step = multiple / n;
    std::vector<std::pair<long long, Rational>> terms;
    terms.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) terms.emplace_back(static_cast<long long>(i) * step, coeffs_[i]);
    }
    return from_exponents(multiple, terms);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CycNum::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational CycNum::to_rational() const {
    if (!is_rational()) throw InvalidInput("value " + to_string() + " is not rational");
    return coeffs_[0];
}

CycNum CycNum::operator-() const {
    Coeffs c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycNum(field_, std::move(c));
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }
    const int l = static_cast<int>(lcm_ll(level(), o.level()));
    *this = lift(l);
    return *this += o.lift(l);
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.field_ != b.field_) {
        const int l = static_cast<int>(lcm_ll(a.level(), b.level()));
        return a.lift(l) * b.lift(l);
    }
    const LevelData& d = *a.field_;
    if (d.n == 1) return CycNum(a.coeffs_[0] * b.coeffs_[0]);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    boost::container::small_vector<Rational, 32> acc(static_cast<std::size_t>(d.n));
    bool any = false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            acc[(i + j) % static_cast<std::size_t>(d.n)] += a.coeffs_[i] * b.coeffs_[j];
            any = true;
        }
    }
    CycNum::Coeffs out(static_cast<std::size_t>(d.phi));
    if (!any) return CycNum(&d, std::move(out));
    for (int k = 0; k < d.n; ++k) {
        const Rational& v = acc[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        if (k < d.phi) {
            out[static_cast<std::size_t>(k)] += v;
            continue;
        }
        const auto& row = d.red[static_cast<std::size_t>(k)];
        for (int i = 0; i < d.phi; ++i) {
            if (row[i] != 0) out[static_cast<std::size_t>(i)] += v * Rational(row[i]);
        }
    }
    return CycNum(&d, std::move(out));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const LevelData& d = *field_;
    if (is_rational()) {
        CycNum r = *this;
        r.coeffs_[0] = coeffs_[0].inverse();
        return r;
    }
    const auto& phi_poly = cyclotomic_polynomial(d.n);
    Poly r0(phi_poly.begin(), phi_poly.end());
    Poly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        Poly rem = r0;
        const Poly q = poly_divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw InternalInconsistency("cyclotomic inverse: nontrivial gcd with Phi_N");
    const Rational c = r0[0].inverse();
    Poly modulus(phi_poly.begin(), phi_poly.end());
    poly_divmod(s0, modulus);
    Coeffs out(static_cast<std::size_t>(d.phi));
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * c;
    return CycNum(&d, std::move(out));
}

CycNum CycNum::conj() const {
    const int n = level();
    if (n <= 2) return *this;
    std::vector<std::pair<long long, Rational>> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) terms.emplace_back(n - static_cast<long long>(i), coeffs_[i]);
    }
    return from_exponents(n, terms);
}

bool CycNum::is_modulus_one() const { return (*this * conj()).is_one(); }

int CycNum::root_order() const {
    if (!is_modulus_one()) return 0;
    const int bound = static_cast<int>(lcm_ll(2, level()));
    CycNum p = *this;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= *this;
    }
    return 0;
}

std::complex<long double> CycNum::embed(long long k) const {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::complex<long double> acc(0, 0);
    const long long n = level();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const long long e = (static_cast<long long>(i) * k) % n;
        const long double ang = two_pi * static_cast<long double>(e) / static_cast<long double>(n);
        const long double c = static_cast<long double>(coeffs_[i].to_double());
        acc += std::complex<long double>(c * std::cos(ang), c * std::sin(ang));
    }
    return acc;
}

std::complex<double> CycNum::approx_complex(int digits) const {
    const auto z = embed(1);
    const long double scale = std::pow(10.0L, static_cast<long double>(digits));
    auto round = [scale](long double v) {
        const long double r = std::round(v * scale) / scale;
        return static_cast<double>(r == 0 ? 0.0L : r);
    };
    return {round(z.real()), round(z.imag())};
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
    const int l = static_cast<int>(lcm_ll(a.level(), b.level()));
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::strong_ordering canonical_compare(const CycNum& a, const CycNum& b) {
    if (a.field_ != b.field_) {
        const int l = static_cast<int>(lcm_ll(a.level(), b.level()));
        return canonical_compare(a.lift(l), b.lift(l));
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const auto c = a.coeffs_[i] <=> b.coeffs_[i];
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string CycNum::to_string() const {
    const int n = level();
    if (n == 1) return coeffs_[0].to_string();
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += "z^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out + "@" + std::to_string(n);
}

namespace {

// Recursive-descent parser for cyclotomic literals.
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := INT ['@' INT] | 'z' ['^' ['-'] INT] ['@' INT] | '(' expr ')' ['@' INT]
// A bare z (no @) takes the lcm of every explicit level in the literal.
class LiteralParser {
public:
    explicit LiteralParser(std::string_view s) : s_(s) {}

    CycNum parse() {
        scan_levels();
        pos_ = 0;
        CycNum v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        if (default_level_ > 1 && v.level() != default_level_) {
            v = v.lift(static_cast<int>(lcm_ll(v.level(), default_level_)));
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidInput("cyclotomic literal '" + std::string(s_) + "': syntax error at position " +
                           std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 17) fail("integer literal too long");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    void scan_levels() {
        long long l = 1;
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] != '@') continue;
            pos_ = i + 1;
            const long long n = integer();
            if (n < 1 || n > kMaxLevel) fail("level out of range");
            l = lcm_ll(l, n);
            if (l > kMaxLevel) fail("combined level out of range");
        }
        default_level_ = static_cast<int>(l);
    }

    std::optional<int> level_suffix() {
        if (!peek('@')) return std::nullopt;
        ++pos_;
        return static_cast<int>(integer());
    }

    CycNum expr() {
        CycNum v = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    CycNum term() {
        CycNum v = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                const CycNum d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycNum unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        return primary();
    }

    CycNum with_level(CycNum v) {
        if (auto l = level_suffix()) {
            if (*l % v.level() != 0) fail("level suffix incompatible with value");
            v = v.lift(*l);
        }
        return v;
    }

    CycNum primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of literal");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            CycNum v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return with_level(std::move(v));
        }
        if (c == 'z') {
            ++pos_;
            long long k = 1;
            if (peek('^')) {
                ++pos_;
                bool neg = false;
                if (peek('-')) {
                    ++pos_;
                    neg = true;
                }
                k = integer();
                if (neg) k = -k;
            }
            int level = default_level_;
            if (auto l = level_suffix()) {
                level = *l;
            } else if (default_level_ == 1) {
                fail("z needs a level (z^k@N)");
            }
            return CycNum::root_of_unity(k, level);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return with_level(CycNum(Rational(integer())));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int default_level_ = 1;
};

} // namespace

CycNum CycNum::parse(std::string_view text) { return LiteralParser(text).parse(); }

} // namespace bicross
