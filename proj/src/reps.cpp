#include "bicross/reps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "bicross/error.hpp"
#include "bicross/linalg.hpp"

namespace bicross {
namespace {

using u64 = std::uint64_t;

// Arithmetic in F_p for p < 2^32.
struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        if (a % p == 0) throw InternalInconsistency("inverting zero in F_p");
        return pow(a, p - 2);
    }
    u64 from(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
    }
};

using Mat = std::vector<std::vector<u64>>;
using Vec = std::vector<u64>;

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 primitive_root(const Fp& f) {
    const auto fac = prime_factors(f.p - 1);
    for (u64 g = 2; g < f.p; ++g) {
        bool ok = true;
        for (u64 q : fac) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
        if (ok) return g;
    }
    return 1; // p = 2
}

// Rows reduced to echelon form with leading ones; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const Fp& f) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const u64 inv = f.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const u64 factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Basis of the right nullspace of a square matrix.
std::vector<Vec> nullspace(Mat a, const Fp& f) {
    const std::size_t n = a.size();
    const auto pivots = rref(a, f);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial (constant term first) via reduction to Hessenberg form.
Vec char_poly(Mat h, const Fp& f) {
    const std::size_t s = h.size();
    for (std::size_t m = 1; m + 1 < s; ++m) {
        std::size_t i = m;
        while (i < s && h[i][m - 1] == 0) ++i;
        if (i == s) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (auto& row : h) std::swap(row[i], row[m]);
        }
        const u64 inv = f.inv(h[m][m - 1]);
        for (std::size_t r = m + 1; r < s; ++r) {
            const u64 u = f.mul(h[r][m - 1], inv);
            if (u == 0) continue;
            for (std::size_t j = 0; j < s; ++j) h[r][j] = f.sub(h[r][j], f.mul(u, h[m][j]));
            for (std::size_t j = 0; j < s; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][r]));
        }
    }
    std::vector<Vec> p(s + 1);
    p[0] = {1};
    for (std::size_t k = 0; k < s; ++k) {
        Vec q(k + 2, 0);
        for (std::size_t i = 0; i < p[k].size(); ++i) {
            q[i + 1] = f.add(q[i + 1], p[k][i]);
            q[i] = f.sub(q[i], f.mul(h[k][k], p[k][i]));
        }
        u64 prod = 1;
        for (std::size_t i = k; i-- > 0;) {
            prod = f.mul(prod, h[i + 1][i]);
            const u64 coef = f.mul(h[i][k], prod);
            if (coef == 0) continue;
            for (std::size_t t = 0; t < p[i].size(); ++t) q[t] = f.sub(q[t], f.mul(coef, p[i][t]));
        }
        p[k + 1] = std::move(q);
    }
    return p[s];
}

u64 eval_poly(const Vec& poly, u64 x, const Fp& f) {
    u64 r = 0;
    for (std::size_t i = poly.size(); i-- > 0;) r = f.add(f.mul(r, x), poly[i]);
    return r;
}

int isqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void sort_table(std::vector<TwistedChar>& chars) {
    auto is_trivial = [](const TwistedChar& c) {
        return std::all_of(c.values.begin(), c.values.end(), [](const CycNum& v) { return v.is_one(); });
    };
    std::stable_sort(chars.begin(), chars.end(), [&](const TwistedChar& a, const TwistedChar& b) {
        const bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (a.dim != b.dim) return a.dim < b.dim;
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            const auto c = canonical_compare(a.values[i], b.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
}

[[noreturn]] void fail(bool user_input, const std::string& msg) {
    if (user_input) throw InvalidInput("character table rejected: " + msg);
    throw InternalInconsistency("character table verification failed: " + msg);
}

} // namespace

std::string to_string(CharProvenance p) {
    switch (p) {
    case CharProvenance::AbelianDirect: return "abelian-direct";
    case CharProvenance::Ordinary: return "ordinary";
    case CharProvenance::CentralExtension: return "central-extension";
    case CharProvenance::UserSupplied: return "user-supplied";
    }
    return "unknown";
}

CharTable abelian_char_table(std::shared_ptr<const FiniteGroup> a) {
    if (!a->is_abelian()) throw InvalidInput("abelian character table requested for a non-abelian group");
    const auto dec = abelian_invariants(*a);
    const int n = a->order();
    const int e = dec.invariants.empty() ? 1 : dec.invariants.back();
    CharTable t;
    t.group = a;
    t.provenance = CharProvenance::AbelianDirect;
    const std::size_t k = dec.invariants.size();
    std::vector<int> idx(k, 0);
    for (int c = 0; c < n; ++c) {
        TwistedChar ch;
        ch.dim = 1;
        ch.values.reserve(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            long long expo = 0;
            for (std::size_t i = 0; i < k; ++i) {
                expo += static_cast<long long>(idx[i]) * dec.coords[static_cast<std::size_t>(x)][i] *
                        (e / dec.invariants[i]);
            }
            ch.values.push_back(CycNum::root_of_unity(expo % e, e));
        }
        t.chars.push_back(std::move(ch));
        // advance the exponent tuple, last factor fastest (first most significant)
        for (std::size_t i = k; i-- > 0;) {
            if (++idx[i] < dec.invariants[i]) break;
            idx[i] = 0;
        }
    }
    return t;
}

CharTable ordinary_char_table(std::shared_ptr<const FiniteGroup> g, int max_order) {
    const FiniteGroup& G = *g;
    const int n = G.order();
    if (n > max_order) {
        throw ProviderUnavailable("no built-in character table for groups of order " + std::to_string(n) +
                                  " (limit " + std::to_string(max_order) + "); supply a user table");
    }
    const int e = G.exponent();
    const auto classes = G.conjugacy_classes();
    const auto cls = G.class_index();
    const std::size_t r = classes.size();
    const std::size_t id_class = static_cast<std::size_t>(cls[static_cast<std::size_t>(G.identity())]);

    const int sq = isqrt(n);
    u64 p = static_cast<u64>(e) + 1;
    while (!(p > static_cast<u64>(2 * sq + 2) && is_prime(p))) p += static_cast<u64>(e);
    const Fp f{p};
    const u64 z = f.pow(primitive_root(f), (p - 1) / static_cast<u64>(e));

    // class matrices M_j[k][l] = #{x in C_j : x^-1 g_l in C_k}
    std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
            const int gl = classes[l].front();
            for (int x : classes[j]) {
                const auto k = static_cast<std::size_t>(cls[static_cast<std::size_t>(G.mul(G.inv(x), gl))]);
                mats[j][k][l] += 1;
            }
        }
    }

    // simultaneous eigenspaces: each space is an echelon basis (rows) plus its pivot columns
    struct Space {
        Mat basis;
        std::vector<std::size_t> pivots;
    };
    std::vector<Space> spaces;
    {
        Mat id(r, Vec(r, 0));
        for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
        auto piv = rref(id, f);
        spaces.push_back({std::move(id), std::move(piv)});
    }
    for (std::size_t j = 0; j < r; ++j) {
        if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
        std::vector<Space> next;
        for (auto& sp : spaces) {
            const std::size_t s = sp.basis.size();
            if (s == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // X[a][b] = coordinate a of M_j * basis_b
            Mat x(s, Vec(s, 0));
            for (std::size_t b = 0; b < s; ++b) {
                for (std::size_t a = 0; a < s; ++a) {
                    const std::size_t row = sp.pivots[a];
                    u64 acc = 0;
                    for (std::size_t c = 0; c < r; ++c) acc = f.add(acc, f.mul(mats[j][row][c] % p, sp.basis[b][c]));
                    x[a][b] = acc;
                }
            }
            const Vec poly = char_poly(x, f);
            std::vector<u64> roots;
            for (u64 lam = 0; lam < p; ++lam) {
                if (eval_poly(poly, lam, f) == 0) roots.push_back(lam);
            }
            if (roots.size() == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            std::size_t total = 0;
            for (u64 lam : roots) {
                Mat shifted = x;
                for (std::size_t a = 0; a < s; ++a) shifted[a][a] = f.sub(shifted[a][a], lam);
                Mat vecs;
                for (const auto& c : nullspace(shifted, f)) {
                    Vec v(r, 0);
                    for (std::size_t b = 0; b < s; ++b) {
                        if (c[b] == 0) continue;
                        for (std::size_t t = 0; t < r; ++t) v[t] = f.add(v[t], f.mul(c[b], sp.basis[b][t]));
                    }
                    vecs.push_back(std::move(v));
                }
                auto piv = rref(vecs, f);
                total += vecs.size();
                next.push_back({std::move(vecs), std::move(piv)});
            }
            if (total != s) throw InternalInconsistency("class algebra is not split over F_" + std::to_string(p));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) {
        throw InternalInconsistency("class matrices did not separate the " + std::to_string(r) + " characters");
    }

    std::vector<int> inv_class(r);
    for (std::size_t k = 0; k < r; ++k) {
        inv_class[k] = cls[static_cast<std::size_t>(G.inv(classes[k].front()))];
    }

    CharTable table;
    table.group = g;
    table.provenance = CharProvenance::Ordinary;
    for (const auto& sp : spaces) {
        Vec w = sp.basis.front();
        const u64 norm = f.inv(w[id_class]);
        for (auto& x : w) x = f.mul(x, norm);
        u64 sum = 0;
        for (std::size_t k = 0; k < r; ++k) {
            sum = f.add(sum, f.mul(f.mul(w[k], w[static_cast<std::size_t>(inv_class[k])]),
                                   f.inv(static_cast<u64>(classes[k].size()))));
        }
        const u64 d2 = f.mul(static_cast<u64>(n) % p, f.inv(sum));
        int d = 0;
        for (int c = 1; c <= sq; ++c) {
            if (static_cast<u64>(c) * static_cast<u64>(c) % p == d2) d = c;
        }
        if (d == 0) throw InternalInconsistency("no character degree matches the central character");
        Vec modp(r);
        for (std::size_t k = 0; k < r; ++k) {
            modp[k] = f.mul(f.mul(w[k], static_cast<u64>(d)), f.inv(static_cast<u64>(classes[k].size())));
        }
        std::vector<CycNum> class_values(r);
        for (std::size_t k = 0; k < r; ++k) {
            const int rep = classes[k].front();
            const int o = G.element_order(rep);
            const u64 zo = f.pow(z, static_cast<u64>(e / o));
            const u64 inv_o = f.inv(static_cast<u64>(o));
            std::vector<std::pair<long long, Rational>> terms;
            for (int t = 0; t < o; ++t) {
                u64 acc = 0;
                for (int l = 0; l < o; ++l) {
                    const auto kl = static_cast<std::size_t>(cls[static_cast<std::size_t>(G.power(rep, l))]);
                    const u64 root = f.pow(zo, static_cast<u64>((static_cast<long long>(o) * o - static_cast<long long>(t) * l) % o));
                    acc = f.add(acc, f.mul(modp[kl], root));
                }
                const u64 mt = f.mul(acc, inv_o);
                if (mt > static_cast<u64>(d)) throw InternalInconsistency("eigenvalue multiplicity out of range while lifting");
                if (mt) terms.emplace_back(static_cast<long long>(t) * (e / o), Rational(static_cast<std::int64_t>(mt)));
            }
            class_values[k] = CycNum::from_exponents(e, terms);
        }
        TwistedChar ch;
        ch.dim = d;
        ch.values.resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) ch.values[static_cast<std::size_t>(x)] = class_values[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])];
        table.chars.push_back(std::move(ch));
    }
    sort_table(table.chars);
    verify_char_table(table, nullptr);
    return table;
}

CentralExtension central_extension(const TwoCocycle& beta, int max_order) {
    const FiniteGroup& h = beta.group();
    const int n = h.order();
    long long m = 1;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int o = beta(a, b).root_order();
            if (o == 0) {
                throw InvalidInput("2-cocycle value " + beta(a, b).to_string() + " at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ") is not a root of unity");
            }
            m = lcm_ll(m, o);
        }
    }
    if (static_cast<long long>(n) * m > max_order) {
        throw ProviderUnavailable("central extension of order " + std::to_string(static_cast<long long>(n) * m) +
                                  " exceeds the limit " + std::to_string(max_order) + "; supply a user table");
    }
    CentralExtension ext;
    ext.m = static_cast<int>(m);
    ext.exponent.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<CycNum> roots;
    for (int c = 0; c < ext.m; ++c) roots.push_back(CycNum::root_of_unity(c, ext.m));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const CycNum& v = beta(a, b);
            int found = -1;
            for (int c = 0; c < ext.m && found < 0; ++c) {
                if (roots[static_cast<std::size_t>(c)] == v) found = c;
            }
            if (found < 0) throw InternalInconsistency("root of unity not located in its cyclic group");
            ext.exponent[static_cast<std::size_t>(a) * n + b] = found;
        }
    }
    const int em = ext.m;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n * em), std::vector<int>(static_cast<std::size_t>(n * em)));
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < em; ++j)
            for (int b = 0; b < n; ++b)
                for (int l = 0; l < em; ++l) {
                    const int c = ext.exponent[static_cast<std::size_t>(a) * n + b];
                    table[static_cast<std::size_t>(a * em + j)][static_cast<std::size_t>(b * em + l)] =
                        h.mul(a, b) * em + (j + l + c) % em;
                }
    ext.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table, max_order));
    return ext;
}

CharTable twisted_char_table(const TwoCocycle& beta, int max_order) {
    beta.check_cocycle_identity();
    auto h = beta.group_ptr();
    if (beta.is_trivial()) {
        return h->is_abelian() ? abelian_char_table(h) : ordinary_char_table(h, max_order);
    }
    const auto ext = central_extension(beta, max_order);
    const CharTable et = ext.group->is_abelian() ? abelian_char_table(ext.group) : ordinary_char_table(ext.group, max_order);
    const int m = ext.m;
    const int e = h->identity();
    const CycNum zeta = CycNum::root_of_unity(1, m);
    CharTable t;
    t.group = h;
    t.provenance = CharProvenance::CentralExtension;
    for (const auto& c : et.chars) {
        const CycNum& at_one = c.values[static_cast<std::size_t>(e * m)];
        const CycNum& at_center = c.values[static_cast<std::size_t>(e * m + 1)];
        if (at_center != zeta * at_one) continue;
        TwistedChar tc;
        tc.dim = c.dim;
        for (int a = 0; a < h->order(); ++a) tc.values.push_back(c.values[static_cast<std::size_t>(a * m)]);
        t.chars.push_back(std::move(tc));
    }
    sort_table(t.chars);
    verify_char_table(t, &beta);
    return t;
}

CharTable user_char_table(std::shared_ptr<const FiniteGroup> h, const Json& rows, const TwoCocycle* beta) {
    if (!rows.is_array()) throw InvalidInput("character table rejected: expected an array of rows");
    CharTable t;
    t.group = h;
    t.provenance = CharProvenance::UserSupplied;
    const int n = h->order();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "row " + std::to_string(i);
        const Json& row = rows[i];
        if (!row.is_object() || !row.contains("dim") || !row.contains("values")) {
            throw InvalidInput("character table rejected: " + where + " needs 'dim' and 'values'");
        }
        if (!row["dim"].is_number_integer() || row["dim"].get<long long>() < 1) {
            throw InvalidInput("character table rejected: " + where + " has a non-positive dim");
        }
        TwistedChar c;
        c.dim = row["dim"].get<int>();
        c.values.assign(static_cast<std::size_t>(n), CycNum(0));
        const Json& vals = row["values"];
        if (!vals.is_object()) throw InvalidInput("character table rejected: " + where + " values must be an object");
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            int idx = -1;
            try {
                std::size_t used = 0;
                idx = std::stoi(it.key(), &used);
                if (used != it.key().size()) idx = -1;
            } catch (const std::exception&) {
                idx = -1;
            }
            if (idx < 0 || idx >= n) {
                throw InvalidInput("character table rejected: " + where + " has bad element key '" + it.key() + "'");
            }
            try {
                c.values[static_cast<std::size_t>(idx)] =
                    it.value().is_number_integer() ? CycNum(Rational(it.value().get<std::int64_t>()))
                                                   : CycNum::parse(it.value().get<std::string>());
            } catch (const Error& err) {
                throw InvalidInput("character table rejected: " + where + " value at " + it.key() + ": " + err.what());
            } catch (const Json::exception&) {
                throw InvalidInput("character table rejected: " + where + " value at " + it.key() + " must be a literal");
            }
        }
        t.chars.push_back(std::move(c));
    }
    verify_char_table(t, beta && !beta->is_trivial() ? beta : nullptr, true);
    return t;
}

void verify_char_table(const CharTable& t, const TwoCocycle* beta, bool user_input) {
    const FiniteGroup& h = *t.group;
    const int n = h.order();
    const auto e = static_cast<std::size_t>(h.identity());
    if (t.chars.empty()) fail(user_input, "empty table (sum of squared degrees 0 != " + std::to_string(n) + ")");
    long long sum = 0;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        const auto& c = t.chars[i];
        if (c.values.size() != static_cast<std::size_t>(n)) fail(user_input, "row " + std::to_string(i) + " has the wrong length");
        if (c.values[e] != CycNum(c.dim)) {
            fail(user_input, "row " + std::to_string(i) + " value at the identity is not its dimension");
        }
        sum += static_cast<long long>(c.dim) * c.dim;
    }
    if (sum != n) {
        fail(user_input, "sum of squared degrees " + std::to_string(sum) + " != " + std::to_string(n));
    }

    if (beta == nullptr) {
        const auto classes = h.conjugacy_classes();
        const auto cls = h.class_index();
        if (t.chars.size() != classes.size()) {
            fail(user_input, std::to_string(t.chars.size()) + " characters for " + std::to_string(classes.size()) + " classes");
        }
        for (std::size_t i = 0; i < t.chars.size(); ++i) {
            for (int x = 0; x < n; ++x) {
                const int rep = classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])].front();
                if (t.chars[i].values[static_cast<std::size_t>(x)] != t.chars[i].values[static_cast<std::size_t>(rep)]) {
                    fail(user_input, "row " + std::to_string(i) + " is not a class function");
                }
            }
        }
        // row orthogonality: (1/|H|) sum_g chi_i(g) chi_j(g^-1) = delta_ij, summed by classes
        for (std::size_t i = 0; i < t.chars.size(); ++i) {
            for (std::size_t j = i; j < t.chars.size(); ++j) {
                CycNum s(0);
                for (const auto& c : classes) {
                    const auto g = static_cast<std::size_t>(c.front());
                    const auto gi = static_cast<std::size_t>(h.inv(c.front()));
                    s += CycNum(static_cast<std::int64_t>(c.size())) * t.chars[i].values[g] * t.chars[j].values[gi];
                }
                if (s != CycNum(i == j ? n : 0)) {
                    fail(user_input, "rows " + std::to_string(i) + " and " + std::to_string(j) + " violate orthogonality");
                }
            }
        }
        // column orthogonality: sum_i chi_i(g) chi_i(h^-1) = delta |C(g)|
        for (std::size_t k = 0; k < classes.size(); ++k) {
            for (std::size_t l = k; l < classes.size(); ++l) {
                const auto g = static_cast<std::size_t>(classes[k].front());
                const auto hi = static_cast<std::size_t>(h.inv(classes[l].front()));
                CycNum s(0);
                for (const auto& c : t.chars) s += c.values[g] * c.values[hi];
                const CycNum want = k == l ? CycNum(static_cast<std::int64_t>(n / static_cast<int>(classes[k].size()))) : CycNum(0);
                if (s != want) {
                    fail(user_input, "classes " + std::to_string(k) + " and " + std::to_string(l) + " violate column orthogonality");
                }
            }
        }
        return;
    }

    // twisted: independence always; projective orthogonality when beta is unitary
    std::vector<std::vector<CycNum>> rows;
    for (const auto& c : t.chars) rows.push_back(c.values);
    if (dense_rank(rows) != t.chars.size()) fail(user_input, "characters are linearly dependent");
    bool unitary = true;
    for (int a = 0; a < n && unitary; ++a)
        for (int b = 0; b < n && unitary; ++b) unitary = (*beta)(a, b).is_modulus_one();
    if (!unitary) return;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        for (std::size_t j = i; j < t.chars.size(); ++j) {
            CycNum s(0);
            for (int x = 0; x < n; ++x) {
                s += t.chars[i].values[static_cast<std::size_t>(x)] * t.chars[j].values[static_cast<std::size_t>(x)].conj();
            }
            if (s != CycNum(i == j ? n : 0)) {
                fail(user_input, "twisted rows " + std::to_string(i) + " and " + std::to_string(j) + " violate orthogonality");
            }
        }
    }
}

} // namespace bicross
