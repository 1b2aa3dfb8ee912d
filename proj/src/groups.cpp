#include "bicross/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include "bicross/error.hpp"

namespace bicross {

Permutation parse_cycles(std::string_view text, int degree) {
    Permutation p(static_cast<std::size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw InvalidInput("permutation '" + std::string(text) + "': " + msg);
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> cycle;
        while (true) {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
            if (i >= text.size()) fail("unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected point number");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000) fail("point number too large");
                ++i;
            }
            if (v < 1 || v > degree) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            cycle.push_back(v - 1);
        }
        std::vector<int> seen = cycle;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("repeated point in cycle");
        // Cycles compose left to right: apply the earlier cycle first.
        Permutation c(static_cast<std::size_t>(degree));
        std::iota(c.begin(), c.end(), 0);
        for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
        for (auto& v : p) v = c[v];
    }
    return p;
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

void FiniteGroup::finish(bool check_associativity) {
    const int n = n_;
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw InvalidInput("group table has no two-sided identity");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                inverse_[static_cast<std::size_t>(x)] = y;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(x)] < 0) {
            throw InvalidInput("group table: element " + std::to_string(x) + " has no inverse");
        }
    }
    if (check_associativity) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const int ab = mul(a, b);
                for (int c = 0; c < n; ++c) {
                    if (mul(ab, c) != mul(a, mul(b, c))) {
                        throw InvalidInput("group table not associative at (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                }
            }
        }
    }
    if (labels_.size() != static_cast<std::size_t>(n)) {
        labels_.clear();
        for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, int max_order) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InvalidInput("group table is empty");
    if (n > max_order) {
        throw InvalidInput("group order " + std::to_string(n) + " exceeds the limit " + std::to_string(max_order));
    }
    FiniteGroup g;
    g.n_ = n;
    g.table_.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            throw InvalidInput("group table row " + std::to_string(i) + " has wrong length");
        }
        for (int v : table[i]) {
            if (v < 0 || v >= n) throw InvalidInput("group table entry out of range in row " + std::to_string(i));
            g.table_.push_back(v);
        }
    }
    g.finish(true);
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, int max_order) {
    std::size_t degree = 1;
    for (const auto& p : generators) degree = std::max(degree, p.size());
    std::vector<Permutation> gens;
    for (auto p : generators) {
        const std::size_t old = p.size();
        p.resize(degree);
        for (std::size_t i = old; i < degree; ++i) p[i] = static_cast<int>(i);
        std::vector<int> check = p;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < degree; ++i) {
            if (check[i] != static_cast<int>(i)) throw InvalidInput("generator is not a permutation");
        }
        gens.push_back(std::move(p));
    }
    auto compose = [](const Permutation& a, const Permutation& b) {
        Permutation r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
        return r;
    };
    std::map<Permutation, int> index;
    std::vector<Permutation> elems;
    auto add = [&](const Permutation& p) {
        if (index.count(p)) return;
        if (static_cast<int>(elems.size()) >= max_order) {
            throw InvalidInput("generated group exceeds the order limit " + std::to_string(max_order));
        }
        index.emplace(p, static_cast<int>(elems.size()));
        elems.push_back(p);
    };
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    add(id);
    for (const auto& g : gens) add(g);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) add(compose(elems[i], g));
    }
    FiniteGroup grp;
    grp.n_ = static_cast<int>(elems.size());
    grp.table_.resize(elems.size() * elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
            grp.table_[a * elems.size() + b] = index.at(compose(elems[a], elems[b]));
        }
    }
    for (const auto& p : elems) grp.labels_.push_back(format_cycles(p));
    grp.finish(false); // permutation composition is associative
    return grp;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw InvalidInput("cyclic group order must be positive");
    return abelian({n}, std::max(n, kDefaultMaxGroupOrder));
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& dims, int max_order) {
    long long n = 1;
    for (int d : dims) {
        if (d < 1) throw InvalidInput("abelian factor orders must be positive");
        n *= d;
        if (n > max_order) throw InvalidInput("abelian group exceeds the order limit " + std::to_string(max_order));
    }
    const int order = static_cast<int>(n);
    auto digits = [&](int a) {
        std::vector<int> d(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            d[i] = a % dims[i];
            a /= dims[i];
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int a = 0;
        for (std::size_t i = dims.size(); i-- > 0;) a = a * dims[i] + d[i];
        return a;
    };
    FiniteGroup g;
    g.n_ = order;
    g.table_.resize(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
        const auto da = digits(a);
        for (int b = 0; b < order; ++b) {
            auto db = digits(b);
            for (std::size_t i = 0; i < dims.size(); ++i) db[i] = (da[i] + db[i]) % dims[i];
            g.table_[static_cast<std::size_t>(a) * order + b] = index(db);
        }
    }
    for (int a = 0; a < order; ++a) {
        if (dims.size() == 1) {
            g.labels_.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
        } else {
            std::string s = "(";
            const auto d = digits(a);
            for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
            g.labels_.push_back(s + ")");
        }
    }
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::subgroup(const FiniteGroup& parent, std::span<const int> elements) {
    std::vector<int> pos(static_cast<std::size_t>(parent.order()), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) pos[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
    FiniteGroup g;
    g.n_ = static_cast<int>(elements.size());
    g.table_.resize(elements.size() * elements.size());
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
            const int p = pos[static_cast<std::size_t>(parent.mul(elements[a], elements[b]))];
            if (p < 0) throw InvalidInput("subgroup element set is not closed");
            g.table_[a * elements.size() + b] = p;
        }
        g.labels_.push_back(parent.label(elements[a]));
    }
    g.finish(false);
    return g;
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
    if (labels.size() != static_cast<std::size_t>(n_)) throw InvalidInput("label count differs from group order");
    labels_ = std::move(labels);
}

int FiniteGroup::power(int a, long long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    int result = identity_;
    int base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int x = 0; x < n_; ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<int> cls;
        for (int g = 0; g < n_; ++g) {
            const int y = conj(g, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> FiniteGroup::class_index() const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    const auto classes = conjugacy_classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int x : classes[c]) idx[static_cast<std::size_t>(x)] = static_cast<int>(c);
    }
    return idx;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
    }
    return t;
}

namespace {

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Greedy basis of the Sylow p-subgroup of an abelian group: returns (generator, order) pairs.
std::vector<std::pair<int, int>> primary_basis(const FiniteGroup& a, int p) {
    std::vector<int> part;
    for (int x = 0; x < a.order(); ++x) {
        int o = a.element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) part.push_back(x);
    }
    std::vector<std::pair<int, int>> basis;
    // coords of every element of the current subgroup
    std::map<int, std::vector<int>> sub{{a.identity(), {}}};
    while (sub.size() < part.size()) {
        int best = -1;
        int best_order = 0;
        for (int y : part) {
            int k = 1;
            int yk = y;
            while (!sub.count(yk)) {
                yk = a.power(yk, p);
                k *= p;
            }
            if (k > best_order) {
                best_order = k;
                best = y;
            }
        }
        // y^k lies in the subgroup; correct y so that it has order exactly k.
        const auto& e = sub.at(a.power(best, best_order));
        int lifted = best;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (e[i] % best_order != 0) throw InternalInconsistency("abelian basis lift failed");
            lifted = a.mul(lifted, a.power(basis[i].first, -(e[i] / best_order)));
        }
        std::map<int, std::vector<int>> next;
        for (const auto& [s, c] : sub) {
            int t = s;
            for (int j = 0; j < best_order; ++j) {
                auto cj = c;
                cj.push_back(j);
                next.emplace(t, std::move(cj));
                t = a.mul(t, lifted);
            }
        }
        basis.emplace_back(lifted, best_order);
        sub = std::move(next);
    }
    return basis;
}

} // namespace

AbelianDecomposition abelian_invariants(const FiniteGroup& a) {
    if (!a.is_abelian()) throw InvalidInput("abelian_invariants requires an abelian group");
    AbelianDecomposition out;
    std::vector<std::vector<std::pair<int, int>>> per_prime;
    std::size_t len = 0;
    for (int p : prime_factors(a.order())) {
        auto b = primary_basis(a, p);
        std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
        len = std::max(len, b.size());
        per_prime.push_back(std::move(b));
    }
    // i-th largest factor combines the i-th largest primary cyclic factor of each prime
    for (std::size_t i = 0; i < len; ++i) {
        int d = 1;
        int g = a.identity();
        for (const auto& b : per_prime) {
            if (i < b.size()) {
                d *= b[i].second;
                g = a.mul(g, b[i].first);
            }
        }
        out.invariants.push_back(d);
        out.generators.push_back(g);
    }
    std::reverse(out.invariants.begin(), out.invariants.end());
    std::reverse(out.generators.begin(), out.generators.end());
    if (out.invariants.size() == 1) {
        for (int x = 0; x < a.order(); ++x) {
            if (a.element_order(x) == a.order()) {
                out.generators[0] = x;
                break;
            }
        }
    }
    out.coords.assign(static_cast<std::size_t>(a.order()), {});
    std::vector<int> e(out.invariants.size(), 0);
    int count = 0;
    while (true) {
        int x = a.identity();
        for (std::size_t i = 0; i < e.size(); ++i) x = a.mul(x, a.power(out.generators[i], e[i]));
        if (!out.coords[static_cast<std::size_t>(x)].empty() || (x == a.identity() && count > 0)) {
            throw InternalInconsistency("abelian decomposition generators are not independent");
        }
        out.coords[static_cast<std::size_t>(x)] = e;
        ++count;
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == out.invariants[i]) e[i++] = 0;
        if (i == e.size()) break;
    }
    if (count != a.order()) throw InternalInconsistency("abelian decomposition does not cover the group");
    return out;
}

FElem FElem::finite(int index) {
    FElem f;
    f.finite_ = true;
    f.data_ = Data{index};
    return f;
}

FElem FElem::vec(Data v) {
    FElem f;
    f.finite_ = false;
    f.data_ = std::move(v);
    return f;
}

std::int64_t FElem::sup_norm() const {
    if (finite_) return 0;
    std::int64_t m = 0;
    for (auto v : data_) m = std::max(m, v < 0 ? -v : v);
    return m;
}

std::string FElem::to_string() const {
    if (finite_) return std::to_string(data_[0]);
    if (data_.size() == 1) return std::to_string(data_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < data_.size(); ++i) s += (i ? "," : "") + std::to_string(data_[i]);
    return s + ")";
}

std::strong_ordering operator<=>(const FElem& a, const FElem& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.finite_) return a.data_[0] <=> b.data_[0];
    if (auto c = a.sup_norm() <=> b.sup_norm(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

std::size_t FElem::hash() const {
    std::size_t h = finite_ ? 0x51ed27 : 0x2545f491;
    for (auto v : data_) h = h * 1000003u ^ std::hash<std::int64_t>{}(v);
    return h;
}

FGroup FGroup::finite(std::shared_ptr<const FiniteGroup> g) {
    FGroup f;
    f.finite_ = std::move(g);
    return f;
}

FGroup FGroup::free_abelian(int rank) {
    if (rank < 1) throw InvalidInput("free abelian rank must be at least 1 (got " + std::to_string(rank) + ")");
    if (rank > 16) throw InvalidInput("free abelian rank above 16 is not supported");
    FGroup f;
    f.rank_ = rank;
    return f;
}

FElem FGroup::identity() const {
    if (finite_) return FElem::finite(finite_->identity());
    return FElem::vec(FElem::Data(static_cast<std::size_t>(rank_), 0));
}

FElem FGroup::mul(const FElem& a, const FElem& b) const {
    if (finite_) return FElem::finite(finite_->mul(a.index(), b.index()));
    FElem::Data d(a.coords());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.coords()[i];
    return FElem::vec(std::move(d));
}

FElem FGroup::inv(const FElem& a) const {
    if (finite_) return FElem::finite(finite_->inv(a.index()));
    FElem::Data d(a.coords());
    for (auto& v : d) v = -v;
    return FElem::vec(std::move(d));
}

bool FGroup::is_identity(const FElem& a) const {
    if (finite_) return a.index() == finite_->identity();
    return std::all_of(a.coords().begin(), a.coords().end(), [](auto v) { return v == 0; });
}

void FGroup::check(const FElem& a) const {
    if (finite_) {
        if (!a.is_finite() || a.index() < 0 || a.index() >= finite_->order()) {
            throw InvalidInput("element " + a.to_string() + " is not in the finite group F");
        }
        return;
    }
    if (a.is_finite() || static_cast<int>(a.coords().size()) != rank_) {
        throw InvalidInput("element " + a.to_string() + " is not in Z^" + std::to_string(rank_));
    }
}

std::vector<FElem> FGroup::ball(int radius) const {
    if (radius < 0) throw InvalidInput("ball radius must be nonnegative");
    std::vector<FElem> out;
    if (finite_) {
        for (int i = 0; i < finite_->order(); ++i) out.push_back(FElem::finite(i));
        return out;
    }
    const long long side = 2LL * radius + 1;
    long double total = 1;
    for (int i = 0; i < rank_; ++i) total *= static_cast<long double>(side);
    if (total > 5e6L) throw InvalidInput("ball of radius " + std::to_string(radius) + " in Z^" + std::to_string(rank_) + " is too large");
    FElem::Data v(static_cast<std::size_t>(rank_), -radius);
    while (true) {
        out.push_back(FElem::vec(v));
        std::size_t i = 0;
        while (i < v.size() && ++v[i] > radius) v[i++] = -radius;
        if (i == v.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FElem FGroup::parse(std::string_view text) const {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw InvalidInput("empty group element literal");
    if (finite_) {
        // digits are an index, as printed by format(); cyclic labels such as "1" would collide
        if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            const long long v = s.size() <= 9 ? std::stoll(s) : -1;
            if (v >= 0 && v < finite_->order()) return FElem::finite(static_cast<int>(v));
        } else {
            for (int i = 0; i < finite_->order(); ++i) {
                if (finite_->label(i) == s) return FElem::finite(i);
            }
        }
        throw InvalidInput("'" + s + "' is not an element of the finite group F");
    }
    if (s.front() == '(') {
        if (s.back() != ')') throw InvalidInput("unbalanced parentheses in '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    FElem::Data d;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            d.push_back(std::stoll(part, &used));
            if (used != part.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("'" + std::string(text) + "' is not an integer vector");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(d.size()) != rank_) {
        throw InvalidInput("'" + std::string(text) + "' has " + std::to_string(d.size()) + " coordinates, expected " +
                           std::to_string(rank_));
    }
    return FElem::vec(std::move(d));
}

std::string FGroup::format(const FElem& a) const { return a.to_string(); }

} // namespace bicross
