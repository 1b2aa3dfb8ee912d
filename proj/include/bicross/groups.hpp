#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bicross {

inline constexpr int kDefaultMaxGroupOrder = 64;

using Permutation = std::vector<int>; // 0-based images

// Parses "(1 2)(3 4 5)" or "(1,2)" (1-based points) into a permutation on `degree` points.
Permutation parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Permutation& p);

// Finite group given by a validated multiplication table. Elements are
// indices 0..n-1; the index order is the canonical element order.
class FiniteGroup {
public:
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  int max_order = kDefaultMaxGroupOrder);
    // Closure of the generators under composition (apply left factor first).
    // Element 0 is the identity, then the generators, then breadth-first order.
    static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                         int max_order = kDefaultMaxGroupOrder);
    static FiniteGroup cyclic(int n);
    // Z_{d1} x ... x Z_{dk}; element index = mixed-radix digits with the first factor fastest.
    static FiniteGroup abelian(const std::vector<int>& dims, int max_order = kDefaultMaxGroupOrder);
    // Subgroup on the given (sorted) element indices of `parent`.
    static FiniteGroup subgroup(const FiniteGroup& parent, std::span<const int> elements);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
    int power(int a, long long k) const;
    int element_order(int a) const;
    int exponent() const;
    bool is_abelian() const;

    const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Classes ordered by their smallest element; elements sorted within a class.
    std::vector<std::vector<int>> conjugacy_classes() const;
    std::vector<int> class_index() const; // element -> class position

    std::vector<std::vector<int>> table() const;

private:
    FiniteGroup() = default;
    void finish(bool check_associativity);

    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

struct AbelianDecomposition {
    std::vector<int> invariants; // d1 | d2 | ... | dk, all > 1 (empty for the trivial group)
    std::vector<int> generators; // generator of the i-th cyclic factor
    // coords[a] = exponents (e_1..e_k) with a = prod g_i^{e_i}
    std::vector<std::vector<int>> coords;
};

AbelianDecomposition abelian_invariants(const FiniteGroup& a);

// Element of F: either an index into a finite group or an integer vector.
class FElem {
public:
    using Data = boost::container::small_vector<std::int64_t, 4>;

    FElem() = default;
    static FElem finite(int index);
    static FElem vec(Data v);
    static FElem vec(std::initializer_list<std::int64_t> v) { return vec(Data(v)); }

    bool is_finite() const { return finite_; }
    int index() const { return static_cast<int>(data_[0]); }
    const Data& coords() const { return data_; }
    std::int64_t sup_norm() const;

    std::string to_string() const;

    friend bool operator==(const FElem& a, const FElem& b) { return a.finite_ == b.finite_ && a.data_ == b.data_; }
    // Finite: index order. Vectors: (sup-norm, lexicographic).
    friend std::strong_ordering operator<=>(const FElem& a, const FElem& b);

    std::size_t hash() const;

private:
    bool finite_ = true;
    Data data_{0};
};

struct FElemHash {
    std::size_t operator()(const FElem& f) const { return f.hash(); }
};

// The group F: a finite table or the free abelian group Z^r. New backends
// need a canonical form, mul, inv, identity and ball enumeration.
class FGroup {
public:
    static FGroup finite(std::shared_ptr<const FiniteGroup> g);
    static FGroup free_abelian(int rank);

    bool is_finite() const { return static_cast<bool>(finite_); }
    const FiniteGroup& finite_group() const { return *finite_; }
    int rank() const { return rank_; }

    FElem identity() const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem inv(const FElem& a) const;
    bool is_identity(const FElem& a) const;
    // Throws InvalidInput when `a` does not belong to this group.
    void check(const FElem& a) const;

    // Finite: all elements in table order. Z^r: sup-norm <= R, ordered by (sup-norm, lex).
    std::vector<FElem> ball(int radius) const;

    // Accepts "3", "(1,-2,0)", "1,-2,0" for Z^r and an index or label for finite groups.
    FElem parse(std::string_view text) const;
    std::string format(const FElem& a) const;

private:
    std::shared_ptr<const FiniteGroup> finite_;
    int rank_ = 0;
};

} // namespace bicross
