#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bicross/cyclotomic.hpp"
#include "bicross/groups.hpp"
#include "bicross/report.hpp"
#include "bicross/two_cocycle.hpp"

namespace bicross {

// Largest central extension the built-in character provider accepts.
inline constexpr int kMaxExtensionOrder = 256;

// Character of a (possibly twisted) representation of a finite group H;
// values[a] is the trace at element index a of H.
struct TwistedChar {
    std::vector<CycNum> values;
    int dim = 0;
};

enum class CharProvenance { AbelianDirect, Ordinary, CentralExtension, UserSupplied };
std::string to_string(CharProvenance p);

struct CharTable {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<TwistedChar> chars;
    CharProvenance provenance = CharProvenance::Ordinary;
};

// Characters chi_k(a) = prod zeta_{d_i}^{k_i e_i(a)} for the invariant-factor
// decomposition; k runs lexicographically with the first factor most significant.
CharTable abelian_char_table(std::shared_ptr<const FiniteGroup> a);

// Irreducible ordinary characters over Q(zeta_exp). Trivial character first,
// then sorted by (dim, values). Throws ProviderUnavailable above max_order.
CharTable ordinary_char_table(std::shared_ptr<const FiniteGroup> g, int max_order = kMaxExtensionOrder);

// G_f x Z_m with (a, j)(b, l) = (ab, j + l + c(a, b)) where beta(a, b) = zeta_m^c(a, b);
// element (a, j) has index a * m + j.
struct CentralExtension {
    std::shared_ptr<const FiniteGroup> group;
    int m = 1;
    std::vector<int> exponent; // c(a, b), dense |H| x |H|
};
CentralExtension central_extension(const TwoCocycle& beta, int max_order = kMaxExtensionOrder);

// Characters of projective representations A with A(a)A(b) = beta(a,b) A(ab).
CharTable twisted_char_table(const TwoCocycle& beta, int max_order = kMaxExtensionOrder);

// Parses rows [{"dim": d, "values": {"<index>": "<literal>", ...}}, ...] (missing
// values are 0) and verifies them; beta may be null for ordinary tables.
CharTable user_char_table(std::shared_ptr<const FiniteGroup> h, const Json& rows, const TwoCocycle* beta);

// Exact checks: values at 1 are the degrees, sum of squared degrees is |H|,
// characters are independent, row orthogonality (and column orthogonality for
// ordinary tables). Throws InternalInconsistency (or InvalidInput when
// `user_input`) naming the first failure.
void verify_char_table(const CharTable& t, const TwoCocycle* beta, bool user_input = false);

} // namespace bicross
