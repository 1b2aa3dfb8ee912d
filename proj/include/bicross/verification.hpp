#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicross/comodules.hpp"

namespace bicross {

// Result of an exact rank computation over Q(zeta_N).
struct LinearCert {
    std::string description;
    std::size_t rows = 0;
    std::size_t columns = 0; // size of the union of supports
    std::size_t rank = 0;
    std::optional<std::size_t> expected;
    bool passed = true; // rank == expected when an expectation is given
    Json details;       // extra certificate data, may be null

    Json to_json() const;
};

LinearCert exact_rank(const std::vector<HElem>& vectors, std::string description,
                      std::optional<std::size_t> expected = std::nullopt);

// The C_f blocks of the orbits meeting the ball have disjoint supports and are
// jointly independent; they cover every basis element whose F part lies in the
// ball (all of H when F is finite).
LinearCert direct_sum_check(const ComoduleEngine& e, int radius);

struct DimensionRow {
    FElem rep;
    int orbit_size = 0;       // counted directly from the action
    long long expected = 0;   // |G| |O_f|
    long long sum_squares = 0;
    std::vector<int> dims;    // dim_total of each simple
    std::string error;        // set when the orbit's simples could not be built
    bool passed() const { return error.empty() && sum_squares == expected; }
};

struct DimensionAudit {
    int radius = 0;
    std::vector<DimensionRow> rows;
    bool passed() const;
    Json to_json(const ComoduleEngine& e) const;
};

// Per orbit meeting the ball: sum over its simples of dim_total^2 = |G| |O_f|.
// Orbit sizes and stabilizer orders are recounted from the action.
DimensionAudit dimension_audit(const ComoduleEngine& e, int radius);

} // namespace bicross
