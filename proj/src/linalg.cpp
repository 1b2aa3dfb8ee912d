#include "bicross/linalg.hpp"

#include <utility>

namespace bicross {

std::size_t dense_rank(std::vector<std::vector<CycNum>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const CycNum inv = rows[rank][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] *= inv;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const CycNum factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace bicross
