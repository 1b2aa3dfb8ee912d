#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bicross/cyclotomic.hpp"

namespace bicross {

// Rank of a dense matrix over Q(zeta_N) by exact Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<CycNum>> rows);

// Incremental exact elimination of finitely supported vectors (maps from an
// ordered key to CycNum). Each stored pivot row remembers which combination
// of the inserted vectors produced it, so targets can be solved for.
template <class Key>
class SparseEliminator {
public:
    using Vec = std::map<Key, CycNum>;

    // Returns true when v is independent of everything inserted so far.
    bool insert(const Vec& v) {
        const std::size_t idx = inputs_++;
        Row row{v, {}};
        row.combo.resize(inputs_);
        row.combo[idx] = CycNum(1);
        reduce(row);
        if (row.vec.empty()) return false;
        const CycNum lead_inv = row.vec.begin()->second.inverse();
        for (auto& [k, c] : row.vec) c *= lead_inv;
        for (auto& c : row.combo) c *= lead_inv;
        const Key lead = row.vec.begin()->first;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t inputs() const { return inputs_; }

    // Coefficients x with sum x_i v_i = target, or nullopt when target is outside the span.
    // When inputs were dependent, some solution is returned.
    std::optional<std::vector<CycNum>> solve(const Vec& target, Vec* residual = nullptr) const {
        Row row{target, std::vector<CycNum>(inputs_)};
        // track target - sum(alpha_i pivot_i): combo accumulates the negated solution
        reduce(row);
        if (residual) *residual = row.vec;
        if (!row.vec.empty()) return std::nullopt;
        std::vector<CycNum> x(inputs_);
        for (std::size_t i = 0; i < inputs_; ++i) x[i] = -row.combo[i];
        return x;
    }

private:
    struct Row {
        Vec vec;
        std::vector<CycNum> combo;
    };

    void reduce(Row& row) const {
        auto it = row.vec.begin();
        while (it != row.vec.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const CycNum factor = it->second;
            const Key key = it->first;
            for (const auto& [k, c] : p->second.vec) {
                auto [slot, inserted] = row.vec.emplace(k, -(factor * c));
                if (!inserted) {
                    slot->second -= factor * c;
                    if (slot->second.is_zero()) row.vec.erase(slot);
                }
            }
            if (row.combo.size() < p->second.combo.size()) row.combo.resize(p->second.combo.size());
            for (std::size_t i = 0; i < p->second.combo.size(); ++i) {
                if (!p->second.combo[i].is_zero()) row.combo[i] -= factor * p->second.combo[i];
            }
            it = row.vec.upper_bound(key);
        }
    }

    std::map<Key, Row> pivots_;
    std::size_t inputs_ = 0;
};

} // namespace bicross
