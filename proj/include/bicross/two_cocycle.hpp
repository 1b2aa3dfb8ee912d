#pragma once

#include <memory>
#include <vector>

#include "bicross/cyclotomic.hpp"
#include "bicross/groups.hpp"

namespace bicross {

// Normalized 2-cocycle beta on a finite group H, stored densely:
// value(a, b) = beta(a, b) for element indices of H.
class TwoCocycle {
public:
    static TwoCocycle trivial(std::shared_ptr<const FiniteGroup> h);
    static TwoCocycle from_values(std::shared_ptr<const FiniteGroup> h, std::vector<CycNum> values);

    const FiniteGroup& group() const { return *h_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return h_; }
    const CycNum& operator()(int a, int b) const {
        return values_[static_cast<std::size_t>(a) * static_cast<std::size_t>(h_->order()) + static_cast<std::size_t>(b)];
    }
    bool is_trivial() const { return trivial_; }

    // Throws InvalidInput naming the first failing triple.
    void check_cocycle_identity() const;

private:
    std::shared_ptr<const FiniteGroup> h_;
    std::vector<CycNum> values_;
    bool trivial_ = true;
};

} // namespace bicross
