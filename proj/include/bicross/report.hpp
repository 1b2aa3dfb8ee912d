#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace bicross {

using Json = nlohmann::json;

// One family of checked identities: how many instances were tested, where,
// and every violated instance (capped; the cap is reported).
struct Check {
    static constexpr std::size_t kMaxWitnesses = 10000;

    std::string name;
    std::string scope;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::vector<Json> witnesses;

    void pass() { ++instances; }
    void fail(Json witness);
    void record(bool ok, const auto& make_witness) {
        ++instances;
        if (!ok) fail_counted(make_witness());
    }
    bool passed() const { return violations == 0; }
    Json to_json() const;

private:
    void fail_counted(Json witness);
};

struct CheckReport {
    std::deque<Check> checks; // deque: references returned by add() stay valid

    Check& add(std::string name, std::string scope);
    void append(const CheckReport& other);
    bool passed() const;
    const Check* find(const std::string& name) const;
    Json to_json() const;
};

// Scope labels shared by all verifiers.
std::string scope_exhaustive();
std::string scope_ball(int radius);
std::string scope_global(const std::string& reason);

} // namespace bicross
