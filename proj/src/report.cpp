#include "bicross/report.hpp"

namespace bicross {

void Check::fail(Json witness) {
    ++instances;
    fail_counted(std::move(witness));
}

void Check::fail_counted(Json witness) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

Json Check::to_json() const {
    Json j;
    j["name"] = name;
    j["scope"] = scope;
    j["instances"] = instances;
    j["violations"] = violations;
    j["status"] = passed() ? "pass" : "fail";
    j["witnesses"] = witnesses;
    if (violations > witnesses.size()) j["witnesses_truncated"] = true;
    return j;
}

Check& CheckReport::add(std::string name, std::string scope) {
    Check c;
    c.name = std::move(name);
    c.scope = std::move(scope);
    checks.push_back(std::move(c));
    return checks.back();
}

void CheckReport::append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

const Check* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

Json CheckReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return arr;
}

std::string scope_exhaustive() { return "exhaustive"; }
std::string scope_ball(int radius) { return "verified on ball radius " + std::to_string(radius); }
std::string scope_global(const std::string& reason) { return "verified globally (" + reason + ")"; }

} // namespace bicross
