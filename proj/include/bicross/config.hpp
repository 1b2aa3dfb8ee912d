#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/hopf.hpp"
#include "bicross/report.hpp"

namespace bicross {

inline constexpr int kDefaultRadius = 4;

// A parsed and validated configuration: everything needed to build H.
struct Config {
    std::string name;
    Json source; // the input document (keys sorted), hashed for reports
    std::string hash;
    int radius = kDefaultRadius;
    int level = 1; // lcm of exp(G), cocycle value levels and any declared level
    int max_group_order = kDefaultMaxGroupOrder;
    std::shared_ptr<const MatchedPair> pair;
    std::shared_ptr<const HopfAlgebra> hopf;
    // User character tables keyed by the orbit representative they describe:
    // raw rows, values keyed by G element (index or label).
    std::map<FElem, Json> user_char_tables;
};

// Throws InvalidInput with the offending field path (or line/column for JSON syntax errors).
Config parse_config(std::string_view text, const std::string& origin = "<config>");
Config parse_config_json(const Json& doc, const std::string& origin = "<config>");
Config load_config_file(const std::filesystem::path& path);

// Preset names use "h_z_z2n:3" or "drinfeld:S3"; the file is <dir>/h_z_z2n_3.json.
std::filesystem::path preset_dir();
std::filesystem::path preset_path(const std::string& name);
Config load_preset(const std::string& name);
std::vector<std::string> list_presets();

// FNV-1a of the canonical dump, as 16 hex digits.
std::string config_hash(const Json& doc);

// Element references used in configs and on the command line.
int parse_g_ref(const Json& v, const FiniteGroup& g, const std::string& path);
FElem parse_f_ref(const Json& v, const FGroup& f, const std::string& path);

} // namespace bicross
