#pragma once

#include <string>

#include "bicross/config.hpp"

namespace testing {

inline bicross::Config preset(const std::string& name) { return bicross::load_preset(name); }

inline bicross::Config fixture(const std::string& file) {
    return bicross::load_config_file(std::string(BICROSS_FIXTURE_DIR) + "/" + file);
}

inline bicross::FElem z(long long v) { return bicross::FElem::vec({v}); }

} // namespace testing
