/**
 * @file presets.hpp
 * @brief Fixed benchmark spaces with their sample points.
 *
 * All endpoints and breakpoints are exact binary doubles.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdspline/space.hpp"

namespace mdspline {

struct Preset {
    std::string name;
    MDSpace space;
    std::vector<double> points;  ///< sample points for value tables (may be empty)
    std::size_t function = 0;    ///< 0-based index of the tabulated basis function
};

/// cox, test1..test6; table7 expands to one preset per k1 (table7_k5 .. table7_k19).
[[nodiscard]] std::vector<Preset> presets(const std::string& name);

/// Names accepted by presets().
[[nodiscard]] std::vector<std::string> preset_names();

/// Every single-space preset (cox, test1..test6, all table7 spaces).
[[nodiscard]] std::vector<Preset> all_presets();

}  // namespace mdspline
