/**
 * @file space_io.hpp
 * @brief JSON form of space descriptions:
 *        {"interval":[a,b],"breakpoints":[...],"degrees":[...],"continuities":[...]}
 */
#pragma once

#include <string>

#include <json.hpp>

#include "mdspline/space.hpp"

namespace mdspline {

/// Parses and validates; throws SpaceError with a descriptive message.
[[nodiscard]] MDSpace space_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json space_to_json(const MDSpace& space);

/// Reads a file; parse errors report the byte position.
[[nodiscard]] MDSpace load_space(const std::string& path);

}  // namespace mdspline
