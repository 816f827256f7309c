#include "mdspline/space_io.hpp"

#include <fstream>
#include <sstream>

namespace mdspline {

namespace {

template <class V>
std::vector<V> read_list(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw SpaceError(std::string("missing field '") + key + "'");
    const nlohmann::json& v = j.at(key);
    if (!v.is_array()) throw SpaceError(std::string("field '") + key + "' must be an array");
    std::vector<V> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const nlohmann::json& e = v[i];
        if constexpr (std::is_integral_v<V>) {
            if (!e.is_number_integer())
                throw SpaceError(std::string("field '") + key + "'[" + std::to_string(i) +
                                 "] must be an integer");
        } else {
            if (!e.is_number())
                throw SpaceError(std::string("field '") + key + "'[" + std::to_string(i) +
                                 "] must be a number");
        }
        out.push_back(e.get<V>());
    }
    return out;
}

}  // namespace

MDSpace space_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SpaceError("space description must be a JSON object");
    const auto interval = read_list<double>(j, "interval");
    if (interval.size() != 2) throw SpaceError("field 'interval' must have two entries");
    const auto x = j.contains("breakpoints") ? read_list<double>(j, "breakpoints") : std::vector<double>{};
    const auto d = read_list<int>(j, "degrees");
    const auto k = j.contains("continuities") ? read_list<int>(j, "continuities") : std::vector<int>{};
    return validate_space(interval[0], interval[1], x, d, k);
}

nlohmann::json space_to_json(const MDSpace& space) {
    return {{"interval", {space.a, space.b}},
            {"breakpoints", space.breakpoints},
            {"degrees", space.degrees},
            {"continuities", space.continuities}};
}

MDSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpaceError("cannot open space file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SpaceError("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    return space_from_json(j);
}

}  // namespace mdspline
