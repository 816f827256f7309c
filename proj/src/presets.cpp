#include "mdspline/presets.hpp"

#include <stdexcept>

namespace mdspline {

namespace {

Preset cox() {
    Preset p;
    p.name = "cox";
    std::vector<double> x;
    for (int i = 1; i <= 21; ++i) x.push_back(i);
    p.space = validate_space(0, 22, x, std::vector<int>(22, 21), std::vector<int>(21, 20));
    p.points = x;
    p.function = 21;
    return p;
}

Preset wide(const std::string& name, std::vector<int> d, std::vector<int> k, std::size_t function) {
    Preset p;
    p.name = name;
    p.space = validate_space(-10000, 10000, {-9999, 0, 9999}, std::move(d), std::move(k));
    p.points = {-9999, 0, 9999};
    p.function = function;
    return p;
}

const std::vector<int> kPow2Degrees = {9, 9, 10, 10, 9, 9, 10, 10, 9, 9};
const std::vector<int> kPow2Continuities = {8, 9, 9, 9, 8, 9, 9, 9, 8};

Preset test3() {
    Preset p;
    p.name = "test3";
    std::vector<double> x;
    for (int j = 1; j <= 9; ++j) x.push_back(static_cast<double>(1 << j));
    p.space = validate_space(1, 1024, x, kPow2Degrees, kPow2Continuities);
    p.points = x;
    p.function = 8;
    return p;
}

Preset test4() {
    Preset p;
    p.name = "test4";
    std::vector<double> x;
    for (int j = 1; j <= 9; ++j) x.push_back(-static_cast<double>(1 << (10 - j)));
    p.space = validate_space(-1024, 1, x, kPow2Degrees, kPow2Continuities);
    return p;
}

Preset test5() {
    Preset p;
    p.name = "test5";
    std::vector<double> x;
    for (int i = 1; i <= 21; ++i) x.push_back(i);
    std::vector<int> d(22), k(21);
    for (int i = 0; i <= 21; ++i) {
        if (i == 10 || i == 11) d[i] = 19;
        else if ((i >= 5 && i <= 9) || (i >= 12 && i <= 16)) d[i] = 20;
        else d[i] = 21;
    }
    for (int i = 1; i <= 21; ++i) {
        if (i == 11 || i == 12) k[i - 1] = 18;
        else if ((i >= 6 && i <= 10) || (i >= 13 && i <= 17)) k[i - 1] = 19;
        else k[i - 1] = 20;
    }
    p.space = validate_space(0, 22, x, d, k);
    return p;
}

std::vector<Preset> table7() {
    std::vector<Preset> out;
    for (int k1 = 5; k1 <= 19; k1 += 2) {
        Preset p;
        p.name = "table7_k" + std::to_string(k1);
        p.space = validate_space(0, 2, {1}, {19, 20}, {k1});
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"cox", "test1", "test2", "test3", "test4", "test5", "test6", "table7"};
}

std::vector<Preset> presets(const std::string& name) {
    if (name == "cox") return {cox()};
    if (name == "test1") return {wide("test1", {5, 3, 3, 5}, {3, 2, 3}, 4)};
    if (name == "test2") return {wide("test2", {3, 5, 5, 3}, {3, 4, 3}, 3)};
    if (name == "test3") return {test3()};
    if (name == "test4") return {test4()};
    if (name == "test5") return {test5()};
    if (name == "test6") {
        Preset p = wide("test6", {21, 19, 19, 21}, {15, 10, 15}, 0);
        p.points.clear();
        return {p};
    }
    if (name == "table7") return table7();
    for (Preset& p : table7())
        if (p.name == name) return {p};
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<Preset> all_presets() {
    std::vector<Preset> out;
    for (const std::string& n : preset_names())
        for (Preset& p : presets(n)) out.push_back(std::move(p));
    return out;
}

}  // namespace mdspline
