#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "mdspline/space.hpp"

namespace mdspline::testing {

/// Random valid public space with dyadic breakpoints.
/// allow_zero_degree admits degree-0 intervals (then every adjacent continuity is 0).
inline MDSpace random_space(std::mt19937& rng, int max_degree = 12, std::size_t max_breakpoints = 8,
                            bool allow_zero_degree = false) {
    std::uniform_int_distribution<std::size_t> nq(0, max_breakpoints);
    std::uniform_int_distribution<int> deg(allow_zero_degree ? 0 : 1, max_degree);
    std::uniform_int_distribution<int> step(1, 8);
    std::uniform_int_distribution<int> start(-8, 8);
    const std::size_t q = nq(rng);
    const double a = start(rng) * 0.5;
    std::vector<double> x;
    double cur = a;
    for (std::size_t i = 0; i < q; ++i) {
        cur += step(rng) * 0.25;
        x.push_back(cur);
    }
    const double b = cur + step(rng) * 0.25;
    std::vector<int> d(q + 1);
    // Few distinct degrees so that sections span several intervals.
    std::vector<int> palette = {deg(rng), deg(rng), deg(rng)};
    std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
    for (int& v : d) v = palette[pick(rng)];
    std::vector<int> k(q);
    for (std::size_t i = 0; i < q; ++i) {
        const int bound = std::min(d[i], d[i + 1]);
        std::uniform_int_distribution<int> kd(0, bound);
        // Lean towards high continuity, the demanding case.
        k[i] = std::max(kd(rng), kd(rng));
    }
    return validate_space(a, b, x, d, k);
}

/// n points covering [a,b] uniformly, endpoints included.
inline std::vector<double> sample_points(const MDSpace& s, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = s.a + (s.b - s.a) * static_cast<double>(i) / (n - 1);
    xs.back() = s.b;
    return xs;
}

}  // namespace mdspline::testing
