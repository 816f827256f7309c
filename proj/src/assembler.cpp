#include "mdspline/assembler.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "mdspline/legacy_derivative.hpp"
#include "mdspline/scalar.hpp"

namespace mdspline {

namespace {

template <class T>
struct Unit {
    std::size_t first_interval = 0;
    std::size_t last_interval = 0;
    SectionBundle<T> bundle;
};

template <class T>
SectionBundle<T> run_joins(std::vector<Unit<T>> units, const std::vector<JoinStep>& joins,
                           JoinTelemetry* telemetry, const CellObserver<T>& observer) {
    for (const JoinStep& js : order_joins(joins)) {
        std::size_t u = 0;
        while (u < units.size() && units[u].last_interval + 1 != js.breakpoint) ++u;
        if (u + 1 >= units.size()) throw std::logic_error("join schedule: no adjacent units");
        Unit<T> merged;
        merged.first_interval = units[u].first_interval;
        merged.last_interval = units[u + 1].last_interval;
        merged.bundle = cr_join(units[u].bundle, units[u + 1].bundle, js.continuity, telemetry,
                                observer);
        units[u] = std::move(merged);
        units.erase(units.begin() + static_cast<std::ptrdiff_t>(u) + 1);
    }
    if (units.size() != 1) throw std::logic_error("join schedule left several units");
    return std::move(units.front().bundle);
}

std::size_t join_cost(int c) { return static_cast<std::size_t>(c) * static_cast<std::size_t>(c + 1) / 2; }

int boundary_continuity(const MDSpace& space, const SectionDecomposition& sd, std::size_t s) {
    return space.cont(sd.sections[s].first_interval);
}

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::rki: return "rki";
        case Strategy::rde: return "rde";
        case Strategy::mixed: return "mixed";
        case Strategy::derivative: return "derivative";
    }
    return "unknown";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "rki") return Strategy::rki;
    if (name == "rde") return Strategy::rde;
    if (name == "mixed") return Strategy::mixed;
    if (name == "derivative") return Strategy::derivative;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::size_t rde_cost(const MDSpace& space, int min_order) {
    const int r = rde_levels(space, RDEMode::subtraction_free, min_order);
    std::size_t cost = 0;
    for (const RDEStep& st : rde_schedule(space).steps) {
        for (int k = 1; k <= r; ++k) {
            const int w = st.degree - (r - k);
            if (w >= 1) cost += static_cast<std::size_t>(w);
        }
    }
    return cost;
}

MixedPlan auto_plan(const MDSpace& space) {
    const SectionDecomposition sd = section_decomposition(space);
    const std::size_t p = sd.sections.size();
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
    // best[i][0]: sections [0,i) with last unit a joined section; best[i][1]: last unit a group.
    std::vector<std::array<std::size_t, 2>> best(p + 1, {inf, inf});
    std::vector<std::array<std::size_t, 2>> from(p + 1, {0, 0});
    best[0] = {0, inf};
    for (std::size_t i = 1; i <= p; ++i) {
        const std::size_t prev = std::min(best[i - 1][0], best[i - 1][1]);
        const std::size_t edge = i - 1 == 0 ? 0 : join_cost(boundary_continuity(space, sd, i - 1));
        best[i][0] = prev + edge;
        from[i][0] = i - 1;
        for (std::size_t j = 0; j + 2 <= i; ++j) {
            const std::size_t before = j == 0 ? 0 : best[j][0];
            if (before >= inf) continue;
            const std::size_t jc = j == 0 ? 0 : join_cost(boundary_continuity(space, sd, j));
            int min_order = 1;
            if (j > 0) min_order = std::max(min_order, boundary_continuity(space, sd, j));
            if (i < p) min_order = std::max(min_order, boundary_continuity(space, sd, i));
            const MDSpace group =
                restrict_space(space, sd.sections[j].first_interval, sd.sections[i - 1].last_interval);
            const std::size_t cost = before + jc + rde_cost(group, min_order);
            if (cost < best[i][1]) {
                best[i][1] = cost;
                from[i][1] = j;
            }
        }
    }
    MixedPlan plan;
    plan.use_rde.assign(p, false);
    std::size_t i = p;
    int kind = best[p][1] < best[p][0] ? 1 : 0;
    while (i > 0) {
        const std::size_t j = from[i][kind];
        if (kind == 1) {
            for (std::size_t s = j; s < i; ++s) plan.use_rde[s] = true;
            kind = 0;
        } else {
            kind = (j > 0 && best[j][1] < best[j][0]) ? 1 : 0;
        }
        i = j;
    }
    return plan;
}

template <class T>
RepMatrixBundle<T> build_matrix_rki(const MDSpace& space,
                                    const std::type_identity_t<CellObserver<T>>& observer) {
    check_space(space);
    const SectionDecomposition sd = section_decomposition(space);
    std::vector<Unit<T>> units;
    for (const Section& s : sd.sections) {
        Unit<T> u;
        u.first_interval = s.first_interval;
        u.last_interval = s.last_interval;
        u.bundle = identity_bundle<T>(restrict_space(space, s.first_interval, s.last_interval),
                                      std::max(1, s.degree));
        units.push_back(std::move(u));
    }
    RepMatrixBundle<T> out;
    out.strategy = Strategy::rki;
    out.space = space;
    out.bundle = run_joins(std::move(units), sd.join_order, &out.telemetry, observer);
    return out;
}

template <class T>
RepMatrixBundle<T> build_matrix_rde(const MDSpace& space, RDEMode mode) {
    RepMatrixBundle<T> out;
    out.strategy = Strategy::rde;
    out.space = space;
    out.bundle = rde_build<T>(space, mode, 1, &out.telemetry);
    return out;
}

template <class T>
RepMatrixBundle<T> build_matrix_mixed(const MDSpace& space, const MixedPlan& plan) {
    check_space(space);
    const SectionDecomposition sd = section_decomposition(space);
    const std::size_t p = sd.sections.size();
    if (plan.use_rde.size() != p)
        throw std::invalid_argument("mixed plan has " + std::to_string(plan.use_rde.size()) +
                                    " entries for " + std::to_string(p) + " sections");
    RepMatrixBundle<T> out;
    out.strategy = Strategy::mixed;
    out.space = space;
    std::vector<Unit<T>> units;
    std::vector<JoinStep> joins;
    std::size_t s = 0;
    while (s < p) {
        std::size_t e = s + 1;
        if (plan.use_rde[s])
            while (e < p && plan.use_rde[e]) ++e;
        Unit<T> u;
        u.first_interval = sd.sections[s].first_interval;
        u.last_interval = sd.sections[e - 1].last_interval;
        const MDSpace sub = restrict_space(space, u.first_interval, u.last_interval);
        if (e - s >= 2) {
            int min_order = 1;
            if (s > 0) min_order = std::max(min_order, boundary_continuity(space, sd, s));
            if (e < p) min_order = std::max(min_order, boundary_continuity(space, sd, e));
            u.bundle = rde_build<T>(sub, RDEMode::subtraction_free, min_order, &out.telemetry);
        } else {
            u.bundle = identity_bundle<T>(sub, std::max(1, sd.sections[s].degree));
        }
        if (s > 0) joins.push_back({u.first_interval, space.cont(u.first_interval)});
        units.push_back(std::move(u));
        s = e;
    }
    out.bundle = run_joins(std::move(units), joins, &out.telemetry, CellObserver<T>{});
    return out;
}

template <class T>
RepMatrixBundle<T> build_matrix(const MDSpace& space, Strategy strategy) {
    switch (strategy) {
        case Strategy::rki: return build_matrix_rki<T>(space);
        case Strategy::rde: return build_matrix_rde<T>(space);
        case Strategy::mixed: return build_matrix_mixed<T>(space, auto_plan(space));
        case Strategy::derivative: return build_matrix_rki_derivative<T>(space);
    }
    throw std::invalid_argument("unknown strategy");
}

#define MDSPLINE_INSTANTIATE_ASSEMBLER(T)                                                 \
    template RepMatrixBundle<T> build_matrix_rki<T>(const MDSpace&, const CellObserver<T>&);     \
    template RepMatrixBundle<T> build_matrix_rde<T>(const MDSpace&, RDEMode);              \
    template RepMatrixBundle<T> build_matrix_mixed<T>(const MDSpace&, const MixedPlan&);   \
    template RepMatrixBundle<T> build_matrix<T>(const MDSpace&, Strategy);

MDSPLINE_INSTANTIATE_ASSEMBLER(double)
MDSPLINE_INSTANTIATE_ASSEMBLER(Rational)

}  // namespace mdspline
