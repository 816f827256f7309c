#include "mdspline/space.hpp"

#include <algorithm>
#include <sstream>

namespace mdspline {

int MDSpace::max_degree() const {
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

int MDSpace::min_degree() const {
    return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
}

void check_space(const MDSpace& space) {
    const std::size_t q = space.breakpoints.size();
    if (!(space.a < space.b)) throw SpaceError("interval must satisfy a < b");
    if (space.degrees.size() != q + 1)
        throw SpaceError("expected " + std::to_string(q + 1) + " degrees, got " +
                         std::to_string(space.degrees.size()));
    if (space.continuities.size() != q)
        throw SpaceError("expected " + std::to_string(q) + " continuities, got " +
                         std::to_string(space.continuities.size()));
    for (std::size_t i = 0; i <= q; ++i) {
        if (!(space.knot(i) < space.knot(i + 1)))
            throw SpaceError("breakpoints must be strictly increasing inside (a,b); interval " +
                             std::to_string(i) + " is empty or reversed");
    }
    if (space.internal) return;
    for (std::size_t i = 0; i <= q; ++i) {
        if (space.degrees[i] < 0)
            throw SpaceError("negative degree on interval " + std::to_string(i));
    }
    for (std::size_t i = 1; i <= q; ++i) {
        const int k = space.cont(i);
        const int bound = std::min(space.degrees[i - 1], space.degrees[i]);
        if (k < 0) throw SpaceError("negative continuity at breakpoint " + std::to_string(i));
        if (k > bound)
            throw SpaceError("continuity " + std::to_string(k) + " at breakpoint " +
                             std::to_string(i) + " exceeds min adjacent degree " +
                             std::to_string(bound));
    }
}

MDSpace validate_space(double a, double b, std::vector<double> breakpoints,
                       std::vector<int> degrees, std::vector<int> continuities) {
    MDSpace s;
    s.a = a;
    s.b = b;
    s.breakpoints = std::move(breakpoints);
    s.degrees = std::move(degrees);
    s.continuities = std::move(continuities);
    check_space(s);
    return s;
}

long dimension(const MDSpace& space) {
    long k = space.degrees.front() + 1;
    for (std::size_t i = 1; i < space.degrees.size(); ++i) k += space.degrees[i] - space.cont(i);
    return k;
}

ExtendedPartition extended_partitions(const MDSpace& space) {
    const std::size_t q = space.num_breakpoints();
    ExtendedPartition p;
    auto push = [&](std::vector<double>& v, std::vector<std::size_t>& idx, std::size_t knot,
                    int count) {
        if (count < 0)
            throw SpaceError("degenerate space: negative multiplicity at knot " +
                             std::to_string(knot));
        for (int c = 0; c < count; ++c) {
            v.push_back(space.knot(knot));
            idx.push_back(knot);
        }
    };
    push(p.s, p.s_index, 0, space.degrees[0] + 1);
    for (std::size_t i = 1; i <= q; ++i) push(p.s, p.s_index, i, space.degrees[i] - space.cont(i));
    for (std::size_t i = 1; i <= q; ++i)
        push(p.t, p.t_index, i, space.degrees[i - 1] - space.cont(i));
    push(p.t, p.t_index, q + 1, space.degrees[q] + 1);
    return p;
}

ExtendedPartition derivative_partitions(const ExtendedPartition& base, int r) {
    const auto n = static_cast<std::ptrdiff_t>(base.s.size());
    if (r < 0 || r > n) throw SpaceError("derivative order out of range");
    ExtendedPartition p;
    p.s.assign(base.s.begin() + r, base.s.end());
    p.s_index.assign(base.s_index.begin() + r, base.s_index.end());
    p.t.assign(base.t.begin(), base.t.end() - r);
    p.t_index.assign(base.t_index.begin(), base.t_index.end() - r);
    return p;
}

MDSpace associated_c0(const MDSpace& space) {
    MDSpace c0 = space;
    for (std::size_t i = 1; i <= space.num_breakpoints(); ++i) {
        if (space.degrees[i - 1] != space.degrees[i])
            c0.continuities[i - 1] = std::min(space.cont(i), 0);
    }
    return c0;
}

MDSpace shift_space(const MDSpace& space, int r) {
    MDSpace d = space;
    for (int& v : d.degrees) v -= r;
    for (int& v : d.continuities) v -= r;
    if (r > 0) d.internal = true;
    return d;
}

DerivativeDescriptor derivative_space(const MDSpace& space, int r) {
    if (r < 0 || r > space.max_degree())
        throw SpaceError("derivative order " + std::to_string(r) + " outside 0.." +
                         std::to_string(space.max_degree()));
    DerivativeDescriptor d;
    d.base = space;
    d.order = r;
    d.space = shift_space(space, r);
    d.zero_interval.resize(space.num_intervals());
    for (std::size_t i = 0; i < space.num_intervals(); ++i)
        d.zero_interval[i] = d.space.degrees[i] < 0;
    d.dim = dimension(space) - r;
    return d;
}

std::vector<JoinStep> order_joins(std::vector<JoinStep> joins) {
    std::stable_sort(joins.begin(), joins.end(), [](const JoinStep& l, const JoinStep& r) {
        if (l.continuity != r.continuity) return l.continuity > r.continuity;
        return l.breakpoint < r.breakpoint;
    });
    return joins;
}

SectionDecomposition section_decomposition(const MDSpace& space) {
    SectionDecomposition sd;
    const std::size_t q = space.num_breakpoints();
    sd.boundaries.push_back(0);
    std::vector<JoinStep> joins;
    for (std::size_t i = 1; i <= q; ++i) {
        if (space.degrees[i - 1] != space.degrees[i]) {
            sd.boundaries.push_back(i);
            joins.push_back({i, space.cont(i)});
        }
    }
    sd.boundaries.push_back(q + 1);
    for (std::size_t s = 0; s + 1 < sd.boundaries.size(); ++s) {
        Section sec;
        sec.first_interval = sd.boundaries[s];
        sec.last_interval = sd.boundaries[s + 1] - 1;
        sec.degree = space.degrees[sec.first_interval];
        sd.sections.push_back(sec);
    }
    sd.join_order = order_joins(std::move(joins));
    return sd;
}

std::size_t find_interval(const MDSpace& space, double x) {
    if (!(x >= space.a && x <= space.b))
        throw SpaceError("point " + std::to_string(x) + " outside [a,b]");
    const auto& bp = space.breakpoints;
    return static_cast<std::size_t>(std::upper_bound(bp.begin(), bp.end(), x) - bp.begin());
}

MDSpace restrict_space(const MDSpace& space, std::size_t first, std::size_t last) {
    if (first > last || last >= space.num_intervals())
        throw SpaceError("invalid interval range for restriction");
    MDSpace r;
    r.a = space.knot(first);
    r.b = space.knot(last + 1);
    r.internal = space.internal;
    for (std::size_t i = first; i <= last; ++i) r.degrees.push_back(space.degrees[i]);
    for (std::size_t i = first + 1; i <= last; ++i) {
        r.breakpoints.push_back(space.knot(i));
        r.continuities.push_back(space.cont(i));
    }
    return r;
}

MDSpace join_spaces(const MDSpace& left, const MDSpace& right, int continuity) {
    if (left.b != right.a) throw SpaceError("join_spaces: spaces are not adjacent");
    MDSpace j;
    j.a = left.a;
    j.b = right.b;
    j.internal = left.internal || right.internal || continuity < 0;
    j.breakpoints = left.breakpoints;
    j.breakpoints.push_back(left.b);
    j.breakpoints.insert(j.breakpoints.end(), right.breakpoints.begin(), right.breakpoints.end());
    j.degrees = left.degrees;
    j.degrees.insert(j.degrees.end(), right.degrees.begin(), right.degrees.end());
    j.continuities = left.continuities;
    j.continuities.push_back(continuity);
    j.continuities.insert(j.continuities.end(), right.continuities.begin(),
                          right.continuities.end());
    return j;
}

std::string describe(const MDSpace& space) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << space.a << "," << space.b << "] (";
    for (std::size_t i = 0; i < space.num_intervals(); ++i) {
        if (i > 0) os << "_" << space.cont(i) << " ";
        os << space.degrees[i];
    }
    os << ")";
    return os.str();
}

}  // namespace mdspline
