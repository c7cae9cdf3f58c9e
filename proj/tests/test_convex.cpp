#include <doctest.h>

#include "octaflip/audit.hpp"
#include "octaflip/convex.hpp"

using namespace octaflip;

namespace {

// Independent oracle for dimension <= 2 via Caratheodory: v lies in the hull
// iff it lies in a segment (1D) or triangle (2D) spanned by input points.
bool hull_oracle_2d(const std::vector<ExponentVector>& pts, const ExponentVector& v) {
    auto orient = [](const ExponentVector& a, const ExponentVector& b,
                     const ExponentVector& c) {
        const std::int64_t d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        return d < 0 ? -1 : d > 0 ? 1 : 0;
    };
    auto on_segment = [&](const ExponentVector& a, const ExponentVector& b,
                          const ExponentVector& p) {
        if (orient(a, b, p) != 0) return false;
        return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
               std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == v) return true;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (on_segment(pts[i], pts[j], v)) return true;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (orient(pts[i], pts[j], pts[k]) == 0)
                    continue; // degenerate triangle; its segments are covered above
                const int o1 = orient(pts[i], pts[j], v);
                const int o2 = orient(pts[j], pts[k], v);
                const int o3 = orient(pts[k], pts[i], v);
                const bool no_neg = o1 >= 0 && o2 >= 0 && o3 >= 0;
                const bool no_pos = o1 <= 0 && o2 <= 0 && o3 <= 0;
                if (no_neg || no_pos) return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("hull membership: hand cases") {
    const std::vector<ExponentVector> segment{{0, 0}, {2, 0}};
    CHECK(in_convex_hull(segment, {1, 0}));
    CHECK(in_convex_hull(segment, {0, 0}));
    CHECK_FALSE(in_convex_hull(segment, {3, 0}));
    CHECK_FALSE(in_convex_hull(segment, {1, 1}));

    const std::vector<ExponentVector> triangle{{0, 0}, {4, 0}, {0, 4}};
    CHECK(in_convex_hull(triangle, {1, 1}));
    CHECK(in_convex_hull(triangle, {2, 2})); // on the hypotenuse
    CHECK_FALSE(in_convex_hull(triangle, {3, 3}));
    CHECK_FALSE(in_convex_hull(triangle, {-1, 0}));
}

TEST_CASE("hull membership in higher dimension") {
    // standard simplex corners in Z^4
    const std::vector<ExponentVector> pts{
        {0, 0, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    CHECK(in_convex_hull(pts, {1, 1, 0, 0}));
    CHECK_FALSE(in_convex_hull(pts, {1, 1, 1, 1}));
    CHECK(in_convex_hull(pts, {0, 0, 0, 0}));
}

TEST_CASE("hull membership agrees with the 2D Caratheodory oracle") {
    Rng rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 7));
        std::vector<ExponentVector> pts;
        for (std::size_t i = 0; i < m; ++i)
            pts.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
        const ExponentVector v{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        CHECK(in_convex_hull(pts, v) == hull_oracle_2d(pts, v));
    }
}
