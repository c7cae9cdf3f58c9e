#include "octaflip/convex.hpp"

#include "octaflip/errors.hpp"

namespace octaflip {

bool simplex_feasible(const std::vector<std::vector<Rational>>& A,
                      const std::vector<Rational>& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw InternalError("simplex: row count mismatch");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    if (m == 0) return true;

    // Tableau with one artificial variable per row; phase-1 minimizes their
    // sum. Feasible iff the optimum is zero.
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const int flip = b[r] < 0 ? -1 : 1;
        for (std::size_t c = 0; c < n; ++c) T[r][c] = flip * A[r][c];
        T[r][n + r] = 1;
        T[r][cols] = flip * b[r];
        basis[r] = n + r;
    }

    // Reduced-cost row for minimizing the sum of artificials, stored negated
    // so that obj[c] > 0 marks an improving column. Artificial columns are
    // basic and start at zero; the pivot updates keep all entries consistent.
    std::vector<Rational> obj(cols + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) obj[c] += T[r][c];
        obj[cols] += T[r][cols];
    }

    while (true) {
        // Bland: entering = lowest-index column with positive reduced cost
        // (we maximize the negated objective; equivalently pick obj[c] > 0
        // among non-artificial-cost columns).
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (obj[c] > 0) { enter = c; break; }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][cols] / T[r][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m)
            throw InternalError("phase-1 simplex hit an unbounded direction");

        // Pivot.
        const Rational piv = T[leave][enter];
        for (std::size_t c = 0; c <= cols; ++c) T[leave][c] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            const Rational f = T[r][enter];
            for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= f * T[leave][c];
        }
        if (obj[enter] != 0) {
            const Rational f = obj[enter];
            for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }

    return obj[cols] == 0;
}

bool in_convex_hull(std::span<const ExponentVector> points, const ExponentVector& v) {
    if (points.empty()) return false;
    const std::size_t g = v.size();
    // bounding-box reject
    for (std::size_t c = 0; c < g; ++c) {
        bool all_less = true, all_greater = true;
        for (const auto& p : points) {
            if (p[c] >= v[c]) all_less = false;
            if (p[c] <= v[c]) all_greater = false;
            if (!all_less && !all_greater) break;
        }
        if (all_less || all_greater) return false;
    }
    // lambda >= 0, sum lambda = 1, sum lambda_i p_i = v
    std::vector<std::vector<Rational>> A(g + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(g + 1);
    for (std::size_t c = 0; c < points.size(); ++c) {
        if (points[c].size() != g) throw BackendMismatch("hull point length mismatch");
        for (std::size_t r = 0; r < g; ++r) A[r][c] = points[c][r];
        A[g][c] = 1;
    }
    for (std::size_t r = 0; r < g; ++r) b[r] = v[r];
    b[g] = 1;
    return simplex_feasible(A, b);
}

} // namespace octaflip
