#pragma once

#include <span>
#include <vector>

#include "octaflip/laurent.hpp"

namespace octaflip {

/// Decides feasibility of  A x = b, x >= 0  by an exact phase-1 simplex over
/// the rationals (Bland's rule, so termination is unconditional). Matrix is
/// row-major, rows x cols.
bool simplex_feasible(const std::vector<std::vector<Rational>>& A,
                      const std::vector<Rational>& b);

/// True iff v lies in the convex hull of `points` (exact rational LP).
bool in_convex_hull(std::span<const ExponentVector> points, const ExponentVector& v);

} // namespace octaflip
