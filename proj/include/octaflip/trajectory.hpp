#pragma once

#include <array>
#include <vector>

#include "octaflip/projective.hpp"
#include "octaflip/quadratic.hpp"

namespace octaflip {

/// Piecewise-linear motion of one point in the z = 1 affine chart.
struct PointTrack {
    std::vector<Rational> times;                 // 0 = t0 < ... < tM = 1
    std::vector<std::array<Rational, 2>> positions;

    void validate() const;
    std::array<Rational, 2> at(const Rational& t) const;
    /// Index of the segment whose closed span contains t (ties resolve to the
    /// later segment except at t = 1).
    std::size_t segment_at(const Rational& t) const;
};

/// Piecewise-linear rational motion of n points over t in [0,1].
struct Trajectory {
    std::vector<PointTrack> tracks;

    std::size_t size() const { return tracks.size(); }
    void validate() const;
    Configuration configuration_at(const Rational& t) const;
    /// Constant motion holding the given points.
    static Trajectory constant(const std::vector<std::array<Rational, 2>>& points);
};

/// One transversal collinearity crossing of a point triple.
struct MotionEvent {
    std::array<std::size_t, 3> triple; // point indices, ascending
    QuadraticRoot time;                // simple root with a strict sign change
    int sign_before, sign_after;
};

/// All collinearity events of the motion, unordered. Per triple and segment
/// the 3x3 determinant is expanded as a quadratic in t; simple interior roots
/// with strict sign changes become events. Throws DegenerateEvent on
/// tangencies, IdenticallyZero on segments of persistent collinearity, and
/// EndpointEvent on roots at breakpoints or at t in {0,1}.
std::vector<MotionEvent> detect_events(const Trajectory& traj);

/// Total order by exact comparison of the event times. Throws
/// SimultaneousEvents when two distinct triples degenerate at one instant.
std::vector<MotionEvent> order_events(std::vector<MotionEvent> events);

/// Exact collision scan: throws NotGeneric if any two points coincide at any
/// t in [0,1] (point motions must stay in the configuration space of
/// pairwise distinct points).
void check_no_collisions(const Trajectory& traj);

} // namespace octaflip
