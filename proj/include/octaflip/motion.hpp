#pragma once

#include <string>

#include "octaflip/arrangement.hpp"
#include "octaflip/trajectory.hpp"

namespace octaflip {

/// One compiled triangle inversion. `sigma` is the collapsing face of the
/// arrangement rebuilt at t_minus, keyed in input (point-order, affine-sign)
/// basis; sigma_canonical is the same face in that arrangement's canonical
/// basis.
struct FlipRecord {
    std::array<std::size_t, 3> triple; // point indices, ascending
    std::string sigma;
    std::string sigma_canonical;
    Rational t_minus, t_plus;
};

struct FlipScript {
    std::vector<FlipRecord> entries;
    std::size_t size() const { return entries.size(); }
};

/// Arrangement of the dual lines at one instant, with continuously varying
/// sign representatives (x(t), y(t), 1).
DualArrangement arrangement_at(const Trajectory& traj, const Rational& t);

/// Compiles a generic motion into its ordered flip script. c0 must equal the
/// trajectory's t = 0 configuration. Throws the event-detection errors,
/// NotGeneric on collisions or non-generic endpoints, and ObstructedTriangle
/// when the face-set change across an event is not a single triangle
/// inversion.
FlipScript compile_flip_script(const Configuration& c0, const Trajectory& traj);

/// Braid word over s1..s_{n-1} and inverses, e.g. "s1 s2^-1 s1".
struct BraidWord {
    std::vector<int> letters; // +i for s_i, -i for s_i^-1 (1-based)
};

BraidWord parse_braid_word(const std::string& text);

/// Encodes a braid word as a motion: each letter swaps the i-th and (i+1)-th
/// points in current left-to-right order along a counterclockwise (clockwise
/// for inverses) semicircular arc, approximated by `arc_segments` rational
/// chords. Letters occupy disjoint time windows; the final configuration
/// equals the base as a set.
Trajectory braid_word_to_trajectory(const BraidWord& word,
                                    const std::vector<std::array<Rational, 2>>& base,
                                    std::size_t arc_segments = 8);

/// t -> 1 - t, reversing per-track breakpoints.
Trajectory time_reversed(const Trajectory& traj);

} // namespace octaflip
