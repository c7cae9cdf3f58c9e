#include "octaflip/trajectory.hpp"

#include <algorithm>
#include <set>

#include "octaflip/errors.hpp"

namespace octaflip {

void PointTrack::validate() const {
    if (times.size() < 2 || times.size() != positions.size())
        throw InvalidInput("track needs matching times and positions, at least two");
    if (times.front() != 0 || times.back() != 1)
        throw InvalidInput("track times must start at 0 and end at 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i - 1] < times[i]))
            throw InvalidInput("track times must be strictly increasing");
}

std::size_t PointTrack::segment_at(const Rational& t) const {
    if (t < times.front() || t > times.back())
        throw InvalidInput("time outside [0,1]");
    for (std::size_t s = 0; s + 1 < times.size(); ++s)
        if (t < times[s + 1] || s + 2 == times.size()) return s;
    return times.size() - 2;
}

std::array<Rational, 2> PointTrack::at(const Rational& t) const {
    const std::size_t s = segment_at(t);
    const Rational span = times[s + 1] - times[s];
    const Rational u = (t - times[s]) / span;
    return {positions[s][0] + u * (positions[s + 1][0] - positions[s][0]),
            positions[s][1] + u * (positions[s + 1][1] - positions[s][1])};
}

void Trajectory::validate() const {
    if (tracks.empty()) throw InvalidInput("trajectory has no points");
    for (const auto& t : tracks) t.validate();
}

Configuration Trajectory::configuration_at(const Rational& t) const {
    Configuration c;
    c.reserve(tracks.size());
    for (const auto& tr : tracks) {
        auto p = tr.at(t);
        c.push_back(ProjPoint::from_affine(p[0], p[1]));
    }
    return c;
}

Trajectory Trajectory::constant(const std::vector<std::array<Rational, 2>>& points) {
    Trajectory t;
    for (const auto& p : points)
        t.tracks.push_back(PointTrack{{Rational(0), Rational(1)}, {p, p}});
    return t;
}

namespace {

/// x(t) and y(t) of one point as degree-1 polynomials in the global time,
/// valid on one segment: value = base + slope * t.
struct LinearXY {
    Rational bx, sx, by, sy;
};

LinearXY linear_on_segment(const PointTrack& tr, std::size_t seg) {
    const Rational span = tr.times[seg + 1] - tr.times[seg];
    const Rational sx = (tr.positions[seg + 1][0] - tr.positions[seg][0]) / span;
    const Rational sy = (tr.positions[seg + 1][1] - tr.positions[seg][1]) / span;
    return LinearXY{tr.positions[seg][0] - sx * tr.times[seg], sx,
                    tr.positions[seg][1] - sy * tr.times[seg], sy};
}

std::vector<Rational> merged_breakpoints(const Trajectory& traj,
                                         const std::vector<std::size_t>& pts) {
    std::set<Rational> merged;
    for (auto p : pts)
        for (const auto& t : traj.tracks[p].times) merged.insert(t);
    return {merged.begin(), merged.end()};
}

std::string triple_name(const std::array<std::size_t, 3>& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "}";
}

} // namespace

std::vector<MotionEvent> detect_events(const Trajectory& traj) {
    traj.validate();
    const std::size_t n = traj.size();
    std::vector<MotionEvent> events;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::array<std::size_t, 3> triple{i, j, k};
                const auto grid = merged_breakpoints(traj, {i, j, k});

                // Per-segment determinant coefficients first: a vanishing
                // polynomial is a stronger diagnosis than a breakpoint zero.
                struct SegmentPoly {
                    Rational c2, c1, c0;
                };
                std::vector<SegmentPoly> polys;
                for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
                    const Rational mid = (grid[s] + grid[s + 1]) / 2;
                    const LinearXY a = linear_on_segment(traj.tracks[i],
                                                         traj.tracks[i].segment_at(mid));
                    const LinearXY b = linear_on_segment(traj.tracks[j],
                                                         traj.tracks[j].segment_at(mid));
                    const LinearXY c = linear_on_segment(traj.tracks[k],
                                                         traj.tracks[k].segment_at(mid));
                    // det = (xj-xi)(yk-yi) - (yj-yi)(xk-xi), all entries linear
                    const Rational dxb = b.bx - a.bx, dxs = b.sx - a.sx;
                    const Rational dyb = c.by - a.by, dys = c.sy - a.sy;
                    const Rational exb = b.by - a.by, exs = b.sy - a.sy;
                    const Rational eyb = c.bx - a.bx, eys = c.sx - a.sx;
                    SegmentPoly p;
                    p.c2 = dxs * dys - exs * eys;
                    p.c1 = dxb * dys + dxs * dyb - exb * eys - exs * eyb;
                    p.c0 = dxb * dyb - exb * eyb;
                    if (p.c2 == 0 && p.c1 == 0 && p.c0 == 0)
                        throw IdenticallyZero("triple " + triple_name(triple) +
                                              " collinear throughout [" +
                                              format_rational(grid[s]) + "," +
                                              format_rational(grid[s + 1]) + "]");
                    polys.push_back(std::move(p));
                }

                // The determinant is continuous, so checking every merged
                // breakpoint once covers both segment ends.
                for (const auto& bp : grid) {
                    const auto pi = traj.tracks[i].at(bp);
                    const auto pj = traj.tracks[j].at(bp);
                    const auto pk = traj.tracks[k].at(bp);
                    const Rational det = (pj[0] - pi[0]) * (pk[1] - pi[1]) -
                                         (pj[1] - pi[1]) * (pk[0] - pi[0]);
                    if (det == 0)
                        throw EndpointEvent("triple " + triple_name(triple) +
                                            " collinear at breakpoint t=" +
                                            format_rational(bp));
                }

                for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
                    const Rational u = grid[s], v = grid[s + 1];
                    const Rational c2 = polys[s].c2, c1 = polys[s].c1, c0 = polys[s].c0;

                    std::vector<QuadraticRoot> roots;
                    try {
                        roots = QuadraticRoot::isolate_in(c2, c1, c0, u, v);
                    } catch (const DegenerateEvent&) {
                        throw DegenerateEvent("triple " + triple_name(triple) +
                                              " has a tangential collinearity in [" +
                                              format_rational(u) + "," +
                                              format_rational(v) + "]");
                    }
                    for (auto& r : roots) {
                        MotionEvent e;
                        e.triple = triple;
                        const int before = r.eval(r.lo()).sign();
                        const int after = r.eval(r.hi()).sign();
                        if (before == 0 || after == 0 || before == after)
                            throw InternalError("isolated root without a sign change");
                        e.sign_before = before;
                        e.sign_after = after;
                        e.time = std::move(r);
                        events.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return events;
}

std::vector<MotionEvent> order_events(std::vector<MotionEvent> events) {
    // Exact comparison sort; equality between distinct triples is an error.
    // Insertion sort keeps the comparator calls simple and the event counts
    // are small.
    std::vector<MotionEvent> sorted;
    for (auto& e : events) {
        std::size_t pos = sorted.size();
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const int c = QuadraticRoot::compare(e.time, sorted[i].time);
            if (c == 0)
                throw SimultaneousEvents("triples " + triple_name(e.triple) + " and " +
                                         triple_name(sorted[i].triple) +
                                         " are collinear at the same instant");
            if (c < 0) {
                pos = i;
                break;
            }
        }
        sorted.insert(sorted.begin() + pos, std::move(e));
    }
    return sorted;
}

void check_no_collisions(const Trajectory& traj) {
    const std::size_t n = traj.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto grid = merged_breakpoints(traj, {a, b});
            for (std::size_t s = 0; s + 1 < grid.size(); ++s) {
                const Rational u = grid[s], v = grid[s + 1];
                const Rational mid = (u + v) / 2;
                const LinearXY pa = linear_on_segment(traj.tracks[a],
                                                      traj.tracks[a].segment_at(mid));
                const LinearXY pb = linear_on_segment(traj.tracks[b],
                                                      traj.tracks[b].segment_at(mid));
                const Rational dxb = pb.bx - pa.bx, dxs = pb.sx - pa.sx;
                const Rational dyb = pb.by - pa.by, dys = pb.sy - pa.sy;
                // both coordinates of the difference vanish at some t in [u,v]?
                auto fail = [&](const Rational& t) {
                    throw NotGeneric("points " + std::to_string(a) + " and " +
                                     std::to_string(b) + " collide at t=" +
                                     format_rational(t));
                };
                if (dxs == 0 && dxb == 0 && dys == 0 && dyb == 0) fail(u);
                if (dxs == 0 && dxb == 0) {
                    if (dys == 0) continue; // dyb != 0: never zero
                    const Rational t = -dyb / dys;
                    if (u <= t && t <= v) fail(t);
                    continue;
                }
                if (dys == 0 && dyb == 0) {
                    if (dxs == 0) continue;
                    const Rational t = -dxb / dxs;
                    if (u <= t && t <= v) fail(t);
                    continue;
                }
                if (dxs == 0 || dys == 0) continue; // one coord constant nonzero
                const Rational tx = -dxb / dxs, ty = -dyb / dys;
                if (tx == ty && u <= tx && tx <= v) fail(tx);
            }
        }
    }
}

} // namespace octaflip
