#include "octaflip/audit.hpp"

#include <algorithm>

#include "octaflip/errors.hpp"

namespace octaflip {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi, std::int64_t maxden) {
    return Rational(Int(uniform(lo, hi)), Int(uniform(1, maxden)));
}

std::vector<std::array<Rational, 2>> random_affine_points(Rng& rng, std::size_t n,
                                                          std::int64_t box) {
    std::vector<std::array<Rational, 2>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({rng.rational(-box, box, 4), rng.rational(-box, box, 4)});
    return pts;
}

Configuration random_generic_configuration(Rng& rng, std::size_t n, std::int64_t box) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const auto pts = random_affine_points(rng, n, box);
        Configuration c;
        for (const auto& p : pts) c.push_back(ProjPoint::from_affine(p[0], p[1]));
        if (is_generic(c)) return c;
    }
    throw InternalError("failed to sample a generic configuration");
}

Trajectory random_wiggle_trajectory(Rng& rng,
                                    const std::vector<std::array<Rational, 2>>& start) {
    Trajectory traj;
    for (const auto& p : start) {
        PointTrack track;
        const Rational u(rng.uniform(2, 9), 20);   // in (0, 1/2)
        const Rational v(rng.uniform(11, 18), 20); // in (1/2, 1)
        track.times = {Rational(0), u, v, Rational(1)};
        track.positions.push_back(p);
        for (int w = 0; w < 3; ++w)
            track.positions.push_back({p[0] + rng.rational(-8, 8, 4),
                                       p[1] + rng.rational(-8, 8, 4)});
        traj.tracks.push_back(std::move(track));
    }
    return traj;
}

GeometricScript random_geometric_script(Rng& rng, std::size_t n, std::size_t max_len) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::array<Rational, 2>> start = random_affine_points(rng, n, 10);
        Configuration c;
        for (const auto& p : start) c.push_back(ProjPoint::from_affine(p[0], p[1]));
        if (!is_generic(c)) continue;
        Trajectory traj = random_wiggle_trajectory(rng, start);
        try {
            FlipScript script = compile_flip_script(c, traj);
            if (script.size() > max_len) script.entries.resize(max_len);
            return GeometricScript{std::move(traj), std::move(script)};
        } catch (const NotGeneric&) {
            continue; // tangency, simultaneity, collision: resample
        }
    }
    throw InternalError("failed to sample a generic motion");
}

AuditReport laurent_audit(std::size_t n, std::size_t trials, std::size_t script_length,
                          std::uint64_t seed) {
    if (n < 3) throw InvalidInput("laurent audit needs n >= 3 (no triples otherwise)");
    Rng rng(seed);
    AuditReport report;
    report.n = n;
    report.trials = trials;
    report.script_length = script_length;
    report.seed = seed;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const GeometricScript gs = random_geometric_script(rng, n, script_length);
        const DualArrangement a0 = arrangement_at(gs.trajectory, Rational(0));
        const Labeling l0 = initial_labeling(a0, Backend::Classical);
        const Labeling lf = propagate(l0, gs.script, a0);
        for (const auto& [key, value] : lf.values) {
            ++report.labels_total;
            const FieldElement& f = value.classical();
            if (f.is_polynomial() || laurent_exact_divide(f.num(), f.den()))
                ++report.labels_laurent;
        }
    }
    return report;
}

FuzzReport evaluation_fuzz(Backend backend, std::size_t cases, std::size_t n,
                           std::size_t max_len, std::uint64_t seed) {
    Rng rng(seed);
    FuzzReport report;
    while (report.cases < cases) {
        const GeometricScript gs = random_geometric_script(rng, n, max_len);
        const DualArrangement a0 = arrangement_at(gs.trajectory, Rational(0));
        const Labeling l0 = initial_labeling(a0, backend);
        const Labeling lf = propagate(l0, gs.script, a0);
        const auto faces = generator_faces(a0);

        // a handful of points per script keeps the mix of scripts and points
        for (int rep = 0; rep < 5 && report.cases < cases; ++rep) {
            ++report.cases;
            std::vector<Rational> point;
            point.reserve(faces.size());
            for (std::size_t g = 0; g < faces.size(); ++g)
                point.push_back(rng.rational(-9, 9, 3));

            std::map<std::string, Rational> numeric;
            for (std::size_t r = 0; r < faces.size(); ++r)
                numeric.emplace(a0.from_canonical_key(faces[r]), point[r]);
            if (!numeric_propagate(numeric, backend, gs.script, a0)) {
                ++report.skipped;
                continue;
            }
            bool mismatch = false;
            try {
                for (const auto& [key, value] : lf.values) {
                    if (sf_evaluate(value, point) != numeric.at(key)) {
                        mismatch = true;
                        break;
                    }
                }
            } catch (const DivisionByZero&) {
                ++report.skipped;
                continue;
            }
            if (mismatch) ++report.mismatches;
        }
    }
    return report;
}

SuiteReport involution_suite(Backend backend, std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    SuiteReport report;
    while (report.cases < cases) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 6));
        const Configuration c = random_generic_configuration(rng, n);
        const DualArrangement a = DualArrangement::from_configuration(c);
        const auto sites = a.flip_sites();
        if (sites.empty()) continue;
        const FlipSite& site = sites[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(sites.size()) - 1))];

        const Labeling l0 = initial_labeling(a, backend);
        const Labeling l1 = flip_label(l0, site);
        const Labeling l2 = flip_label(l1, site.reversed());

        ++report.cases;
        bool ok = l2.values.size() == l0.values.size();
        if (ok) {
            for (const auto& [key, value] : l0.values) {
                const auto it = l2.values.find(key);
                if (it == l2.values.end() || !sf_equals(value, it->second)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) ++report.failures;
    }
    return report;
}

namespace {

std::vector<std::string> site_roles(const FlipSite& s) {
    std::vector<std::string> roles{s.sigma, s.tau};
    for (int m = 0; m < 3; ++m) {
        roles.push_back(s.edge_neighbors[m]);
        roles.push_back(s.vertex_neighbors[m]);
    }
    std::sort(roles.begin(), roles.end());
    roles.erase(std::unique(roles.begin(), roles.end()), roles.end());
    return roles;
}

bool disjoint_roles(const FlipSite& a, const FlipSite& b) {
    const auto ra = site_roles(a), rb = site_roles(b);
    std::vector<std::string> common;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::back_inserter(common));
    return common.empty();
}

} // namespace

SuiteReport commutation_suite(Backend backend, std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    SuiteReport report;
    while (report.cases < cases) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(6, 7));
        const Configuration c = random_generic_configuration(rng, n);
        const DualArrangement a = DualArrangement::from_configuration(c);
        const auto sites = a.flip_sites();

        for (std::size_t i = 0; i < sites.size() && report.cases < cases; ++i) {
            for (std::size_t j = i + 1; j < sites.size() && report.cases < cases; ++j) {
                if (!disjoint_roles(sites[i], sites[j])) continue;
                ++report.cases;
                const Labeling l0 = initial_labeling(a, backend);
                const Labeling lab = flip_label(flip_label(l0, sites[i]), sites[j]);
                const Labeling lba = flip_label(flip_label(l0, sites[j]), sites[i]);
                bool ok = lab.values.size() == lba.values.size();
                if (ok) {
                    for (const auto& [key, value] : lab.values) {
                        const auto it = lba.values.find(key);
                        if (it == lba.values.end() || !sf_equals(value, it->second)) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) ++report.failures;
            }
        }
    }
    return report;
}

OracleReport event_grid_oracle(std::size_t trajectories, std::size_t grid_size,
                               std::uint64_t seed) {
    Rng rng(seed);
    OracleReport report;
    const Int K(static_cast<std::int64_t>(grid_size));

    while (report.trajectories < trajectories) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 5));
        const auto start = random_affine_points(rng, n, 10);
        Configuration c;
        for (const auto& p : start) c.push_back(ProjPoint::from_affine(p[0], p[1]));
        if (!is_generic(c)) continue;
        const Trajectory traj = random_wiggle_trajectory(rng, start);

        std::vector<MotionEvent> events;
        try {
            events = order_events(detect_events(traj));
        } catch (const NotGeneric&) {
            continue;
        }

        // Grid scan at t = cell / grid_size. The determinant is integerized
        // per segment (cleared denominators) so each sample costs only
        // integer arithmetic.
        struct Change {
            std::size_t cell;
            std::array<std::size_t, 3> triple;
        };
        std::vector<Change> changes;
        bool ambiguous = false;
        for (std::size_t i = 0; i < n && !ambiguous; ++i) {
            for (std::size_t j = i + 1; j < n && !ambiguous; ++j) {
                for (std::size_t k = j + 1; k < n && !ambiguous; ++k) {
                    int prev_sign = 0;
                    std::size_t cell = 0;
                    std::set<Rational> merged;
                    for (auto p : {i, j, k})
                        merged.insert(traj.tracks[p].times.begin(),
                                      traj.tracks[p].times.end());
                    std::vector<Rational> grid(merged.begin(), merged.end());
                    for (std::size_t s = 0; s + 1 < grid.size() && !ambiguous; ++s) {
                        const Rational mid = (grid[s] + grid[s + 1]) / 2;
                        // det(t) = c2 t^2 + c1 t + c0 on this segment
                        auto lin = [&](std::size_t p) {
                            const auto& tr = traj.tracks[p];
                            const std::size_t seg = tr.segment_at(mid);
                            const Rational span = tr.times[seg + 1] - tr.times[seg];
                            const Rational sx =
                                (tr.positions[seg + 1][0] - tr.positions[seg][0]) / span;
                            const Rational sy =
                                (tr.positions[seg + 1][1] - tr.positions[seg][1]) / span;
                            return std::array<Rational, 4>{
                                tr.positions[seg][0] - sx * tr.times[seg], sx,
                                tr.positions[seg][1] - sy * tr.times[seg], sy};
                        };
                        const auto a = lin(i), b = lin(j), cc = lin(k);
                        const Rational dxb = b[0] - a[0], dxs = b[1] - a[1];
                        const Rational dyb = cc[2] - a[2], dys = cc[3] - a[3];
                        const Rational exb = b[2] - a[2], exs = b[3] - a[3];
                        const Rational eyb = cc[0] - a[0], eys = cc[1] - a[1];
                        const Rational c2 = dxs * dys - exs * eys;
                        const Rational c1 = dxb * dys + dxs * dyb - exb * eys - exs * eyb;
                        const Rational c0 = dxb * dyb - exb * eyb;
                        Int D = lcm(lcm(denominator(c2), denominator(c1)), denominator(c0));
                        const Int C2 = numerator(c2) * (D / denominator(c2));
                        const Int C1 = numerator(c1) * (D / denominator(c1));
                        const Int C0 = numerator(c0) * (D / denominator(c0));

                        for (; cell <= grid_size; ++cell) {
                            const Rational t(Int(static_cast<std::int64_t>(cell)), K);
                            if (t > grid[s + 1]) break;
                            if (t < grid[s]) continue;
                            const Int x(static_cast<std::int64_t>(cell));
                            const int sg = Int(C2 * x * x + C1 * x * K + C0 * K * K).sign();
                            if (sg == 0) { ambiguous = true; break; } // grid hit a root
                            if (cell > 0 && prev_sign != 0 && sg != prev_sign)
                                changes.push_back({cell, {i, j, k}});
                            prev_sign = sg;
                        }
                    }
                }
            }
        }
        if (ambiguous) continue;
        std::stable_sort(changes.begin(), changes.end(),
                         [](const Change& a, const Change& b) { return a.cell < b.cell; });
        for (std::size_t i = 1; i < changes.size(); ++i)
            if (changes[i].cell == changes[i - 1].cell) ambiguous = true;
        if (ambiguous) continue;

        ++report.trajectories;
        bool ok = changes.size() == events.size();
        if (ok) {
            for (std::size_t i = 0; i < changes.size(); ++i) {
                if (changes[i].triple != events[i].triple) { ok = false; break; }
                // the exact root must lie inside the cell that saw the change
                const Rational lo(Int(static_cast<std::int64_t>(changes[i].cell - 1)), K);
                const Rational hi(Int(static_cast<std::int64_t>(changes[i].cell)), K);
                if (events[i].time.sign_of_linear(-lo, Rational(1)) <= 0 ||
                    events[i].time.sign_of_linear(-hi, Rational(1)) >= 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) ++report.mismatches;
    }
    return report;
}

} // namespace octaflip
