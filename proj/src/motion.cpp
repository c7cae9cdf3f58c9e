#include "octaflip/motion.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

#include "octaflip/errors.hpp"

namespace octaflip {

DualArrangement arrangement_at(const Trajectory& traj, const Rational& t) {
    std::vector<Vec3Q> reps;
    reps.reserve(traj.size());
    for (const auto& tr : traj.tracks) {
        const auto p = tr.at(t);
        reps.push_back({p[0], p[1], Rational(1)});
    }
    return DualArrangement::from_line_reps(reps);
}

namespace {

std::string triple_name(const std::array<std::size_t, 3>& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "}";
}

/// Sign pattern (one sign per triple member, against the affine line
/// representatives, up to global negation) of the cell that collapses at the
/// event time. Decided exactly in Q(theta): by Gordan's theorem the pattern
/// (e_i, e_j, e_k) of three concurrent lines is infeasible iff the three
/// quotient functionals e_m * phi_m positively surround the origin, i.e. the
/// pairwise 2x2 determinants share one strict sign.
std::array<int, 3> collapsing_pattern(const Trajectory& traj, const MotionEvent& event) {
    auto root = std::make_shared<QuadraticRoot>(event.time);
    const Rational probe = (root->lo() + root->hi()) / 2;

    // affine line reps at theta, entries linear in theta
    std::array<std::array<QuadExt, 3>, 3> lines{{
        {QuadExt::constant(root, Rational(0)), QuadExt::constant(root, Rational(0)),
         QuadExt::constant(root, Rational(1))},
        {QuadExt::constant(root, Rational(0)), QuadExt::constant(root, Rational(0)),
         QuadExt::constant(root, Rational(1))},
        {QuadExt::constant(root, Rational(0)), QuadExt::constant(root, Rational(0)),
         QuadExt::constant(root, Rational(1))},
    }};
    for (int m = 0; m < 3; ++m) {
        const auto& tr = traj.tracks[event.triple[m]];
        const std::size_t seg = tr.segment_at(probe);
        const Rational span = tr.times[seg + 1] - tr.times[seg];
        const Rational sx = (tr.positions[seg + 1][0] - tr.positions[seg][0]) / span;
        const Rational sy = (tr.positions[seg + 1][1] - tr.positions[seg][1]) / span;
        const Rational bx = tr.positions[seg][0] - sx * tr.times[seg];
        const Rational by = tr.positions[seg][1] - sy * tr.times[seg];
        lines[m][0] = QuadExt(root, bx, sx);
        lines[m][1] = QuadExt(root, by, sy);
    }

    // common point d of the three concurrent lines
    std::array<QuadExt, 3> d{
        lines[0][1] * lines[1][2] - lines[0][2] * lines[1][1],
        lines[0][2] * lines[1][0] - lines[0][0] * lines[1][2],
        lines[0][0] * lines[1][1] - lines[0][1] * lines[1][0],
    };
    int pivot = -1;
    for (int c = 0; c < 3; ++c) {
        if (!d[c].is_zero()) { pivot = c; break; }
    }
    if (pivot < 0)
        throw NotGeneric("two points of triple " + triple_name(event.triple) +
                         " coincide at the event time");
    const int ca = (pivot + 1) % 3, cb = (pivot + 2) % 3;

    auto det2 = [&](int m1, int m2) {
        return (lines[m1][ca] * lines[m2][cb] - lines[m1][cb] * lines[m2][ca]).sign();
    };
    const int s1 = det2(0, 1), s2 = det2(1, 2), s3 = det2(2, 0);
    if (s1 == 0 || s2 == 0 || s3 == 0)
        throw InternalError("degenerate quotient functionals at an event");
    const int common = s1 * s2 * s3;
    return {1, common * s1, common * s3};
}

void refine_disjoint(std::vector<MotionEvent>& events) {
    for (std::size_t k = 1; k < events.size(); ++k) {
        auto& prev = events[k - 1].time;
        auto& next = events[k].time;
        while (prev.hi() > next.lo()) {
            if (prev.hi() - prev.lo() >= next.hi() - next.lo())
                prev.refine();
            else
                next.refine();
        }
    }
}

} // namespace

FlipScript compile_flip_script(const Configuration& c0, const Trajectory& traj) {
    traj.validate();
    if (c0.size() != traj.size())
        throw InvalidInput("configuration and trajectory sizes differ");
    const Configuration start = traj.configuration_at(Rational(0));
    for (std::size_t i = 0; i < c0.size(); ++i)
        if (!(c0[i] == start[i]))
            throw InvalidInput("configuration does not match the trajectory at t=0");
    if (!is_generic(start)) throw NotGeneric("configuration at t=0 is not generic");
    if (!is_generic(traj.configuration_at(Rational(1))))
        throw NotGeneric("configuration at t=1 is not generic");
    check_no_collisions(traj);

    auto events = order_events(detect_events(traj));
    refine_disjoint(events);

    FlipScript script;
    const std::size_t n = traj.size();
    DualArrangement prev_plus = arrangement_at(traj, Rational(0));
    for (auto& event : events) {
        const Rational t_minus = event.time.lo();
        const Rational t_plus = event.time.hi();
        DualArrangement before = arrangement_at(traj, t_minus);
        DualArrangement after = arrangement_at(traj, t_plus);

        if (before.faces() != prev_plus.faces())
            throw InternalError("face set changed between consecutive events");

        std::string sigma;
        const auto pattern = collapsing_pattern(traj, event);
        if (n == 3) {
            std::string key(3, '+');
            for (int m = 0; m < 3; ++m)
                key[event.triple[m]] = pattern[m] > 0 ? '+' : '-';
            sigma = signvec::normalize(std::move(key));
            if (before.faces() != after.faces())
                throw ObstructedTriangle("triple " + triple_name(event.triple) +
                                         ": unexpected face change for n=3");
        } else {
            std::vector<std::string> removed, added;
            std::set_difference(before.faces().begin(), before.faces().end(),
                                after.faces().begin(), after.faces().end(),
                                std::back_inserter(removed));
            std::set_difference(after.faces().begin(), after.faces().end(),
                                before.faces().begin(), before.faces().end(),
                                std::back_inserter(added));
            if (removed.size() != 1 || added.size() != 1 ||
                added[0] != signvec::flip_three(removed[0], event.triple))
                throw ObstructedTriangle(
                    "event at triple " + triple_name(event.triple) +
                    " does not change the face set by a single triangle inversion");
            sigma = removed[0];
            // cross-check against the exact Q(theta) identification
            std::array<int, 3> got;
            for (int m = 0; m < 3; ++m)
                got[m] = sigma[event.triple[m]] == '+' ? 1 : -1;
            const bool same = got == pattern;
            const bool negated = got[0] == -pattern[0] && got[1] == -pattern[1] &&
                                 got[2] == -pattern[2];
            if (!same && !negated)
                throw InternalError("symmetric-difference and algebraic collapse "
                                    "identification disagree");
        }

        const auto site = before.site_at(sigma);
        if (!site || site->triple != event.triple)
            throw ObstructedTriangle("collapsing face of triple " +
                                     triple_name(event.triple) +
                                     " is not a clean flip site at t=" +
                                     format_rational(t_minus));

        FlipRecord rec;
        rec.triple = event.triple;
        rec.sigma = sigma;
        rec.sigma_canonical = before.to_canonical_key(sigma);
        rec.t_minus = t_minus;
        rec.t_plus = t_plus;
        script.entries.push_back(std::move(rec));
        prev_plus = std::move(after);
    }

    if (arrangement_at(traj, Rational(1)).faces() != prev_plus.faces())
        throw InternalError("face set changed after the last event");
    return script;
}

// ---------------------------------------------------------------------------
// Braid words

BraidWord parse_braid_word(const std::string& text) {
    BraidWord word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 's')
            throw InvalidInput("bad braid letter '" + tok + "'");
        std::size_t i = 1;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == 1) throw InvalidInput("bad braid letter '" + tok + "'");
        const int index = std::stoi(tok.substr(1, i - 1));
        if (index < 1) throw InvalidInput("braid letter index must be >= 1");
        bool inverse = false;
        if (i != tok.size()) {
            if (tok.substr(i) != "^-1")
                throw InvalidInput("bad braid letter suffix in '" + tok + "'");
            inverse = true;
        }
        word.letters.push_back(inverse ? -index : index);
    }
    return word;
}

namespace {

/// Rational point of the unit circle at parameter u = tan(theta/2); u may be
/// "infinity" (j == k) giving exactly (-1, 0).
std::array<Rational, 2> circle_point(std::size_t j, std::size_t k) {
    if (j == k) return {Rational(-1), Rational(0)};
    const Rational u(j, k - j);
    const Rational u2 = u * u;
    return {(1 - u2) / (1 + u2), 2 * u / (1 + u2)};
}

} // namespace

Trajectory braid_word_to_trajectory(const BraidWord& word,
                                    const std::vector<std::array<Rational, 2>>& base,
                                    std::size_t arc_segments) {
    const std::size_t n = base.size();
    if (n == 0) throw InvalidInput("empty base configuration");
    if (arc_segments < 2) throw InvalidInput("arc_segments must be at least 2");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (base[a][0] == base[b][0])
                throw NotGeneric("base points must have distinct x-coordinates");
    {
        Configuration c;
        for (const auto& p : base) c.push_back(ProjPoint::from_affine(p[0], p[1]));
        if (!is_generic(c)) throw NotGeneric("base configuration is not generic");
    }

    const std::size_t W = word.letters.size();
    std::vector<std::vector<Rational>> times(n, std::vector<Rational>{Rational(0)});
    std::vector<std::vector<std::array<Rational, 2>>> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[p].push_back(base[p]);
    std::vector<std::array<Rational, 2>> current = base;

    for (std::size_t L = 0; L < W; ++L) {
        const int letter = word.letters[L];
        const std::size_t idx = static_cast<std::size_t>(letter > 0 ? letter : -letter);
        if (idx >= n)
            throw InvalidInput("braid letter s" + std::to_string(idx) +
                               " needs at least " + std::to_string(idx + 1) + " strands");

        // left-to-right order of the current configuration
        std::vector<std::size_t> order(n);
        for (std::size_t p = 0; p < n; ++p) order[p] = p;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return current[a][0] < current[b][0];
        });
        for (std::size_t p = 1; p < n; ++p)
            if (current[order[p - 1]][0] == current[order[p]][0])
                throw NotGeneric("coinciding x-coordinates at a splice point");

        const std::size_t a = order[idx - 1], b = order[idx];
        const std::array<Rational, 2> A = current[a], B = current[b];
        const std::array<Rational, 2> c{(A[0] + B[0]) / 2, (A[1] + B[1]) / 2};
        const std::array<Rational, 2> v{B[0] - c[0], B[1] - c[1]};
        const int spin = letter > 0 ? 1 : -1; // ccw for generators

        const Rational w0 = Rational(L, W);
        auto append = [&](std::size_t point, const Rational& t,
                          std::array<Rational, 2> p) {
            if (times[point].back() == t) return; // window boundary already present
            times[point].push_back(t);
            pos[point].push_back(std::move(p));
        };
        for (std::size_t j = 0; j <= arc_segments; ++j) {
            const Rational t = w0 + Rational(j, arc_segments * W);
            const auto cp = circle_point(j, arc_segments);
            const Rational cosv = cp[0], sinv = spin * cp[1];
            const std::array<Rational, 2> rot{cosv * v[0] - sinv * v[1],
                                              sinv * v[0] + cosv * v[1]};
            append(b, t, {c[0] + rot[0], c[1] + rot[1]});
            append(a, t, {c[0] - rot[0], c[1] - rot[1]});
        }
        std::swap(current[a], current[b]);

        Configuration splice;
        for (const auto& p : current) splice.push_back(ProjPoint::from_affine(p[0], p[1]));
        if (!is_generic(splice))
            throw NotGeneric("non-generic configuration at splice point t=" +
                             format_rational(Rational(L + 1, W)));
    }

    Trajectory traj;
    traj.tracks.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        if (times[p].back() != 1) {
            times[p].push_back(Rational(1));
            pos[p].push_back(pos[p].back());
        }
        traj.tracks[p].times = std::move(times[p]);
        traj.tracks[p].positions = std::move(pos[p]);
    }
    traj.validate();
    return traj;
}

Trajectory time_reversed(const Trajectory& traj) {
    Trajectory out;
    out.tracks.reserve(traj.size());
    for (const auto& tr : traj.tracks) {
        PointTrack r;
        for (std::size_t i = tr.times.size(); i-- > 0;) {
            r.times.push_back(Rational(1) - tr.times[i]);
            r.positions.push_back(tr.positions[i]);
        }
        out.tracks.push_back(std::move(r));
    }
    return out;
}

} // namespace octaflip
