#include <doctest.h>

#include "octaflip/audit.hpp"
#include "octaflip/motion.hpp"

using namespace octaflip;

namespace {

PointTrack static_at(int x, int y) {
    return PointTrack{{Rational(0), Rational(1)},
                      {{Rational(x), Rational(y)}, {Rational(x), Rational(y)}}};
}

Trajectory one_event_n3() {
    // p1=(0,0), p2=(1,0) static, p3 crosses their line transversally at
    // (3,0), away from both points: a single clean triangle inversion
    Trajectory traj;
    traj.tracks = {static_at(0, 0), static_at(1, 0),
                   PointTrack{{Rational(0), Rational(1)},
                              {{Rational(3), Rational(1)}, {Rational(3), Rational(-1)}}}};
    return traj;
}

Trajectory glue(const Trajectory& first, const Trajectory& second) {
    // first on [0,1/2], second on [1/2,1]; tracks must agree at the seam
    Trajectory out;
    for (std::size_t p = 0; p < first.size(); ++p) {
        PointTrack t;
        for (std::size_t i = 0; i < first.tracks[p].times.size(); ++i) {
            t.times.push_back(first.tracks[p].times[i] / 2);
            t.positions.push_back(first.tracks[p].positions[i]);
        }
        for (std::size_t i = 1; i < second.tracks[p].times.size(); ++i) {
            t.times.push_back(Rational(1, 2) + second.tracks[p].times[i] / 2);
            t.positions.push_back(second.tracks[p].positions[i]);
        }
        out.tracks.push_back(std::move(t));
    }
    return out;
}

Configuration config_of(const Trajectory& traj) {
    return traj.configuration_at(Rational(0));
}

} // namespace

TEST_CASE("one-event script at n=3") {
    const Trajectory traj = one_event_n3();
    const FlipScript script = compile_flip_script(config_of(traj), traj);
    REQUIRE(script.size() == 1);
    CHECK(script.entries[0].triple == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(script.entries[0].t_minus < Rational(1, 2));
    CHECK(script.entries[0].t_plus > Rational(1, 2));

    // the collapsing face is a triangle of the t_minus arrangement whose
    // boundary is the event triple
    const DualArrangement before = arrangement_at(traj, script.entries[0].t_minus);
    const auto site = before.site_at(script.entries[0].sigma);
    REQUIRE(site.has_value());
    CHECK(site->triple == script.entries[0].triple);

    // Independent determination of the collapsing face: at the (rational)
    // event time the dual lines are [0:0:1], [1:0:1], [3:0:1]. Of the four
    // sign patterns, exactly (+,-,+) has no solution (z>0, x+z<0, 3x+z>0
    // forces x<-1 and x>-1/3), so the cell dying at the event is "+-+".
    CHECK(script.entries[0].sigma == "+-+");
}

TEST_CASE("zero events, empty script") {
    Trajectory traj = Trajectory::constant(
        {{Rational(0), Rational(0)}, {Rational(3), Rational(1)}, {Rational(1), Rational(4)}});
    CHECK(compile_flip_script(config_of(traj), traj).size() == 0);
}

TEST_CASE("mirrored inversion restores the face set") {
    const Trajectory there = one_event_n3();
    const Trajectory back = time_reversed(there);
    const Trajectory loop = glue(there, back);
    const FlipScript script = compile_flip_script(config_of(loop), loop);
    REQUIRE(script.size() == 2);
    CHECK(script.entries[0].triple == script.entries[1].triple);
    // the second flip collapses the face the first one created
    const FlipSite first = make_flip_site(script.entries[0].triple, script.entries[0].sigma);
    CHECK(script.entries[1].sigma == first.tau);
}

TEST_CASE("one-event script at n=4 matches both identification routes") {
    // a fourth faraway point turns the n=3 instance into the symmetric
    // difference path, cross-checked internally against the algebraic one
    Trajectory traj = one_event_n3();
    traj.tracks.push_back(static_at(-7, 5));
    const FlipScript script = compile_flip_script(config_of(traj), traj);
    REQUIRE(script.size() == 1);
    CHECK(script.entries[0].triple == std::array<std::size_t, 3>{0, 1, 2});
    const DualArrangement before = arrangement_at(traj, script.entries[0].t_minus);
    const DualArrangement after = arrangement_at(traj, script.entries[0].t_plus);
    CHECK(before.faces().count(script.entries[0].sigma) == 1);
    const std::string tau =
        signvec::flip_three(script.entries[0].sigma, script.entries[0].triple);
    CHECK(after.faces().count(tau) == 1);
    CHECK(before.faces().count(tau) == 0);
}

TEST_CASE("time reversal reverses the script with sigma and tau swapped") {
    Rng rng(2718);
    int done = 0;
    while (done < 5) {
        GeometricScript gs = random_geometric_script(rng, 4, 100);
        if (gs.script.size() == 0) continue;
        const Trajectory rev = time_reversed(gs.trajectory);
        const FlipScript back = compile_flip_script(rev.configuration_at(Rational(0)), rev);
        REQUIRE(back.size() == gs.script.size());
        const std::size_t len = back.size();
        for (std::size_t i = 0; i < len; ++i) {
            const auto& fwd = gs.script.entries[len - 1 - i];
            const auto& bwd = back.entries[i];
            CHECK(bwd.triple == fwd.triple);
            CHECK(bwd.sigma == make_flip_site(fwd.triple, fwd.sigma).tau);
        }
        ++done;
    }
}

TEST_CASE("collisions are rejected") {
    // the determinant has a sign-changing root, but the event is a collision
    Trajectory traj;
    traj.tracks = {static_at(0, 0), static_at(1, 0),
                   PointTrack{{Rational(0), Rational(1)},
                              {{Rational(0), Rational(1)}, {Rational(2), Rational(-1)}}}};
    CHECK_THROWS_AS(compile_flip_script(config_of(traj), traj), NotGeneric);
}

TEST_CASE("braid word parsing") {
    const BraidWord w = parse_braid_word("s1 s2^-1 s1");
    CHECK(w.letters == std::vector<int>{1, -2, 1});
    CHECK(parse_braid_word("").letters.empty());
    CHECK_THROWS_AS(parse_braid_word("x1"), InvalidInput);
    CHECK_THROWS_AS(parse_braid_word("s"), InvalidInput);
    CHECK_THROWS_AS(parse_braid_word("s1^2"), InvalidInput);
}

TEST_CASE("braid words encode to closed generic motions") {
    const std::vector<std::array<Rational, 2>> base{
        {Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(4)}};

    // empty word: constant trajectory
    const Trajectory constant = braid_word_to_trajectory(parse_braid_word(""), base);
    CHECK(compile_flip_script(constant.configuration_at(Rational(0)), constant).size() == 0);

    // s1 on 2 points: closed loop with no triples at all
    const Trajectory two = braid_word_to_trajectory(
        parse_braid_word("s1"), {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
    CHECK(detect_events(two).empty());
    CHECK(two.configuration_at(Rational(1))[0] ==
          ProjPoint::from_affine(Rational(1), Rational(1)));

    // s1 s1^-1: consecutive mutually inverse flip pairs
    const Trajectory cancel = braid_word_to_trajectory(parse_braid_word("s1 s1^-1"), base);
    const FlipScript script =
        compile_flip_script(cancel.configuration_at(Rational(0)), cancel);
    CHECK(script.size() % 2 == 0);
    const std::size_t len = script.size();
    for (std::size_t i = 0; i < len / 2; ++i) {
        const auto& fwd = script.entries[len / 2 - 1 - i];
        const auto& bwd = script.entries[len / 2 + i];
        CHECK(bwd.triple == fwd.triple);
        CHECK(bwd.sigma == make_flip_site(fwd.triple, fwd.sigma).tau);
    }

    CHECK_THROWS_AS(braid_word_to_trajectory(parse_braid_word("s5"), base), InvalidInput);
}
