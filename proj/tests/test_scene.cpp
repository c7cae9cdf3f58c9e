#include <doctest.h>

#include "octaflip/scene.hpp"

using namespace octaflip;

TEST_CASE("scene with explicit points") {
    const Scene s = parse_scene(R"({"points": [["0","0"], ["3","1"], ["1","4"]]})");
    CHECK(s.points.size() == 3);
    CHECK(s.points[1][0] == Rational(3));
    const Trajectory t = scene_trajectory(s);
    CHECK(t.size() == 3);
    CHECK(t.tracks[0].times == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("scene with explicit trajectories") {
    const Scene s = parse_scene(R"({
        "points": [["0","0"], ["1","0"], ["3","1"]],
        "trajectories": [
            {"times": ["0","1"], "positions": [["0","0"],["0","0"]]},
            {"times": ["0","1"], "positions": [["1","0"],["1","0"]]},
            {"times": ["0","1/2","1"], "positions": [["3","1"],["3","-1"],["3","1"]]}
        ]})");
    REQUIRE(s.tracks.has_value());
    const Trajectory t = scene_trajectory(s);
    CHECK(t.tracks[2].at(Rational(1, 4))[1] == Rational(0));
}

TEST_CASE("scene validation errors") {
    CHECK_THROWS_AS(parse_scene("not json"), InvalidInput);
    CHECK_THROWS_AS(parse_scene(R"({"points": []})"), InvalidInput);
    CHECK_THROWS_AS(parse_scene(R"({"points": [["1","1/0"]]})"), InvalidInput);
    CHECK_THROWS_AS(parse_scene(R"({"points": [["1","x"]]})"), InvalidInput);
    CHECK_THROWS_AS(parse_scene(R"({})"), InvalidInput);
    CHECK_THROWS_AS(
        parse_scene(
            R"({"points": [["0","0"]], "word": "s1", "trajectories": []})"),
        InvalidInput);
    // track that does not start at its point
    CHECK_THROWS_AS(parse_scene(R"({
        "points": [["0","0"]],
        "trajectories": [{"times": ["0","1"], "positions": [["1","0"],["1","0"]]}]})"),
                    InvalidInput);
}

TEST_CASE("braid word scenes and the parabola default") {
    const Scene s = parse_scene(R"({"word": "s1 s2^-1", "arc_segments": 4})");
    CHECK(s.points.size() == 3); // highest letter is s2
    CHECK(s.points[2][1] == Rational(4));
    CHECK(s.arc_segments == 4);
    const Trajectory t = scene_trajectory(s);
    CHECK(t.size() == 3);
    CHECK(t.configuration_at(Rational(1)).size() == 3);

    const Scene wide = parse_scene(R"({"word": "s1", "n": 5})");
    CHECK(wide.points.size() == 5);
}

TEST_CASE("backend, labels and seed fields") {
    const Scene s = parse_scene(R"({
        "points": [["0","0"], ["3","1"]],
        "backend": "tropical",
        "initial_labels": {"++": "trop{[1,0]}/trop{[0,0]}", "+-": "trop{[0,1]}/trop{[0,0]}"},
        "seed": 7})");
    CHECK(s.backend == Backend::Tropical);
    REQUIRE(s.initial_labels.has_value());
    CHECK(s.initial_labels->size() == 2);
    CHECK(s.seed == 7);
    CHECK_THROWS_AS(parse_scene(R"({"points": [["0","0"]], "backend": "float"})"),
                    InvalidInput);
}
