#include <doctest.h>

#include "octaflip/invariant.hpp"
#include "octaflip/scene.hpp"

using namespace octaflip;

namespace {

Trajectory constant4() {
    return Trajectory::constant({{Rational(0), Rational(0)},
                                 {Rational(3), Rational(1)},
                                 {Rational(1), Rational(4)},
                                 {Rational(-2), Rational(2)}});
}

Trajectory braid(const std::string& word, std::size_t n, std::size_t segments = 8) {
    std::vector<std::array<Rational, 2>> base;
    for (std::size_t i = 0; i < n; ++i)
        base.push_back({Rational(i), Rational(i) * Rational(i)});
    return braid_word_to_trajectory(parse_braid_word(word), base, segments);
}

} // namespace

TEST_CASE("constant trajectories give the identity invariant") {
    const InvariantResult r = compute_invariant(constant4(), Backend::Classical);
    CHECK(r.n == 4);
    CHECK(r.script_length == 0);
    CHECK(r.permutation == std::vector<std::size_t>{0, 1, 2, 3});
    const SymbolTable symbols = SymbolTable::numbered(7);
    std::size_t index = 0;
    for (const auto& [face, label] : r.labels)
        CHECK(label == symbols.name(index++));
}

TEST_CASE("a one-event loop and its mirror cancel") {
    // out-and-back: p3 dips across the line through p1 p2 and returns
    Trajectory traj;
    traj.tracks = {
        PointTrack{{Rational(0), Rational(1)},
                   {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}},
        PointTrack{{Rational(0), Rational(1)},
                   {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}}},
        PointTrack{{Rational(0), Rational(1, 2), Rational(1)},
                   {{Rational(3), Rational(1)},
                    {Rational(3), Rational(-1)},
                    {Rational(3), Rational(1)}}}};
    for (const Backend backend : {Backend::Classical, Backend::Tropical}) {
        const InvariantResult r = compute_invariant(traj, backend);
        CHECK(r.script_length == 2);
        CHECK(r.permutation == std::vector<std::size_t>{0, 1, 2});
        const InvariantResult trivial =
            compute_invariant(Trajectory::constant({{Rational(0), Rational(0)},
                                                    {Rational(1), Rational(0)},
                                                    {Rational(3), Rational(1)}}),
                              backend);
        CHECK(compare_invariants(r, trivial));
    }
}

TEST_CASE("non-closed motions are rejected") {
    Trajectory traj = constant4();
    traj.tracks[0].positions[1] = {Rational(9), Rational(9)};
    CHECK_THROWS_AS(compute_invariant(traj, Backend::Classical), NotClosed);
}

TEST_CASE("isotopy invariance across realizations of the same braid") {
    const InvariantResult coarse =
        compute_invariant(braid("s1 s2", 4, 8), Backend::Classical);
    const InvariantResult fine =
        compute_invariant(braid("s1 s2", 4, 5), Backend::Classical);
    CHECK(coarse.permutation == fine.permutation);
    CHECK(compare_invariants(coarse, fine));

    // and a genuinely different braid disagrees
    const InvariantResult other =
        compute_invariant(braid("s2 s1", 4, 8), Backend::Classical);
    const bool same_perm = other.permutation == coarse.permutation;
    if (same_perm) CHECK_FALSE(compare_invariants(coarse, other));
}

TEST_CASE("comparison semantics") {
    const InvariantResult r = compute_invariant(braid("s1 s1", 3, 8), Backend::Classical);
    CHECK(compare_invariants(r, r));

    // labels that differ by an unreduced common factor still compare equal
    InvariantResult unreduced = r;
    const SymbolTable symbols = SymbolTable::numbered(4);
    const LaurentPolynomial common =
        LaurentPolynomial::generator(4, 0) + LaurentPolynomial::generator(4, 1);
    bool changed_some = false;
    for (auto& [face, label] : unreduced.labels) {
        const FieldElement f = parse(label, Backend::Classical, symbols).classical();
        const SemifieldElement padded(FieldElement(f.num() * common, f.den() * common));
        const std::string text = serialize(padded, symbols);
        changed_some = changed_some || text != label;
        label = text;
    }
    CHECK(changed_some);
    CHECK(compare_invariants(r, unreduced));

    InvariantResult differing = r;
    differing.labels.begin()->second = "g1";
    CHECK_FALSE(compare_invariants(r, differing));

    InvariantResult tropical = r;
    tropical.backend = Backend::Tropical;
    CHECK_THROWS_AS(compare_invariants(r, tropical), InvalidInput);
}

TEST_CASE("result JSON round-trips byte-identically") {
    const InvariantResult r = compute_invariant(braid("s1 s1", 4, 8), Backend::Classical);
    const std::string once = result_to_json(r);
    const InvariantResult parsed = result_from_json(once);
    CHECK(parsed == r);
    CHECK(result_to_json(parsed) == once);
}

TEST_CASE("rekeying lands on the initial face set") {
    const InvariantResult r = compute_invariant(braid("s1 s2^-1", 4, 8), Backend::Tropical);
    const Trajectory traj = braid("s1 s2^-1", 4, 8);
    const DualArrangement a0 = arrangement_at(traj, Rational(0));
    std::set<std::string> keys;
    for (const auto& [face, label] : r.labels) keys.insert(face);
    CHECK(keys == a0.canonical_faces());
}

TEST_CASE("explicit initial labels are honored") {
    Trajectory traj = Trajectory::constant(
        {{Rational(0), Rational(0)}, {Rational(3), Rational(1)}, {Rational(1), Rational(4)}});
    const DualArrangement a0 = arrangement_at(traj, Rational(0));
    std::map<std::string, std::string> labels;
    std::size_t i = 0;
    for (const auto& face : a0.canonical_faces()) labels[face] = "g" + std::to_string(i++);
    labels.begin()->second = "g0 + g1"; // a non-generator seed
    const InvariantResult r = compute_invariant(traj, Backend::Classical, labels);
    CHECK(r.labels.at(labels.begin()->first) == "g0 + g1");

    labels.erase(std::next(labels.begin()));
    CHECK_THROWS_AS(compute_invariant(traj, Backend::Classical, labels), InvalidInput);
}
