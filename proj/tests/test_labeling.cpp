#include <doctest.h>

#include "octaflip/audit.hpp"
#include "octaflip/labeling.hpp"

using namespace octaflip;

namespace {

Configuration affine(std::initializer_list<std::pair<int, int>> pts) {
    Configuration c;
    for (const auto& [x, y] : pts) c.push_back(ProjPoint::from_affine(Rational(x), Rational(y)));
    return c;
}

bool labelings_equal(const Labeling& a, const Labeling& b) {
    if (a.values.size() != b.values.size()) return false;
    for (const auto& [key, value] : a.values) {
        const auto it = b.values.find(key);
        if (it == b.values.end() || !sf_equals(value, it->second)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("initial labeling convention") {
    const auto a3 = DualArrangement::from_configuration(affine({{0, 0}, {3, 1}, {1, 4}}));
    const Labeling l3 = initial_labeling(a3, Backend::Classical);
    CHECK(l3.gens == 4);
    CHECK(l3.values.size() == 4);

    const auto a4 =
        DualArrangement::from_configuration(affine({{0, 0}, {3, 1}, {1, 4}, {-2, 2}}));
    CHECK(initial_labeling(a4, Backend::Classical).gens == 7);

    // generator r sits on the face with the r-th canonical key in lex order
    const auto faces = generator_faces(a4);
    const Labeling l4 = initial_labeling(a4, Backend::Tropical);
    const SymbolTable symbols = SymbolTable::numbered(7);
    for (std::size_t r = 0; r < faces.size(); ++r) {
        const auto& label = l4.values.at(a4.from_canonical_key(faces[r]));
        CHECK(label.tropical().num().terms()[0][r] == 1); // the unit vector e_r
        CHECK(label.tropical().den().terms()[0] == ExponentVector(7, 0));
    }
}

TEST_CASE("flip formula forced values") {
    const auto a = DualArrangement::from_configuration(affine({{0, 0}, {3, 1}, {1, 4}}));
    const auto sites = a.flip_sites();
    REQUIRE(!sites.empty());
    const FlipSite& site = sites.front();
    const std::size_t gens = 4;

    // all involved labels = multiplicative unit -> replacement is 3 classically
    Labeling ones;
    ones.backend = Backend::Classical;
    ones.gens = gens;
    for (const auto& f : a.faces())
        ones.values.emplace(f, SemifieldElement::unit(Backend::Classical, gens));
    const Labeling after = flip_label(ones, site);
    CHECK(sf_equals(after.values.at(site.tau),
                    SemifieldElement::constant(gens, Rational(3))));

    // tropical neutral labels -> replacement is the 0 function
    Labeling zeros;
    zeros.backend = Backend::Tropical;
    zeros.gens = gens;
    for (const auto& f : a.faces())
        zeros.values.emplace(f, SemifieldElement::unit(Backend::Tropical, gens));
    const Labeling tafter = flip_label(zeros, site);
    CHECK(sf_equals(tafter.values.at(site.tau),
                    SemifieldElement::unit(Backend::Tropical, gens)));
}

TEST_CASE("n=3 flip on fresh generators gives (sum of squares)/x") {
    const auto a = DualArrangement::from_configuration(affine({{0, 0}, {3, 1}, {1, 4}}));
    const Labeling l0 = initial_labeling(a, Backend::Classical);
    const SymbolTable symbols = SymbolTable::numbered(4);

    const auto sites = a.flip_sites();
    REQUIRE(sites.size() == 4);
    for (const auto& site : sites) {
        const Labeling l1 = flip_label(l0, site);
        // E_m == W_m at n=3, so the replacement is (e0^2 + e1^2 + e2^2) / x
        SemifieldElement expected = SemifieldElement::constant(4, Rational(0));
        for (int m = 0; m < 3; ++m) {
            const auto& e = l0.values.at(site.edge_neighbors[m]);
            expected = sf_oplus(expected, sf_otimes(e, e));
        }
        expected = sf_oslash(expected, l0.values.at(site.sigma));
        CHECK(sf_equals(l1.values.at(site.tau), expected));
        CHECK(l1.values.at(site.tau).classical().is_polynomial()); // Laurent
    }
}

TEST_CASE("missing roles are reported") {
    const auto a = DualArrangement::from_configuration(affine({{0, 0}, {3, 1}, {1, 4}}));
    const auto site = a.flip_sites().front();
    Labeling partial = initial_labeling(a, Backend::Classical);
    partial.values.erase(site.edge_neighbors[1]);
    CHECK_THROWS_AS(flip_label(partial, site), MissingRole);
}

TEST_CASE("propagation over empty and inverse-pair scripts") {
    const auto c = affine({{0, 0}, {3, 1}, {1, 4}, {-2, 2}});
    const auto a = DualArrangement::from_configuration(c);
    const Labeling l0 = initial_labeling(a, Backend::Classical);

    CHECK(labelings_equal(propagate(l0, FlipScript{}, a), l0));

    const auto sites = a.flip_sites();
    REQUIRE(!sites.empty());
    const FlipSite& s = sites.front();
    FlipScript pair;
    pair.entries.push_back({s.triple, s.sigma, "", Rational(0), Rational(0)});
    pair.entries.push_back({s.triple, s.tau, "", Rational(0), Rational(0)});
    CHECK(labelings_equal(propagate(l0, pair, a), l0));

    FlipScript bogus;
    bogus.entries.push_back({s.triple, s.tau, "", Rational(0), Rational(0)});
    CHECK_THROWS_AS(propagate(l0, bogus, a), SiteNotPresent);
}

TEST_CASE("involution and commutation suites") {
    for (const Backend backend : {Backend::Classical, Backend::Tropical}) {
        const SuiteReport inv = involution_suite(backend, 60, 42);
        CHECK(inv.cases == 60);
        CHECK(inv.failures == 0);
        const SuiteReport comm = commutation_suite(backend, 12, 43);
        CHECK(comm.cases == 12);
        CHECK(comm.failures == 0);
    }
}

TEST_CASE("numeric propagation matches the symbolic fold") {
    Rng rng(90210);
    const GeometricScript gs = random_geometric_script(rng, 4, 6);
    const DualArrangement a0 = arrangement_at(gs.trajectory, Rational(0));
    const Labeling l0 = initial_labeling(a0, Backend::Tropical);
    const Labeling lf = propagate(l0, gs.script, a0);

    const auto faces = generator_faces(a0);
    std::vector<Rational> point;
    for (std::size_t g = 0; g < faces.size(); ++g) point.push_back(rng.rational(-5, 5, 2));
    std::map<std::string, Rational> numeric;
    for (std::size_t r = 0; r < faces.size(); ++r)
        numeric.emplace(a0.from_canonical_key(faces[r]), point[r]);
    REQUIRE(numeric_propagate(numeric, Backend::Tropical, gs.script, a0));
    for (const auto& [key, value] : lf.values)
        CHECK(sf_evaluate(value, point) == numeric.at(key));
}
