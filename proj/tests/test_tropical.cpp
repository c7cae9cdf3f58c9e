#include <doctest.h>

#include "octaflip/audit.hpp"
#include "octaflip/tropical.hpp"

using namespace octaflip;

namespace {

TropicalTermSet set2(std::vector<ExponentVector> terms) {
    return TropicalTermSet::from_terms(2, std::move(terms));
}

std::vector<Rational> random_point(Rng& rng, std::size_t g) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < g; ++i) p.push_back(rng.rational(-20, 20, 7));
    return p;
}

} // namespace

TEST_CASE("canonicalize keeps extreme points only") {
    // singleton
    CHECK(set2({{0, 0}}).terms() == std::vector<ExponentVector>{{0, 0}});
    // (1,0) = midpoint of (0,0) and (2,0): max(0, 2s) >= s pointwise
    CHECK(set2({{0, 0}, {1, 0}, {2, 0}}).terms() ==
          std::vector<ExponentVector>{{0, 0}, {2, 0}});
    // no vector in the hull of the other two
    CHECK(set2({{0, 0}, {1, 0}, {0, 1}}).size() == 3);
    // duplicates collapse
    CHECK(set2({{1, 0}, {1, 0}}).size() == 1);
}

TEST_CASE("canonicalization never changes the represented function") {
    Rng rng(7);
    for (int iter = 0; iter < 120; ++iter) {
        const std::size_t g = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<ExponentVector> terms;
        const int m = static_cast<int>(rng.uniform(1, 8));
        for (int t = 0; t < m; ++t) {
            ExponentVector e(g);
            for (auto& v : e) v = rng.uniform(-5, 5);
            terms.push_back(std::move(e));
        }
        TropicalTermSet raw(g);
        // from_terms canonicalizes; build the raw set through unite of singletons
        TropicalTermSet canonical = TropicalTermSet::from_terms(g, terms);
        for (int rep = 0; rep < 100; ++rep) {
            const auto p = random_point(rng, g);
            Rational raw_max;
            bool first = true;
            for (const auto& e : terms) {
                Rational v(0);
                for (std::size_t i = 0; i < g; ++i) v += Rational(e[i]) * p[i];
                if (first || v > raw_max) raw_max = v;
                first = false;
            }
            CHECK(canonical.evaluate(p) == raw_max);
        }
    }
}

TEST_CASE("tropical element normalization") {
    // den's graded-lex-minimal vector is translated to zero
    TropicalElement e(set2({{3, 1}, {1, 3}}), set2({{1, 1}}));
    CHECK(e.den().terms() == std::vector<ExponentVector>{{0, 0}});
    CHECK(e.num().terms() == std::vector<ExponentVector>{{0, 2}, {2, 0}});
}

TEST_CASE("tropical operations") {
    const auto ga = TropicalElement::generator(2, 0);
    const auto gb = TropicalElement::generator(2, 1);
    // product is exponent addition
    const auto prod = trop_mul(ga, gb);
    CHECK(prod.num().terms() == std::vector<ExponentVector>{{1, 1}});
    // idempotent sum
    CHECK(trop_equal(trop_add(ga, ga), ga));
    // formal quotient keeps both parts
    const auto quot = trop_div(trop_add(ga, gb), ga);
    CHECK(trop_evaluate(quot, std::vector<Rational>{Rational(2), Rational(5)}) ==
          Rational(3));
}

TEST_CASE("tropical equality is function equality") {
    const auto ga = TropicalElement::generator(2, 0);
    const auto gb = TropicalElement::generator(2, 1);
    const auto sum = trop_add(ga, gb);
    CHECK_FALSE(trop_equal(sum, ga)); // differ at (0,1)
    // (max(a,b) (x) a) (/) a == max(a,b)
    CHECK(trop_equal(trop_div(trop_mul(sum, ga), ga), sum));
}
