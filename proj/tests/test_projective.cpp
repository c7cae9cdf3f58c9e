#include <doctest.h>

#include "octaflip/projective.hpp"

using namespace octaflip;

TEST_CASE("canonical triples") {
    CHECK(ProjPoint::from_homogeneous({Rational(2), Rational(4), Rational(6)}).key ==
          Vec3Z{1, 2, 3});
    CHECK(ProjPoint::from_homogeneous({Rational(-1), Rational(2), Rational(3)}).key ==
          Vec3Z{1, -2, -3});
    CHECK(ProjPoint::from_homogeneous({Rational(0), Rational(-1, 2), Rational(1)}).key ==
          Vec3Z{0, 1, -2});
    CHECK_THROWS_AS(ProjPoint::from_homogeneous({Rational(0), Rational(0), Rational(0)}),
                    InvalidInput);
}

TEST_CASE("duality is an involution") {
    const ProjPoint p{{1, 2, 3}};
    CHECK(dualize(p).key == Vec3Z{1, 2, 3});
    CHECK(dualize(dualize(p)) == p);
    CHECK(dualize(ProjPoint{{0, 0, 1}}).key == Vec3Z{0, 0, 1}); // the line z = 0
}

TEST_CASE("collinearity sign") {
    const auto p = [](int x, int y, int z) {
        return ProjPoint::from_homogeneous({Rational(x), Rational(y), Rational(z)});
    };
    CHECK(collinear_sign(p(0, 0, 1), p(1, 0, 1), p(2, 0, 1)) == 0);   // all on y = 0
    CHECK(collinear_sign(p(0, 0, 1), p(1, 0, 1), p(0, 1, 1)) != 0);
    CHECK(collinear_sign(p(1, 0, 0), p(0, 1, 0), p(1, 1, 0)) == 0);   // line at infinity
    // collinear iff the dual lines are concurrent
    const Vec3Z meet = cross(dualize(p(0, 0, 1)).key, dualize(p(1, 0, 1)).key);
    CHECK(dot(dualize(p(2, 0, 1)).key, meet) == 0);
}

TEST_CASE("genericity") {
    const auto p = [](int x, int y) { return ProjPoint::from_affine(Rational(x), Rational(y)); };
    CHECK(is_generic({p(0, 0), p(1, 0), p(0, 1)}));
    CHECK_FALSE(is_generic({p(0, 0), p(1, 0), p(1, 0)}));              // repeated point
    CHECK_FALSE(is_generic({p(0, 0), p(1, 1), p(2, 2), p(5, 1)}));     // collinear triple
    CHECK(is_generic({p(0, 0), p(1, 1), p(2, 4), p(3, 9)}));           // parabola points
}
