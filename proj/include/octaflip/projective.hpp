#pragma once

#include <array>
#include <string>
#include <vector>

#include "octaflip/rational.hpp"

namespace octaflip {

using Vec3Z = std::array<Int, 3>;
using Vec3Q = std::array<Rational, 3>;

/// Primitive integer representative of a projective triple: denominators
/// cleared, divided by the gcd, first nonzero entry positive. Unique per
/// projective point/line. Throws on the zero vector.
Vec3Z canonical_triple(const Vec3Q& v);
Vec3Z canonical_triple(const Vec3Z& v);

Int dot(const Vec3Z& a, const Vec3Z& b);
Rational dot(const Vec3Q& a, const Vec3Q& b);
Rational dot(const Vec3Q& a, const Vec3Z& b);
Vec3Z cross(const Vec3Z& a, const Vec3Z& b);
Int det3(const Vec3Z& a, const Vec3Z& b, const Vec3Z& c);

/// Point of the real projective plane, stored as its canonical key.
struct ProjPoint {
    Vec3Z key;

    static ProjPoint from_homogeneous(const Vec3Q& coords);
    static ProjPoint from_affine(const Rational& x, const Rational& y);
    bool operator==(const ProjPoint& o) const = default;
    auto operator<=>(const ProjPoint& o) const = default;
    std::string str() const;
};

/// Line of the real projective plane, canonicalized the same way.
struct ProjLine {
    Vec3Z key;

    static ProjLine from_homogeneous(const Vec3Q& coeffs);
    bool operator==(const ProjLine& o) const = default;
    auto operator<=>(const ProjLine& o) const = default;
    std::string str() const;
};

/// Standard bilinear duality (a:b:c) <-> [a:b:c]; involutive.
ProjLine dualize(const ProjPoint& p);
ProjPoint dualize(const ProjLine& l);

/// Sign of the 3x3 determinant of canonical coordinates. Zero iff collinear;
/// dually, zero iff the three dual lines are concurrent.
int collinear_sign(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

using Configuration = std::vector<ProjPoint>;

/// Pairwise distinct and no three collinear.
bool is_generic(const Configuration& c);

} // namespace octaflip
