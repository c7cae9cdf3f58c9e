#include "octaflip/projective.hpp"

#include "octaflip/errors.hpp"

namespace octaflip {

Vec3Z canonical_triple(const Vec3Q& v) {
    Int lcm_den = 1;
    for (const auto& c : v) lcm_den = lcm(lcm_den, denominator(c));
    Vec3Z w;
    for (int i = 0; i < 3; ++i)
        w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    return canonical_triple(w);
}

Vec3Z canonical_triple(const Vec3Z& v) {
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (g == 0) throw InvalidInput("zero homogeneous triple");
    Vec3Z w{v[0] / g, v[1] / g, v[2] / g};
    for (int i = 0; i < 3; ++i) {
        if (w[i] == 0) continue;
        if (w[i] < 0)
            for (int j = 0; j < 3; ++j) w[j] = -w[j];
        break;
    }
    return w;
}

Int dot(const Vec3Z& a, const Vec3Z& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Rational dot(const Vec3Q& a, const Vec3Q& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rational dot(const Vec3Q& a, const Vec3Z& b) {
    return a[0] * Rational(b[0]) + a[1] * Rational(b[1]) + a[2] * Rational(b[2]);
}

Vec3Z cross(const Vec3Z& a, const Vec3Z& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const Vec3Z& a, const Vec3Z& b, const Vec3Z& c) { return dot(a, cross(b, c)); }

ProjPoint ProjPoint::from_homogeneous(const Vec3Q& coords) {
    return ProjPoint{canonical_triple(coords)};
}

ProjPoint ProjPoint::from_affine(const Rational& x, const Rational& y) {
    return from_homogeneous({x, y, Rational(1)});
}

std::string ProjPoint::str() const {
    return "(" + key[0].str() + ":" + key[1].str() + ":" + key[2].str() + ")";
}

ProjLine ProjLine::from_homogeneous(const Vec3Q& coeffs) {
    return ProjLine{canonical_triple(coeffs)};
}

std::string ProjLine::str() const {
    return "[" + key[0].str() + ":" + key[1].str() + ":" + key[2].str() + "]";
}

ProjLine dualize(const ProjPoint& p) { return ProjLine{p.key}; }
ProjPoint dualize(const ProjLine& l) { return ProjPoint{l.key}; }

int collinear_sign(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    return det3(p.key, q.key, r.key).sign();
}

bool is_generic(const Configuration& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j]) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k)
                if (collinear_sign(c[i], c[j], c[k]) == 0) return false;
    return true;
}

} // namespace octaflip
