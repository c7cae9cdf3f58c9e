#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "octaflip/rational.hpp"

namespace octaflip {

/// A real root of c2 t^2 + c1 t + c0 (degree may degenerate to one), pinned by
/// an isolating rational interval lo < root < hi containing no other root.
/// Rational roots carry their exact value as well.
class QuadraticRoot {
public:
    /// All real roots in the open interval (lo, hi), each simple and sign
    /// changing. Throws DegenerateEvent on a double root inside the interval
    /// and IdenticallyZero when the polynomial vanishes identically.
    static std::vector<QuadraticRoot> isolate_in(const Rational& c2, const Rational& c1,
                                                 const Rational& c0, const Rational& lo,
                                                 const Rational& hi);

    const Rational& c2() const { return c2_; }
    const Rational& c1() const { return c1_; }
    const Rational& c0() const { return c0_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return rational_.has_value(); }
    const Rational& rational_value() const { return *rational_; }

    Rational eval(const Rational& t) const { return (c2_ * t + c1_) * t + c0_; }

    /// Halves the isolating interval (exact bisection).
    void refine();
    /// Refines until the interval is disjoint from [a, b].
    void refine_away_from(const Rational& a, const Rational& b);

    /// Exact comparison of the two real numbers. Returns 0 iff equal.
    static int compare(QuadraticRoot& a, QuadraticRoot& b);

    /// Sign of a + b*root, exact.
    int sign_of_linear(const Rational& a, const Rational& b) const;

private:
    Rational c2_, c1_, c0_;
    Rational lo_, hi_;
    std::optional<Rational> rational_;
};

/// Element a + b*theta of Q(theta) for a fixed quadratic root theta. Supports
/// the ring operations plus exact sign and zero tests; division is not needed.
class QuadExt {
public:
    QuadExt(std::shared_ptr<const QuadraticRoot> root, Rational a, Rational b)
        : root_(std::move(root)), a_(std::move(a)), b_(std::move(b)) {}
    static QuadExt constant(std::shared_ptr<const QuadraticRoot> root, Rational a) {
        return QuadExt(std::move(root), std::move(a), Rational(0));
    }
    /// The root itself as a field element.
    static QuadExt theta(std::shared_ptr<const QuadraticRoot> root) {
        return QuadExt(std::move(root), Rational(0), Rational(1));
    }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator-() const;

    bool is_zero() const;
    int sign() const;

private:
    std::shared_ptr<const QuadraticRoot> root_;
    Rational a_, b_;
};

} // namespace octaflip
