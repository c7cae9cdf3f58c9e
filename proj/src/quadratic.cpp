#include "octaflip/quadratic.hpp"

#include "octaflip/errors.hpp"

namespace octaflip {

namespace {

bool rational_sqrt(const Rational& v, Rational& out) {
    if (v < 0) return false;
    const Int n = numerator(v), d = denominator(v);
    const Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}

} // namespace

std::vector<QuadraticRoot> QuadraticRoot::isolate_in(const Rational& c2, const Rational& c1,
                                                     const Rational& c0, const Rational& lo,
                                                     const Rational& hi) {
    std::vector<QuadraticRoot> out;
    if (lo >= hi) return out;
    auto eval = [&](const Rational& t) { return Rational((c2 * t + c1) * t + c0); };

    auto push_rational = [&](const Rational& r, const Rational& exclude_below,
                             const Rational& exclude_above) {
        if (!(lo < r && r < hi)) return;
        // isolating interval inside (lo, hi), clear of the other root
        Rational a = lo, b = hi;
        if (exclude_below > a) a = (exclude_below + r) / 2;
        if (exclude_above < b) b = (exclude_above + r) / 2;
        QuadraticRoot q;
        q.c2_ = c2;
        q.c1_ = c1;
        q.c0_ = c0;
        q.lo_ = (a + r) / 2;
        q.hi_ = (b + r) / 2;
        q.rational_ = r;
        out.push_back(std::move(q));
    };

    if (c2 == 0) {
        if (c1 == 0) {
            if (c0 == 0) throw IdenticallyZero("polynomial vanishes identically");
            return out;
        }
        const Rational r = -c0 / c1;
        push_rational(r, lo - 1, hi + 1);
        return out;
    }

    const Rational disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return out;
    const Rational vertex = -c1 / (2 * c2);
    if (disc == 0) {
        if (lo < vertex && vertex < hi)
            throw DegenerateEvent("double root (tangential event)");
        return out;
    }

    Rational sq;
    if (rational_sqrt(disc, sq)) {
        const Rational r1 = (-c1 - sq) / (2 * c2);
        const Rational r2 = (-c1 + sq) / (2 * c2);
        const Rational lo_r = r1 < r2 ? r1 : r2;
        const Rational hi_r = r1 < r2 ? r2 : r1;
        push_rational(lo_r, lo - 1, hi_r);
        push_rational(hi_r, lo_r, hi + 1);
        return out;
    }

    // Two simple irrational roots r1 < vertex < r2. P(vertex) has the sign
    // opposite to c2; P tends to sign(c2) at both infinities.
    const int far_sign = c2 > 0 ? 1 : -1;
    auto isolate_side = [&](bool lower) {
        Rational inner = vertex;
        Rational outer = lower ? Rational(vertex - 1) : Rational(vertex + 1);
        Rational step(1);
        while (eval(outer).sign() != far_sign) {
            step *= 2;
            outer = lower ? Rational(outer - step) : Rational(outer + step);
        }
        Rational a = lower ? outer : inner;
        Rational b = lower ? inner : outer;
        // clamp to (lo, hi)
        if (a < lo) a = lo;
        if (b > hi) b = hi;
        if (a >= b) return;
        const int sa = eval(a).sign(), sb = eval(b).sign();
        if (sa == 0 || sb == 0)
            throw InternalError("root isolation hit an endpoint root");
        if (sa == sb) return; // the root is outside (lo, hi)
        QuadraticRoot q;
        q.c2_ = c2;
        q.c1_ = c1;
        q.c0_ = c0;
        q.lo_ = a;
        q.hi_ = b;
        out.push_back(std::move(q));
    };
    isolate_side(true);
    isolate_side(false);
    return out;
}

void QuadraticRoot::refine() {
    if (rational_) {
        lo_ = (lo_ + *rational_) / 2;
        hi_ = (hi_ + *rational_) / 2;
        return;
    }
    const Rational m = (lo_ + hi_) / 2;
    const int sm = eval(m).sign();
    if (sm == 0) throw InternalError("irrational root bisection hit a rational point");
    if (sm == eval(lo_).sign())
        lo_ = m;
    else
        hi_ = m;
}

void QuadraticRoot::refine_away_from(const Rational& a, const Rational& b) {
    while (lo_ < b && a < hi_) refine();
}

int QuadraticRoot::compare(QuadraticRoot& a, QuadraticRoot& b) {
    if (a.rational_ && b.rational_) {
        if (*a.rational_ == *b.rational_) return 0;
        return *a.rational_ < *b.rational_ ? -1 : 1;
    }
    if (a.rational_) {
        const int s = b.sign_of_linear(-*a.rational_, Rational(1)); // sign(root_b - value)
        return -s;
    }
    if (b.rational_) {
        const int s = a.sign_of_linear(-*b.rational_, Rational(1));
        return s;
    }
    // Both irrational. Proportional quadratics share both roots; selection is
    // decided against the shared vertex.
    if (a.c2_ * b.c1_ == b.c2_ * a.c1_ && a.c2_ * b.c0_ == b.c2_ * a.c0_) {
        const Rational vertex = -a.c1_ / (2 * a.c2_);
        auto selects_lower = [&](QuadraticRoot& q) {
            if (q.hi_ <= vertex) return true;
            if (q.lo_ >= vertex) return false;
            // interval straddles the vertex; the sign at lo tells the side
            return q.eval(q.lo_).sign() != q.eval(vertex).sign();
        };
        const bool la = selects_lower(a), lb = selects_lower(b);
        if (la == lb) return 0;
        return la ? -1 : 1;
    }
    while (a.lo_ < b.hi_ && b.lo_ < a.hi_) {
        if (a.hi_ - a.lo_ >= b.hi_ - b.lo_)
            a.refine();
        else
            b.refine();
    }
    return a.hi_ <= b.lo_ ? -1 : 1;
}

int QuadraticRoot::sign_of_linear(const Rational& a, const Rational& b) const {
    if (b == 0) return a.sign();
    if (rational_) return Rational(a + b * *rational_).sign();
    const Rational candidate = -a / b;
    QuadraticRoot self = *this;
    while (self.lo_ < candidate && candidate < self.hi_) self.refine();
    const Rational m = (self.lo_ + self.hi_) / 2;
    return Rational(a + b * m).sign();
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    return QuadExt(root_, a_ + o.a_, b_ + o.b_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    return QuadExt(root_, a_ - o.a_, b_ - o.b_);
}

QuadExt QuadExt::operator-() const { return QuadExt(root_, -a_, -b_); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    // (a1 + b1 t)(a2 + b2 t) with t^2 = -(c1 t + c0)/c2
    Rational a = a_ * o.a_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    const Rational t2 = b_ * o.b_;
    if (t2 != 0) {
        if (root_->is_rational()) {
            const Rational v = root_->rational_value();
            a += t2 * v * v;
        } else {
            a -= t2 * root_->c0() / root_->c2();
            b -= t2 * root_->c1() / root_->c2();
        }
    }
    return QuadExt(root_, std::move(a), std::move(b));
}

bool QuadExt::is_zero() const {
    if (root_->is_rational()) return a_ + b_ * root_->rational_value() == 0;
    return a_ == 0 && b_ == 0;
}

int QuadExt::sign() const { return root_->sign_of_linear(a_, b_); }

} // namespace octaflip
