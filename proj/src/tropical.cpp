#include "octaflip/tropical.hpp"

#include <algorithm>

#include "octaflip/convex.hpp"
#include "octaflip/errors.hpp"

namespace octaflip {

namespace {

void check_same(const TropicalTermSet& a, const TropicalTermSet& b) {
    if (a.gens() != b.gens()) throw BackendMismatch("generator count mismatch");
}

} // namespace

TropicalTermSet TropicalTermSet::zero_term(std::size_t gens) {
    TropicalTermSet s(gens);
    s.terms_.push_back(ExponentVector(gens, 0));
    return s;
}

TropicalTermSet TropicalTermSet::generator(std::size_t gens, std::size_t index) {
    if (index >= gens) throw InvalidInput("generator index out of range");
    TropicalTermSet s(gens);
    ExponentVector e(gens, 0);
    e[index] = 1;
    s.terms_.push_back(std::move(e));
    return s;
}

TropicalTermSet TropicalTermSet::from_terms(std::size_t gens,
                                            std::vector<ExponentVector> terms) {
    if (terms.empty()) throw InvalidInput("tropical term set must be nonempty");
    TropicalTermSet s(gens);
    for (auto& e : terms) {
        if (e.size() != gens) throw BackendMismatch("exponent length mismatch");
        s.terms_.push_back(std::move(e));
    }
    return trop_canonicalize(s);
}

TropicalTermSet TropicalTermSet::minkowski(const TropicalTermSet& o) const {
    check_same(*this, o);
    TropicalTermSet r(gens_);
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) r.terms_.push_back(exponent_add(a, b));
    return trop_canonicalize(r);
}

TropicalTermSet TropicalTermSet::unite(const TropicalTermSet& o) const {
    check_same(*this, o);
    TropicalTermSet r(gens_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    return trop_canonicalize(r);
}

TropicalTermSet TropicalTermSet::translated(const ExponentVector& e) const {
    TropicalTermSet r(gens_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(exponent_add(t, e));
    return r;
}

Rational TropicalTermSet::evaluate(std::span<const Rational> point) const {
    if (point.size() != gens_) throw BackendMismatch("evaluation point length mismatch");
    bool first = true;
    Rational best(0);
    for (const auto& e : terms_) {
        Rational v(0);
        for (std::size_t i = 0; i < gens_; ++i)
            if (e[i] != 0) v += Rational(e[i]) * point[i];
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

TropicalTermSet trop_canonicalize(const TropicalTermSet& s) {
    if (s.terms().empty()) throw InvalidInput("tropical term set must be nonempty");
    const std::size_t g = s.gens();
    std::vector<ExponentVector> work = s.terms();
    std::sort(work.begin(), work.end(), GradedLexLess{});
    work.erase(std::unique(work.begin(), work.end()), work.end());

    // Pre-pass: a vector that is the unique maximizer or minimizer of some
    // coordinate (or of the total degree) is certainly an extreme point; its
    // LP can be skipped. The first and last vectors are the degree extremes
    // combined with lexicographic tie-breaking, which also certifies them
    // when their degree is unique.
    std::vector<bool> certain(work.size(), false);
    if (work.size() > 2) {
        auto mark_unique_extreme = [&](auto&& keyfn) {
            std::size_t lo = 0, hi = 0;
            bool lo_unique = true, hi_unique = true;
            for (std::size_t i = 1; i < work.size(); ++i) {
                const auto k = keyfn(work[i]);
                const auto klo = keyfn(work[lo]), khi = keyfn(work[hi]);
                if (k < klo) { lo = i; lo_unique = true; }
                else if (k == klo) lo_unique = false;
                if (k > khi) { hi = i; hi_unique = true; }
                else if (k == khi) hi_unique = false;
            }
            if (lo_unique) certain[lo] = true;
            if (hi_unique) certain[hi] = true;
        };
        for (std::size_t c = 0; c < g; ++c)
            mark_unique_extreme([c](const ExponentVector& e) { return e[c]; });
        mark_unique_extreme([](const ExponentVector& e) {
            std::int64_t d = 0;
            for (auto v : e) d += v;
            return d;
        });
    }

    // Drop every vector lying in the convex hull of the remaining ones.
    // Removing a redundant vector never changes the hull, so a single sweep
    // over a shrinking set is sound.
    std::vector<ExponentVector> kept;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (certain[i]) {
            kept.push_back(work[i]);
            continue;
        }
        std::vector<ExponentVector> others = kept;
        others.insert(others.end(), work.begin() + i + 1, work.end());
        if (others.empty() || !in_convex_hull(others, work[i]))
            kept.push_back(work[i]);
    }
    TropicalTermSet r(s.gens());
    r.terms_ = std::move(kept); // already graded-lex sorted
    return r;
}

TropicalElement::TropicalElement(TropicalTermSet num, TropicalTermSet den)
    : TropicalElement(AlreadyCanonical{}, trop_canonicalize(num), trop_canonicalize(den)) {}

TropicalElement::TropicalElement(AlreadyCanonical, TropicalTermSet num, TropicalTermSet den)
    : num_(std::move(num)), den_(std::move(den)) {
    check_same(num_, den_);
    // Normalize the common additive translate: shift both parts so that the
    // graded-lex-minimal vector of den becomes the zero vector.
    const ExponentVector& m = den_.terms().front();
    bool already_zero = std::all_of(m.begin(), m.end(), [](auto v) { return v == 0; });
    if (!already_zero) {
        ExponentVector neg(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
        num_ = num_.translated(neg);
        den_ = den_.translated(neg);
    }
}

TropicalElement TropicalElement::generator(std::size_t gens, std::size_t index) {
    return TropicalElement(TropicalTermSet::generator(gens, index),
                           TropicalTermSet::zero_term(gens));
}

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b) {
    return TropicalElement(TropicalElement::AlreadyCanonical{},
                           a.num().minkowski(b.num()), a.den().minkowski(b.den()));
}

TropicalElement trop_add(const TropicalElement& a, const TropicalElement& b) {
    TropicalTermSet num = a.num().minkowski(b.den()).unite(b.num().minkowski(a.den()));
    return TropicalElement(TropicalElement::AlreadyCanonical{}, std::move(num),
                           a.den().minkowski(b.den()));
}

TropicalElement trop_div(const TropicalElement& a, const TropicalElement& b) {
    return TropicalElement(TropicalElement::AlreadyCanonical{},
                           a.num().minkowski(b.den()), a.den().minkowski(b.num()));
}

bool trop_equal(const TropicalElement& a, const TropicalElement& b) {
    if (a.gens() != b.gens()) throw BackendMismatch("generator count mismatch");
    return a.num().minkowski(b.den()) == b.num().minkowski(a.den());
}

Rational trop_evaluate(const TropicalElement& a, std::span<const Rational> point) {
    return a.num().evaluate(point) - a.den().evaluate(point);
}

} // namespace octaflip
