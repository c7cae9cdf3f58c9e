#pragma once

#include <span>
#include <vector>

#include "octaflip/laurent.hpp"

namespace octaflip {

/// A max-plus polynomial: the function x -> max over terms e of <e, x>.
/// Canonical form keeps exactly the extreme points of the convex hull of the
/// term set (the represented function is unchanged) sorted in graded-lex
/// order. Term sets are never empty.
class TropicalTermSet {
public:
    explicit TropicalTermSet(std::size_t gens = 0) : gens_(gens) {}

    static TropicalTermSet zero_term(std::size_t gens);  // the single 0 vector
    static TropicalTermSet generator(std::size_t gens, std::size_t index);
    static TropicalTermSet from_terms(std::size_t gens, std::vector<ExponentVector> terms);

    std::size_t gens() const { return gens_; }
    const std::vector<ExponentVector>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Minkowski sum; the tropical product of the two functions.
    TropicalTermSet minkowski(const TropicalTermSet& o) const;
    /// Union followed by canonicalization; the tropical sum (pointwise max).
    TropicalTermSet unite(const TropicalTermSet& o) const;
    /// Every term translated by e.
    TropicalTermSet translated(const ExponentVector& e) const;

    Rational evaluate(std::span<const Rational> point) const;

    bool operator==(const TropicalTermSet& o) const = default;

private:
    std::size_t gens_;
    std::vector<ExponentVector> terms_; // canonical: extreme points, sorted
    friend TropicalTermSet trop_canonicalize(const TropicalTermSet&);
};

/// Reduces a term set to the extreme points of its convex hull. Membership of
/// a vector in the hull of the others is decided by the exact rational LP.
TropicalTermSet trop_canonicalize(const TropicalTermSet& s);

/// A tropical rational function num(x) - den(x), both parts canonical.
/// The common additive translate is normalized by subtracting the graded-lex
/// minimal vector of den from every vector of both parts.
class TropicalElement {
public:
    explicit TropicalElement(std::size_t gens = 0)
        : num_(TropicalTermSet::zero_term(gens)), den_(TropicalTermSet::zero_term(gens)) {}
    TropicalElement(TropicalTermSet num, TropicalTermSet den);

    struct AlreadyCanonical {};
    /// Both parts are known to be hull-canonical; only the common translate
    /// normalization is applied.
    TropicalElement(AlreadyCanonical, TropicalTermSet num, TropicalTermSet den);

    static TropicalElement generator(std::size_t gens, std::size_t index);
    static TropicalElement unit(std::size_t gens) { return TropicalElement(gens); }

    std::size_t gens() const { return num_.gens(); }
    const TropicalTermSet& num() const { return num_; }
    const TropicalTermSet& den() const { return den_; }

    bool operator==(const TropicalElement& o) const = default;

private:
    TropicalTermSet num_, den_;
};

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b);
TropicalElement trop_add(const TropicalElement& a, const TropicalElement& b);
TropicalElement trop_div(const TropicalElement& a, const TropicalElement& b);
/// Pointwise equality of the represented piecewise-linear functions.
bool trop_equal(const TropicalElement& a, const TropicalElement& b);
Rational trop_evaluate(const TropicalElement& a, std::span<const Rational> point);

} // namespace octaflip
