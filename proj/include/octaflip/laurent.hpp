#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "octaflip/rational.hpp"

namespace octaflip {

/// Integer exponent tuple of a Laurent monomial; entries may be negative.
/// The length equals the session's generator count.
using ExponentVector = std::vector<std::int64_t>;

/// Graded-lexicographic comparison: first by total degree (sum of entries),
/// ties broken lexicographically left to right. This is the single canonical
/// term order used everywhere, and it is a group order: e < f implies
/// e + h < f + h, which the exact-division routine depends on.
int graded_lex_cmp(const ExponentVector& a, const ExponentVector& b);

struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return graded_lex_cmp(a, b) < 0;
    }
};

inline ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExponentVector exponent_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// Sparse multivariate Laurent polynomial over the rationals. Terms are kept
/// in graded-lex order; no stored coefficient is zero.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

    explicit LaurentPolynomial(std::size_t gens = 0) : gens_(gens) {}

    static LaurentPolynomial zero(std::size_t gens) { return LaurentPolynomial(gens); }
    static LaurentPolynomial constant(std::size_t gens, const Rational& c);
    static LaurentPolynomial generator(std::size_t gens, std::size_t index);
    static LaurentPolynomial monomial(ExponentVector e, const Rational& c);

    std::size_t gens() const { return gens_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// True when the polynomial is a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Graded-lex-maximal term; polynomial must be nonzero.
    const std::pair<const ExponentVector, Rational>& leading_term() const;

    void add_term(const ExponentVector& e, const Rational& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const = default;

    LaurentPolynomial scaled(const Rational& c) const;
    /// Multiplies by the Laurent monomial c * x^e (a unit when c != 0).
    LaurentPolynomial shifted(const ExponentVector& e, const Rational& c) const;

    /// Componentwise minimum of the exponent vectors over all terms;
    /// the exponent of the greatest common monomial factor.
    ExponentVector monomial_content() const;

    /// Exact value at a rational point. Throws DivisionByZero when a negative
    /// exponent meets a zero coordinate.
    Rational evaluate(std::span<const Rational> point) const;

private:
    std::size_t gens_;
    TermMap terms_;
};

/// Exact division in the Laurent ring: returns R with P = Q * R when such an
/// R exists, std::nullopt otherwise. Monomial factors of Q are units and never
/// obstruct divisibility. Throws DivisionByZero when Q is zero.
std::optional<LaurentPolynomial> laurent_exact_divide(const LaurentPolynomial& P,
                                                      const LaurentPolynomial& Q);

} // namespace octaflip
