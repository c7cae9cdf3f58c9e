#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "octaflip/laurent.hpp"
#include "octaflip/tropical.hpp"

namespace octaflip {

enum class Backend { Classical, Tropical };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

/// Classical rational function num/den of Laurent polynomials. Canonical form:
///  - den is nonzero and carries no monomial factor (its monomial content is
///    folded into num, where monomials are units),
///  - den's graded-lex leading coefficient is 1,
///  - when den divides num exactly the quotient is taken and den becomes 1.
/// No multivariate gcd is attempted beyond that.
class FieldElement {
public:
    explicit FieldElement(std::size_t gens = 0)
        : num_(LaurentPolynomial::constant(gens, Rational(1))),
          den_(LaurentPolynomial::constant(gens, Rational(1))) {}
    FieldElement(LaurentPolynomial num, LaurentPolynomial den, bool try_divide = false);

    static FieldElement generator(std::size_t gens, std::size_t index);
    static FieldElement constant(std::size_t gens, const Rational& c);

    std::size_t gens() const { return num_.gens(); }
    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the element is a Laurent polynomial (denominator is 1).
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const FieldElement& o) const = default;

private:
    LaurentPolynomial num_, den_;
};

/// A label value in either semifield backend.
class SemifieldElement {
public:
    SemifieldElement() : value_(FieldElement(0)) {}
    explicit SemifieldElement(FieldElement v) : value_(std::move(v)) {}
    explicit SemifieldElement(TropicalElement v) : value_(std::move(v)) {}

    static SemifieldElement generator(Backend b, std::size_t gens, std::size_t index);
    /// Multiplicative unit: classical 1, tropical 0 function.
    static SemifieldElement unit(Backend b, std::size_t gens);
    static SemifieldElement constant(std::size_t gens, const Rational& c); // classical only

    Backend backend() const {
        return std::holds_alternative<FieldElement>(value_) ? Backend::Classical
                                                            : Backend::Tropical;
    }
    std::size_t gens() const;
    const FieldElement& classical() const;
    const TropicalElement& tropical() const;

    bool operator==(const SemifieldElement& o) const = default;

private:
    std::variant<FieldElement, TropicalElement> value_;
};

/// Semifield multiplication: classical product, tropical +.
SemifieldElement sf_otimes(const SemifieldElement& x, const SemifieldElement& y);
/// Semifield addition: classical sum, tropical max.
SemifieldElement sf_oplus(const SemifieldElement& x, const SemifieldElement& y);
/// Semifield division: classical quotient (with one exact-division
/// simplification attempt), tropical -. Throws DivisionByZero classically.
SemifieldElement sf_oslash(const SemifieldElement& x, const SemifieldElement& y);
/// Decidable equality: classical cross-multiplication, tropical hull equality.
bool sf_equals(const SemifieldElement& x, const SemifieldElement& y);
/// Exact value at a rational point (classical num/den, tropical max - max).
Rational sf_evaluate(const SemifieldElement& x, std::span<const Rational> point);

/// Generator names for one session; determines the generator count.
class SymbolTable {
public:
    SymbolTable() = default;
    explicit SymbolTable(std::vector<std::string> names);
    /// g0, g1, ... gN-1 — the naming convention used for arrangement faces.
    static SymbolTable numbered(std::size_t count);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a name, or npos when unknown.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> names_;
};

/// Canonical text form. Round-trips bit-exactly through parse().
std::string serialize(const SemifieldElement& x, const SymbolTable& symbols);
/// Parses the element grammar (see README). Throws ParseError with the byte
/// offset of the first offending character.
SemifieldElement parse(const std::string& text, Backend backend, const SymbolTable& symbols);

} // namespace octaflip
