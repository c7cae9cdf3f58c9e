#include "octaflip/semifield.hpp"

#include <algorithm>
#include <cctype>

#include "octaflip/errors.hpp"

namespace octaflip {

std::string backend_name(Backend b) {
    return b == Backend::Classical ? "classical" : "tropical";
}

Backend backend_from_name(const std::string& name) {
    if (name == "classical") return Backend::Classical;
    if (name == "tropical") return Backend::Tropical;
    throw InvalidInput("unknown backend '" + name + "'");
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(LaurentPolynomial num, LaurentPolynomial den, bool try_divide)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.gens() != den_.gens()) throw BackendMismatch("generator count mismatch");
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::constant(num_.gens(), Rational(1));
        return;
    }
    if (try_divide && !den_.is_one()) {
        if (auto q = laurent_exact_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = LaurentPolynomial::constant(num_.gens(), Rational(1));
        }
    }
    // Monomial content of den is a unit; move it into num.
    ExponentVector mc = den_.monomial_content();
    if (std::any_of(mc.begin(), mc.end(), [](auto v) { return v != 0; })) {
        ExponentVector neg(mc.size());
        for (std::size_t i = 0; i < mc.size(); ++i) neg[i] = -mc[i];
        den_ = den_.shifted(neg, Rational(1));
        num_ = num_.shifted(neg, Rational(1));
    }
    const Rational lc = den_.leading_term().second;
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        den_ = den_.scaled(inv);
        num_ = num_.scaled(inv);
    }
}

FieldElement FieldElement::generator(std::size_t gens, std::size_t index) {
    return FieldElement(LaurentPolynomial::generator(gens, index),
                        LaurentPolynomial::constant(gens, Rational(1)));
}

FieldElement FieldElement::constant(std::size_t gens, const Rational& c) {
    return FieldElement(LaurentPolynomial::constant(gens, c),
                        LaurentPolynomial::constant(gens, Rational(1)));
}

// ---------------------------------------------------------------------------
// SemifieldElement

SemifieldElement SemifieldElement::generator(Backend b, std::size_t gens, std::size_t index) {
    if (b == Backend::Classical)
        return SemifieldElement(FieldElement::generator(gens, index));
    return SemifieldElement(TropicalElement::generator(gens, index));
}

SemifieldElement SemifieldElement::unit(Backend b, std::size_t gens) {
    if (b == Backend::Classical)
        return SemifieldElement(FieldElement::constant(gens, Rational(1)));
    return SemifieldElement(TropicalElement::unit(gens));
}

SemifieldElement SemifieldElement::constant(std::size_t gens, const Rational& c) {
    return SemifieldElement(FieldElement::constant(gens, c));
}

std::size_t SemifieldElement::gens() const {
    if (auto* f = std::get_if<FieldElement>(&value_)) return f->gens();
    return std::get<TropicalElement>(value_).gens();
}

const FieldElement& SemifieldElement::classical() const {
    if (auto* f = std::get_if<FieldElement>(&value_)) return *f;
    throw BackendMismatch("expected a classical element");
}

const TropicalElement& SemifieldElement::tropical() const {
    if (auto* t = std::get_if<TropicalElement>(&value_)) return *t;
    throw BackendMismatch("expected a tropical element");
}

namespace {

void check_compatible(const SemifieldElement& x, const SemifieldElement& y) {
    if (x.backend() != y.backend())
        throw BackendMismatch("mixed classical and tropical operands");
    if (x.gens() != y.gens())
        throw BackendMismatch("generator count mismatch");
}

} // namespace

SemifieldElement sf_otimes(const SemifieldElement& x, const SemifieldElement& y) {
    check_compatible(x, y);
    if (x.backend() == Backend::Classical) {
        const auto& a = x.classical();
        const auto& b = y.classical();
        return SemifieldElement(FieldElement(a.num() * b.num(), a.den() * b.den()));
    }
    return SemifieldElement(trop_mul(x.tropical(), y.tropical()));
}

SemifieldElement sf_oplus(const SemifieldElement& x, const SemifieldElement& y) {
    check_compatible(x, y);
    if (x.backend() == Backend::Classical) {
        const auto& a = x.classical();
        const auto& b = y.classical();
        return SemifieldElement(FieldElement(a.num() * b.den() + b.num() * a.den(),
                                             a.den() * b.den()));
    }
    return SemifieldElement(trop_add(x.tropical(), y.tropical()));
}

SemifieldElement sf_oslash(const SemifieldElement& x, const SemifieldElement& y) {
    check_compatible(x, y);
    if (x.backend() == Backend::Classical) {
        const auto& a = x.classical();
        const auto& b = y.classical();
        if (b.is_zero()) throw DivisionByZero("semifield division by zero");
        return SemifieldElement(FieldElement(a.num() * b.den(), a.den() * b.num(),
                                             /*try_divide=*/true));
    }
    return SemifieldElement(trop_div(x.tropical(), y.tropical()));
}

bool sf_equals(const SemifieldElement& x, const SemifieldElement& y) {
    check_compatible(x, y);
    if (x.backend() == Backend::Classical) {
        const auto& a = x.classical();
        const auto& b = y.classical();
        return a.num() * b.den() == b.num() * a.den();
    }
    return trop_equal(x.tropical(), y.tropical());
}

Rational sf_evaluate(const SemifieldElement& x, std::span<const Rational> point) {
    if (x.backend() == Backend::Tropical) return trop_evaluate(x.tropical(), point);
    const auto& f = x.classical();
    const Rational den = f.den().evaluate(point);
    if (den == 0) throw DivisionByZero("denominator vanishes at evaluation point");
    return f.num().evaluate(point) / den;
}

// ---------------------------------------------------------------------------
// SymbolTable

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw InvalidInput("bad generator name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw InvalidInput("bad generator name '" + n + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw InvalidInput("duplicate generator name '" + names_[i] + "'");
}

SymbolTable SymbolTable::numbered(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back("g" + std::to_string(i));
    return SymbolTable(std::move(names));
}

std::size_t SymbolTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string format_coefficient(const Rational& c) {
    // magnitude only; callers render the sign
    Rational a = c < 0 ? Rational(-c) : c;
    if (denominator(a) == 1) return numerator(a).str();
    return "(" + numerator(a).str() + "/" + denominator(a).str() + ")";
}

std::string format_monomial(const ExponentVector& e, const SymbolTable& symbols) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += symbols.name(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string format_poly(const LaurentPolynomial& p, const SymbolTable& symbols) {
    if (p.is_zero()) return "0";
    std::string out;
    // graded-lex descending
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string mono = format_monomial(e, symbols);
        const Rational mag = neg ? Rational(-c) : c;
        if (mono.empty()) {
            out += format_coefficient(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += format_coefficient(mag) + "*" + mono;
        }
    }
    return out;
}

std::string format_tropset(const TropicalTermSet& s) {
    std::string out = "trop{";
    bool first = true;
    // graded-lex descending
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (!first) out += ",";
        first = false;
        out += "[";
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (i) out += ",";
            out += std::to_string((*it)[i]);
        }
        out += "]";
    }
    out += "}";
    return out;
}

} // namespace

std::string serialize(const SemifieldElement& x, const SymbolTable& symbols) {
    if (symbols.size() != x.gens())
        throw BackendMismatch("symbol table size does not match generator count");
    if (x.backend() == Backend::Tropical) {
        const auto& t = x.tropical();
        return format_tropset(t.num()) + "/" + format_tropset(t.den());
    }
    const auto& f = x.classical();
    std::string num = format_poly(f.num(), symbols);
    if (f.is_polynomial()) return num;
    return num + " / " + format_poly(f.den(), symbols);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
public:
    Cursor(const std::string& text, std::size_t base) : text_(text), pos_(base) {}

    std::size_t pos() const { return pos_; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos_);
    }
    bool consume_word(const char* w) {
        skip_ws();
        std::size_t len = std::string_view(w).size();
        if (text_.compare(pos_, len, w) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) throw ParseError("expected integer", start);
        return Int(text_.substr(start, pos_ - start));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            throw ParseError("expected identifier", start);
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    std::size_t pos_;
};

// factors := name ['^' int] ('*' name ['^' int])*
// The cursor is positioned at the first factor.
void parse_factors(Cursor& cur, const SymbolTable& symbols, ExponentVector& expo) {
    while (true) {
        std::size_t at = cur.pos();
        cur.skip_ws();
        at = cur.pos();
        std::string name = cur.parse_ident();
        std::size_t idx = symbols.index_of(name);
        if (idx == SymbolTable::npos)
            throw ParseError("unknown generator '" + name + "'", at);
        Int e = 1;
        if (cur.consume('^')) e = cur.parse_int();
        expo[idx] += static_cast<std::int64_t>(e);
        if (!cur.consume('*')) break;
    }
}

LaurentPolynomial parse_poly(const std::string& text, std::size_t base, std::size_t len,
                             const SymbolTable& symbols) {
    const std::string piece = text.substr(0, base + len); // cursor bounded by len
    Cursor cur(piece, base);
    LaurentPolynomial poly(symbols.size());
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (cur.consume('-')) sign = -1;
        } else {
            if (cur.consume('+')) {
                sign = 1;
            } else if (cur.consume('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        first = false;
        cur.skip_ws();
        if (cur.at_end()) throw ParseError("expected term", cur.pos());

        Rational coef(1);
        bool have_coef = false;
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = Rational(cur.parse_int());
            have_coef = true;
        } else if (c == '(') {
            cur.expect('(', "coefficient");
            Int num = cur.parse_int();
            cur.expect('/', "rational coefficient");
            Int den = cur.parse_int();
            if (den == 0) throw ParseError("zero denominator in coefficient", cur.pos());
            cur.expect(')', "coefficient");
            coef = Rational(num, den);
            have_coef = true;
        }

        ExponentVector expo(symbols.size(), 0);
        bool have_factors = false;
        if (have_coef) {
            if (cur.consume('*')) {
                parse_factors(cur, symbols, expo);
                have_factors = true;
            }
        } else {
            parse_factors(cur, symbols, expo);
            have_factors = true;
        }
        (void)have_factors;
        poly.add_term(expo, Rational(sign) * coef);
        if (cur.at_end()) break;
    }
    if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());
    return poly;
}

TropicalTermSet parse_tropset(Cursor& cur, std::size_t gens) {
    cur.skip_ws();
    std::size_t at = cur.pos();
    if (!cur.consume_word("trop"))
        throw ParseError("expected 'trop'", at);
    cur.expect('{', "tropical term set");
    std::vector<ExponentVector> terms;
    while (true) {
        cur.expect('[', "exponent vector");
        ExponentVector e;
        if (!cur.consume(']')) {
            while (true) {
                e.push_back(static_cast<std::int64_t>(cur.parse_int()));
                if (!cur.consume(',')) break;
            }
            cur.expect(']', "exponent vector");
        }
        if (e.size() != gens)
            throw ParseError("exponent vector of wrong length", cur.pos());
        terms.push_back(std::move(e));
        if (!cur.consume(',')) break;
    }
    cur.expect('}', "tropical term set");
    return TropicalTermSet::from_terms(gens, std::move(terms));
}

} // namespace

SemifieldElement parse(const std::string& text, Backend backend, const SymbolTable& symbols) {
    if (backend == Backend::Tropical) {
        Cursor cur(text, 0);
        TropicalTermSet num = parse_tropset(cur, symbols.size());
        cur.expect('/', "tropical element");
        TropicalTermSet den = parse_tropset(cur, symbols.size());
        if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());
        return SemifieldElement(TropicalElement(std::move(num), std::move(den)));
    }

    // Split at the first '/' that sits at parenthesis depth zero; rational
    // coefficients are always parenthesized, so no collision arises.
    std::size_t depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') { if (depth) --depth; }
        else if (text[i] == '/' && depth == 0) { split = i; break; }
    }
    if (split == std::string::npos) {
        LaurentPolynomial num = parse_poly(text, 0, text.size(), symbols);
        return SemifieldElement(FieldElement(
            std::move(num), LaurentPolynomial::constant(symbols.size(), Rational(1))));
    }
    LaurentPolynomial num = parse_poly(text, 0, split, symbols);
    std::string den_text = text; // keep offsets stable: parse the tail in place
    LaurentPolynomial den = parse_poly(den_text, split + 1, text.size() - split - 1, symbols);
    if (den.is_zero()) throw ParseError("zero denominator", split + 1);
    return SemifieldElement(FieldElement(std::move(num), std::move(den)));
}

} // namespace octaflip
