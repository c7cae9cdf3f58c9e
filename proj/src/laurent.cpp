#include "octaflip/laurent.hpp"

#include <algorithm>

#include "octaflip/errors.hpp"

namespace octaflip {

int graded_lex_cmp(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw BackendMismatch("exponent vectors of different generator counts");
    std::int64_t da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t gens, const Rational& c) {
    LaurentPolynomial p(gens);
    if (c != 0) p.terms_.emplace(ExponentVector(gens, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::generator(std::size_t gens, std::size_t index) {
    if (index >= gens) throw InvalidInput("generator index out of range");
    LaurentPolynomial p(gens);
    ExponentVector e(gens, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector e, const Rational& c) {
    LaurentPolynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

bool LaurentPolynomial::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

const std::pair<const ExponentVector, Rational>& LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return *terms_.rbegin();
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != gens_) throw BackendMismatch("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (gens_ != o.gens_) throw BackendMismatch("generator count mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    if (gens_ != o.gens_) throw BackendMismatch("generator count mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (gens_ != o.gens_) throw BackendMismatch("generator count mismatch");
    LaurentPolynomial r(gens_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(exponent_add(ea, eb), ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(gens_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    LaurentPolynomial r(gens_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& e, const Rational& c) const {
    LaurentPolynomial r(gens_);
    if (c == 0) return r;
    for (const auto& [te, coef] : terms_) r.terms_.emplace(exponent_add(te, e), coef * c);
    return r;
}

ExponentVector LaurentPolynomial::monomial_content() const {
    if (terms_.empty()) return ExponentVector(gens_, 0);
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < gens_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != gens_) throw BackendMismatch("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < gens_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw DivisionByZero("negative exponent at zero coordinate");
                term = 0;
                continue;
            }
            Rational base = point[i];
            std::int64_t exp = e[i];
            if (exp < 0) {
                base = Rational(denominator(base), numerator(base));
                exp = -exp;
            }
            // small exponents; square-and-multiply is not worth it
            for (std::int64_t k = 0; k < exp; ++k) term *= base;
        }
        total += term;
    }
    return total;
}

std::optional<LaurentPolynomial> laurent_exact_divide(const LaurentPolynomial& P,
                                                      const LaurentPolynomial& Q) {
    if (Q.is_zero()) throw DivisionByZero("division by zero polynomial");
    if (P.gens() != Q.gens()) throw BackendMismatch("generator count mismatch");
    const std::size_t g = P.gens();
    if (P.is_zero()) return LaurentPolynomial::zero(g);

    // Strip the monomial content of both sides. Divisibility in the Laurent
    // ring then reduces to ordinary divisibility of the content-free parts,
    // whose exponents are componentwise >= 0.
    const ExponentVector pc = P.monomial_content();
    const ExponentVector qc = Q.monomial_content();
    ExponentVector neg_pc(g), neg_qc(g);
    for (std::size_t i = 0; i < g; ++i) { neg_pc[i] = -pc[i]; neg_qc[i] = -qc[i]; }
    LaurentPolynomial rem = P.shifted(neg_pc, Rational(1));
    const LaurentPolynomial q0 = Q.shifted(neg_qc, Rational(1));

    const auto& qlead = q0.leading_term();
    LaurentPolynomial quot(g);
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading_term();
        ExponentVector t(g);
        for (std::size_t i = 0; i < g; ++i) {
            t[i] = rlead.first[i] - qlead.first[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rational c = rlead.second / qlead.second;
        quot.add_term(t, c);
        rem = rem - q0.shifted(t, c);
    }
    return quot.shifted(exponent_sub(pc, qc), Rational(1));
}

} // namespace octaflip
