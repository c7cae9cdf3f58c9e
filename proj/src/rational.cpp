#include "octaflip/rational.hpp"

#include <cctype>

namespace octaflip {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    // strip surrounding whitespace
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos)
        throw InvalidInput("empty rational literal");
    text = text.substr(b, e - b + 1);

    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(text))
            throw InvalidInput("bad rational literal '" + std::string(text) + "'");
        return Rational(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw InvalidInput("bad rational literal '" + std::string(text) + "'");
    Int d{std::string(den)};
    if (d == 0)
        throw InvalidInput("zero denominator in rational '" + std::string(text) + "'");
    return Rational(Int(std::string(num)), d);
}

std::string format_rational(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace octaflip
