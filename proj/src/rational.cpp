#include "bmetric/rational.hpp"

#include <stdexcept>

namespace bmetric {

long ceil_index(const Rational& q) {
    Integer c = ceil_int(q);
    if (c > Integer(1000000000L)) {
        throw std::overflow_error("index out of range: " + c.str());
    }
    if (c < 1) return 1;
    return static_cast<long>(c);
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(text);
            return Rational(n);
        }
        if (slash == 0 || slash + 1 >= text.size()) return std::nullopt;
        Integer n(text.substr(0, slash));
        Integer d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

std::string format_rational(const Rational& q) {
    Integer d = denominator(q);
    if (d == 1) return numerator(q).str();
    return numerator(q).str() + "/" + d.str();
}

Rational sqrt2_truncation(long digits) {
    Integer pow10 = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
    Integer root = boost::multiprecision::sqrt(Integer(2) * pow10 * pow10);
    return Rational(root, pow10);
}

}  // namespace bmetric
