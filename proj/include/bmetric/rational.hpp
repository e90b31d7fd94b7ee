#ifndef BMETRIC_RATIONAL_HPP
#define BMETRIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace bmetric {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator. All distance values and constants use this type;
// no floating point enters any computation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

// Least integer >= q.
inline Integer ceil_int(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;
    if (quot * d < n) quot += 1;
    return quot;
}

// ceil as a long for use as a sequence index; the values involved are
// small (precision indices), so narrowing is checked.
long ceil_index(const Rational& q);

// Parses "p/q" or a bare integer "p". Rejects zero denominators and any
// trailing garbage.
std::optional<Rational> parse_rational(const std::string& text);

// Serializes in lowest terms: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

// floor(sqrt(2) * 10^digits) / 10^digits, the decimal truncation of
// sqrt(2) to `digits` places, as an exact rational.
Rational sqrt2_truncation(long digits);

}  // namespace bmetric

#endif
