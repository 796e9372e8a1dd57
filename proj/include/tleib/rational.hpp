#ifndef TLEIB_RATIONAL_HPP
#define TLEIB_RATIONAL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tleib {

/// Exact rational scalar. Arbitrary-precision, always kept in canonical form:
/// gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// num/den with sign normalization; den must be nonzero.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num) / Rational(den);
}

/// Canonical text form: "a" for integers, "a/b" otherwise, b > 0.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Accepts [+-]digits; rejects anything else (no whitespace, no leading '/').
inline std::optional<BigInt> parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    BigInt v(std::string(s));
    return neg ? -v : v;
}

} // namespace detail

/// Strict parser for the file-format rational grammar: "a" or "a/b" with
/// decimal integers, optional sign on the numerator only, b > 0 after
/// normalization. No floats, no exponents, no whitespace.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = detail::parse_integer(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto num = detail::parse_integer(text.substr(0, slash));
    auto den = detail::parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return make_rational(*num, *den);
}

} // namespace tleib

#endif
