#pragma once

// Exact scalar types shared by every module, plus the library's error types.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ehrkit {

/// Arbitrary-precision integer. Counts and combinatorial numbers are
/// nonnegative by construction; the alias is signed so that differences of
/// counts stay representable.
using Integer = boost::multiprecision::cpp_int;
using Natural = Integer;

/// Exact rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Raised when parameters fall outside an operation's documented range.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the brute-force counter when the candidate box is too large.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the geometry module when an instance exceeds its scale guard.
class scale_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Inverse of to_string: accepts "p" or "p/q" with optional leading '-'.
/// The result is normalized, so "2/4" parses to 1/2.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
            }
        }
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace ehrkit
