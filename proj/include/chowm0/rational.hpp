#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chowm0 {

// Exact rational numbers. GMP keeps values canonical (lowest terms,
// positive denominator), which is exactly the representation contract
// the rest of the library relies on.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Prints "n" or "n/m" with m > 0.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "n" or "n/m" (optional sign). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace chowm0
