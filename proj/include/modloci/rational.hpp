#pragma once

#include <gmpxx.h>

#include <string>

namespace modloci {

/// Exact rational scalar.  GMP keeps values canonical: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Parses "a" or "a/b" with decimal integers.
Rational rat_from_string(const std::string& text);

std::string rat_to_string(const Rational& q);

}  // namespace modloci
