#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nqh {

// GMP keeps mpq_class canonical after every arithmetic operation:
// positive denominator, gcd(num, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", also for integers ("5/1"), so the text form is unambiguous.
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer "num". Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

/// q^e for any integer e; throws InvalidInput for 0^e with e < 0.
Rational pow(const Rational& q, int e);

inline Rational make_rational(long num, long den = 1) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

}  // namespace nqh
