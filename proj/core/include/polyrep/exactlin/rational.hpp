#pragma once

#include <gmpxx.h>

#include <string>

namespace polyrep {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned long n);

}  // namespace polyrep
