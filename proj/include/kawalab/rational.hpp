#pragma once
// Exact rational arithmetic used by the symbolic layer. Thin helpers around
// GMP's mpq_class; values are always kept in canonical (reduced) form.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kawalab {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

// q^e for e >= 0.
inline Rational rat_pow(const Rational& q, unsigned e) {
  Rational acc = 1, base = q;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

// Canonical text form, e.g. "-3/7" or "5".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kawalab
