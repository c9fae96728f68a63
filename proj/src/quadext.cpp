#include "kawalab/quadext.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kawalab {

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  // 1/(a + b s) = (a - b s)/(a^2 - 70 b^2); the denominator is nonzero because
  // sqrt(70) is irrational.
  Rational n = field_norm();
  return QuadExt(a / n, -b / n);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

int QuadExt::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare |a| with |b|*sqrt(70) exactly via squares.
  int c = sgn(a * a - 70 * b * b);  // sign of (a - bs)(a + bs)
  // a > 0, b < 0: a + bs > 0 iff a > |b|s iff a^2 > 70 b^2.
  return sa > 0 ? c : -c;
}

double QuadExt::to_double() const {
  static const double s70 = std::sqrt(70.0);
  return a.get_d() + b.get_d() * s70;
}

std::string QuadExt::to_string() const {
  return "(" + a.get_str() + ") + (" + b.get_str() + ")*sqrt70";
}

QuadExt qe_pow(const QuadExt& x, unsigned e) {
  QuadExt acc(1), base = x;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace kawalab
