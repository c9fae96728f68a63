#pragma once
// Exact arithmetic in the quadratic field Q(sqrt(70)): values a + b*sqrt(70)
// with rational a, b. 70 is squarefree, so representation is unique and
// a + b*sqrt(70) == 0 iff a == b == 0; every nonzero element is invertible.

#include <iosfwd>
#include <string>

#include "kawalab/rational.hpp"

namespace kawalab {

struct QuadExt {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(70)

  QuadExt() : a(0), b(0) {}
  QuadExt(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}
  QuadExt(long v) : a(v), b(0) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QuadExt operator-() const { return QuadExt(-a, -b); }
  QuadExt& operator+=(const QuadExt& o) { a += o.a; b += o.b; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a -= o.a; b -= o.b; return *this; }
  QuadExt& operator*=(const QuadExt& o) {
    Rational na = a * o.a + 70 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = na; b = nb;
    return *this;
  }

  // Field norm a^2 - 70 b^2; zero only at 0.
  Rational field_norm() const { return a * a - 70 * b * b; }

  QuadExt inverse() const;                 // throws std::domain_error on 0
  int sign() const;                        // exact: -1, 0, +1
  double to_double() const;                // rounded numeric value
  std::string to_string() const;           // e.g. "(-4129/123209) + (546/123209)*sqrt70"
};

inline QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
inline QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
inline QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
QuadExt operator/(const QuadExt& x, const QuadExt& y);
inline bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

QuadExt qe_pow(const QuadExt& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace kawalab
