#pragma once
// Multivariate polynomials with exact rational coefficients over the fixed
// symbol set {omega, gamma, beta, lambda, B}. B stands for the squared inverse
// width b^2, so the sech-power calculus stays closed under differentiation.
// Terms are kept in descending graded-lexicographic order (total degree first,
// then symbol precedence omega > gamma > beta > lambda > B), which makes
// equality structural and printing canonical.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kawalab/rational.hpp"

namespace kawalab {

inline constexpr int kNumSymbols = 5;

enum class Sym : int { omega = 0, gamma = 1, beta = 2, lambda = 3, B = 4 };

extern const std::array<const char*, kNumSymbols> kSymbolNames;

using Expo = std::array<int, kNumSymbols>;  // exponent vector

int total_degree(const Expo& e);

// Strict order placing the graded-lex *leading* monomial first in the map.
struct GradedLexGreater {
  bool operator()(const Expo& a, const Expo& b) const;
};

class ParamPoly {
 public:
  using TermMap = std::map<Expo, Rational, GradedLexGreater>;

  ParamPoly() = default;

  static ParamPoly constant(Rational c);
  static ParamPoly symbol(Sym s);
  static ParamPoly monomial(const Expo& e, Rational c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int degree() const;  // total degree; -1 for zero

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly scaled(const Rational& c) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  // Positive gcd of all coefficients times the sign of the leading one.
  Rational rational_content() const;
  // Componentwise minimum exponent over all terms (zero poly -> all zero).
  Expo monomial_content() const;
  // this == rational_content * X^monomial_content * primitive_part(); the
  // primitive part has positive leading coefficient and coefficient gcd 1.
  ParamPoly primitive_part() const;

  // Polynomial composition: replace symbol s by `value` everywhere.
  ParamPoly substitute(Sym s, const ParamPoly& value) const;

  // Replace gamma^g by c^g * lambda^g * B^{-2g}. Valid only when every term
  // carries B-exponent >= 2*gamma-exponent (true for residuals built from the
  // fourth-derivative identity, where gamma always rides on B^2); throws
  // std::domain_error otherwise.
  ParamPoly eliminate_gamma(const Rational& c) const;

  // Evaluate over any commutative ring with 1 (double, Rational, QuadExt).
  template <class F>
  F eval(const std::array<F, kNumSymbols>& v) const {
    F acc = F(0);
    for (const auto& [e, c] : terms_) {
      F t = F(to_coeff<F>(c));
      for (int s = 0; s < kNumSymbols; ++s)
        for (int i = 0; i < e[s]; ++i) t = t * v[s];
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string() const;

  struct Proportionality {
    bool match = false;
    Rational coef;                      // derived = coef * X^mono * other
    std::array<int, kNumSymbols> mono;  // may contain negative exponents
    std::string ratio_string() const;
  };
  // Does a == r * X^m * b for rational r and (Laurent) monomial X^m?
  static Proportionality proportional(const ParamPoly& a, const ParamPoly& b);

 private:
  template <class F>
  static F to_coeff(const Rational& c) {
    return F(c);
  }
  TermMap terms_;
};

template <>
inline double ParamPoly::to_coeff<double>(const Rational& c) {
  return c.get_d();
}

std::string monomial_to_string(const std::array<int, kNumSymbols>& e);

}  // namespace kawalab
