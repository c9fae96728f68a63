#pragma once
// The published coefficient system for the two-term Kawahara ansatz, its
// reduced three-equation form, the lambda/omega quadratic, and machinery to
// diff all of it against the independently rederived system. Nothing is ever
// auto-corrected: matches and mismatches are both reported as data.

#include <optional>
#include <string>
#include <vector>

#include "kawalab/parampoly.hpp"
#include "kawalab/quadext.hpp"
#include "kawalab/sechpoly.hpp"

namespace kawalab {

// The four printed equations (B = b^2):
//   1:  lambda - 1680*gamma*B^2
//   2:  -B/2 + gamma*B^2 + omega/16
//   3:  240*gamma*B^2*beta - 512*gamma*B^2*lambda - 32*lambda*B - 12*beta*B
//         + beta^2 - 2*omega*lambda
//   4:  2080*gamma*B^2*lambda - 240*gamma*B^2*beta - 40*lambda*B + 2*beta*lambda
std::vector<ParamPoly> published_kawahara_system();

// The printed reduced system:
//   1:  B - lambda/840 - omega/8
//   2:  26*lambda + 39*beta - 840*B
//   3:  3*lambda*beta - 32*lambda^2 - 672*lambda*B - 252*beta*B + 21*beta^2
//         - 42*omega*lambda
std::vector<ParamPoly> published_reduced_system();

// The printed quadratic in (omega, lambda):
//   -2023210/169 * omega*lambda - 862463/507 * lambda^2 + 797475/169 * omega^2
ParamPoly published_lambda_quadratic();

struct LineDiff {
  int line = 0;                   // 1-based index into the published system
  int matched_power = -1;         // sech power of the paired derived equation
  bool match = false;
  std::string ratio;              // derived = ratio * published, when matched
  std::string published_text;
  std::string derived_text;
  // Monomial-level diff after scaling the derived equation so its leading
  // coefficient equals the published one (empty when match).
  std::vector<std::string> conflicts;      // "mono: published c_p vs derived c_d"
  std::vector<std::string> only_published; // monomials missing from derived
  std::vector<std::string> only_derived;   // monomials missing from published
};

struct DiffReport {
  std::vector<LineDiff> lines;
  int matches = 0;
  std::string to_string() const;
};

// Pair each published line with the structurally closest derived equation and
// report exact proportionality or the precise monomial disagreements.
DiffReport compare_with_paper_system(const std::vector<CollectedEquation>& derived);

// Exact solution of the rederived system for beta*sech^2 + lambda*sech^4.
// Reduction path: the s^8 equation pins gamma*B^2 = lambda/1680; the s^2
// equation factors as beta*(bracket). Imposing the bracket (beta != 0 route)
// leads to a quadratic in lambda/omega whose discriminant is negative — no
// real family — so the solution has beta = 0 with rational lambda/omega,
// B/omega and gamma*omega.
struct DerivedKawaharaSolution {
  // beta != 0 route:
  Rational quad_a, quad_b, quad_c;  // a*(lambda/omega)^2 + b*(lambda/omega) + c = 0
  Rational discriminant;            // b^2 - 4ac (negative: no real roots)
  bool beta_branch_real = false;
  // the real family (beta = 0):
  Rational lambda_over_omega;  // 35/12
  Rational B_over_omega;       // 13/144
  Rational gamma_times_omega;  // 36/169
};
DerivedKawaharaSolution solve_derived_kawahara();

// Exact solution of the rederived cubic-equation system for beta*sech^2:
// beta^2 = 6B, B = 5c/16, gamma = 4/(25c)  (speed symbol omega stands for c).
struct DerivedMKawaharaSolution {
  Rational beta_sq_over_B;     // 6
  Rational B_over_c;           // 5/16
  Rational gamma_times_c;      // 4/25
};
DerivedMKawaharaSolution solve_derived_mkawahara();

// Exact closed forms of the published Kawahara family at omega = 1, as
// elements of Q(sqrt70): lambda1, beta1, b^2, and gamma1 = lambda1/(1680*b^4).
struct PublishedClosedForms {
  QuadExt lambda1;  // 105*(-4129 + 546*sqrt70)/123209
  QuadExt beta1;    // (609630 - 36750*sqrt70)/123209
  QuadExt B;        // (59540 + 273*sqrt70)/492836
  QuadExt gamma1;
};
PublishedClosedForms published_closed_forms();

// Exact residuals of the printed reduced system and quadratic at the closed
// forms (omega = 1). Lines 1-2 vanish identically; line 3 does not.
std::vector<QuadExt> reduced_system_residuals_exact();
QuadExt lambda_quadratic_residual_exact();

}  // namespace kawalab
