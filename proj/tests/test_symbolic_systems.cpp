// Sech-power calculus, stationary-equation residuals, the rederived
// coefficient systems, and the line-by-line diff against the published forms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kawalab/sechpoly.hpp"
#include "kawalab/system_compare.hpp"

using namespace kawalab;

namespace {
ParamPoly sym(Sym s) { return ParamPoly::symbol(s); }
ParamPoly pc(long num, long den = 1) { return ParamPoly::constant(rat(num, den)); }
}  // namespace

TEST_CASE("second-derivative identity for a single sech power") {
  // d^2 sech^n = B (n^2 sech^n - n(n+1) sech^{n+2})
  const SechPoly d2s1 = sech_d2(SechPoly::sech_power(1));
  const ParamPoly B = sym(Sym::B);
  CHECK(d2s1.coefficient(1) == B);
  CHECK(d2s1.coefficient(3) == B.scaled(rat(-2)));

  const SechPoly d2s4 = sech_d2(SechPoly::sech_power(4));
  CHECK(d2s4.coefficient(4) == B.scaled(rat(16)));
  CHECK(d2s4.coefficient(6) == B.scaled(rat(-20)));
  CHECK(d2s4.coefficient(2).is_zero());
}

TEST_CASE("numeric second differences converge at order two to the identity") {
  // f(xi) = sech^4(b xi); the identity value is B(16 sech^4 - 20 sech^6).
  const double b = 0.7, B = b * b, xi = 0.3;
  auto f = [&](double t) { return std::pow(1.0 / std::cosh(b * t), 4); };
  const double s = 1.0 / std::cosh(b * xi);
  const double exact = B * (16.0 * std::pow(s, 4) - 20.0 * std::pow(s, 6));
  auto fd_err = [&](double h) {
    const double fd = (f(xi + h) - 2.0 * f(xi) + f(xi - h)) / (h * h);
    return std::abs(fd - exact);
  };
  const double e1 = fd_err(1e-3), e2 = fd_err(5e-4);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));  // second order
  CHECK(e1 < 1e-5);
}

TEST_CASE("sech products add exponents and powers expand binomially") {
  const SechPoly s3 = SechPoly::sech_power(3);
  const SechPoly s5 = SechPoly::sech_power(5);
  const SechPoly prod = sech_mul(s3, s5);
  CHECK(prod.coefficient(8) == pc(1));
  CHECK(prod.terms().size() == 1);

  const SechPoly f = SechPoly::sech_power(2) + SechPoly::sech_power(4);
  const SechPoly sq = sech_pow(f, 2);
  CHECK(sq.coefficient(4) == pc(1));
  CHECK(sq.coefficient(6) == pc(2));
  CHECK(sq.coefficient(8) == pc(1));
  CHECK(sech_pow(f, 0) == SechPoly::sech_power(0));
  CHECK(f.to_string().find("sech^4") != std::string::npos);
}

TEST_CASE("fourth derivative of the two-term bump via the repeated identity") {
  const SechPoly d4 = sech_d2(sech_d2(kawahara_ansatz()));
  const ParamPoly be = sym(Sym::beta), la = sym(Sym::lambda), B = sym(Sym::B);
  const ParamPoly B2 = B * B;
  CHECK(d4.coefficient(2) == be * B2.scaled(rat(16)));
  CHECK(d4.coefficient(4) == (la.scaled(rat(256)) - be.scaled(rat(120))) * B2);
  CHECK(d4.coefficient(6) == (be.scaled(rat(120)) - la.scaled(rat(1040))) * B2);
  CHECK(d4.coefficient(8) == la * B2.scaled(rat(840)));
}

TEST_CASE("rederived coefficient system for the two-term family") {
  const auto residual = stationary_residual(EquationForm::kawahara(), kawahara_ansatz());
  const auto system = collect_coefficient_system(residual);
  REQUIRE(system.size() == 4);
  CHECK(system[0].power == 2);
  CHECK(system[1].power == 4);
  CHECK(system[2].power == 6);
  CHECK(system[3].power == 8);

  const ParamPoly om = sym(Sym::omega), ga = sym(Sym::gamma), be = sym(Sym::beta),
                  la = sym(Sym::lambda), B = sym(Sym::B);
  const ParamPoly gB2 = ga * B * B;

  CHECK(system[0].poly == -(om * be) + (be * B).scaled(rat(4)) - (gB2 * be).scaled(rat(16)));
  CHECK(system[1].poly == -(om * la) + (be * be).scaled(rat(1, 2)) + (la * B).scaled(rat(16)) -
                              (be * B).scaled(rat(6)) - (gB2 * la).scaled(rat(256)) +
                              (gB2 * be).scaled(rat(120)));
  CHECK(system[2].poly == be * la - (la * B).scaled(rat(20)) - (gB2 * be).scaled(rat(120)) +
                              (gB2 * la).scaled(rat(1040)));
  CHECK(system[3].poly == (la * la).scaled(rat(1, 2)) - (gB2 * la).scaled(rat(840)));
}

TEST_CASE("rederived coefficient system for the one-term cubic family") {
  const auto residual = stationary_residual(EquationForm::mkawahara(), mkawahara_ansatz());
  const auto system = collect_coefficient_system(residual);
  REQUIRE(system.size() == 3);
  CHECK(system[0].power == 2);
  CHECK(system[1].power == 4);
  CHECK(system[2].power == 6);

  const ParamPoly om = sym(Sym::omega), ga = sym(Sym::gamma), be = sym(Sym::beta),
                  B = sym(Sym::B);
  const ParamPoly gB2 = ga * B * B;
  CHECK(system[0].poly == -(om * be) + (be * B).scaled(rat(4)) - (gB2 * be).scaled(rat(16)));
  CHECK(system[1].poly == -(be * B).scaled(rat(6)) + (gB2 * be).scaled(rat(120)));
  CHECK(system[2].poly == be * be * be - (gB2 * be).scaled(rat(120)));
}

TEST_CASE("benchmark wave solves its stationary equation with exact rationals") {
  const auto eq = EquationForm::custom(rat(13, 420), rat(1, 2), 2, "benchmark");
  const auto residual = stationary_residual(eq, kawahara_ansatz());
  const std::array<Rational, kNumSymbols> at{rat(12, 35), rat(1, 1680), rat(0), rat(1), rat(1)};
  for (const auto& line : collect_coefficient_system(residual)) {
    CHECK(line.poly.eval<Rational>(at) == 0);
  }
  // perturbing the speed breaks exactness
  const std::array<Rational, kNumSymbols> off{rat(12, 35) + rat(1, 1000), rat(1, 1680), rat(0),
                                              rat(1), rat(1)};
  bool any_nonzero = false;
  for (const auto& line : collect_coefficient_system(residual))
    any_nonzero = any_nonzero || (line.poly.eval<Rational>(off) != 0);
  CHECK(any_nonzero);
}

TEST_CASE("line-by-line diff against the published four-equation system") {
  const auto residual = stationary_residual(EquationForm::kawahara(), kawahara_ansatz());
  const auto derived = collect_coefficient_system(residual);
  const DiffReport report = compare_with_paper_system(derived);
  REQUIRE(report.lines.size() == 4);
  CHECK(report.matches == 2);

  // line 1 pairs with the sech^8 equation: derived = (lambda/2) * published
  CHECK(report.lines[0].match);
  CHECK(report.lines[0].matched_power == 8);
  CHECK(report.lines[0].ratio == "(1/2)*lambda");

  // line 2 pairs with sech^2 and disagrees only in the B coefficient
  CHECK_FALSE(report.lines[1].match);
  CHECK(report.lines[1].matched_power == 2);
  REQUIRE(report.lines[1].conflicts.size() == 1);
  CHECK(report.lines[1].conflicts[0] == "B: published -8 vs derived -4");
  CHECK(report.lines[1].only_published.empty());
  CHECK(report.lines[1].only_derived.empty());

  // line 3 pairs with sech^4 and disagrees only in the sign of lambda*B
  CHECK_FALSE(report.lines[2].match);
  CHECK(report.lines[2].matched_power == 4);
  REQUIRE(report.lines[2].conflicts.size() == 1);
  CHECK(report.lines[2].conflicts[0] == "lambda*B: published -32 vs derived 32");

  // line 4 pairs with sech^6: derived = (1/2) * published
  CHECK(report.lines[3].match);
  CHECK(report.lines[3].matched_power == 6);
  CHECK(report.lines[3].ratio == "(1/2)");

  const std::string text = report.to_string();
  CHECK(text.find("MATCH") != std::string::npos);
  CHECK(text.find("MISMATCH") != std::string::npos);
  CHECK(text.find("2/4 lines match") != std::string::npos);
}

TEST_CASE("exact solution of the rederived two-term system") {
  const auto sol = solve_derived_kawahara();
  CHECK(sol.lambda_over_omega == rat(35, 12));
  CHECK(sol.B_over_omega == rat(13, 144));
  CHECK(sol.gamma_times_omega == rat(36, 169));
  CHECK_FALSE(sol.beta_branch_real);
  CHECK(sign(sol.discriminant) < 0);
  // the quadratic itself must be consistent: b^2 - 4ac equals the stored value
  CHECK(sol.quad_b * sol.quad_b - 4 * sol.quad_a * sol.quad_c == sol.discriminant);
}

TEST_CASE("exact solution of the rederived cubic-equation system") {
  const auto sol = solve_derived_mkawahara();
  CHECK(sol.beta_sq_over_B == rat(6));
  CHECK(sol.B_over_c == rat(5, 16));
  CHECK(sol.gamma_times_c == rat(4, 25));
}

TEST_CASE("published closed forms satisfy two of three reduced equations exactly") {
  const auto res = reduced_system_residuals_exact();
  REQUIRE(res.size() == 3);
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
  CHECK_FALSE(res[2].is_zero());
  CHECK(res[2].to_double() == doctest::Approx(-0.224113).epsilon(1e-4));
  // ... while the quadratic they were solved from vanishes identically
  CHECK(lambda_quadratic_residual_exact().is_zero());
}

TEST_CASE("published closed forms reproduce the printed numeric landmarks") {
  const auto cf = published_closed_forms();
  CHECK(cf.lambda1.to_double() == doctest::Approx(0.374259942147).epsilon(1e-9));
  CHECK(cf.beta1.to_double() == doctest::Approx(2.452397472983).epsilon(1e-9));
  CHECK(std::sqrt(cf.B.to_double()) == doctest::Approx(0.354182929501).epsilon(1e-9));
  CHECK(cf.gamma1.to_double() == doctest::Approx(0.014156423991).epsilon(1e-8));
  // gamma1 is lambda1 / (1680 B^2) by construction
  const QuadExt recon = cf.lambda1 / (QuadExt(rat(1680)) * cf.B * cf.B);
  CHECK(recon == cf.gamma1);
}
