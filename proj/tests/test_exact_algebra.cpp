// Exact arithmetic layer: rationals, the quadratic field Q(sqrt(70)), the
// counter-based PRNG, and the multivariate parameter polynomials.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kawalab/parampoly.hpp"
#include "kawalab/prng.hpp"
#include "kawalab/quadext.hpp"
#include "kawalab/rational.hpp"

using namespace kawalab;

namespace {

// Small random rational built from two PRNG draws; denominators stay modest so
// products remain cheap but non-trivial.
Rational random_rational(const SplitMix64& rng, std::uint64_t counter) {
  const auto raw_n = static_cast<long>(rng.at(2 * counter) % 41) - 20;
  const auto raw_d = static_cast<long>(rng.at(2 * counter + 1) % 23) + 1;
  return rat(raw_n, raw_d);
}

QuadExt random_quadext(const SplitMix64& rng, std::uint64_t counter) {
  return QuadExt(random_rational(rng, 2 * counter), random_rational(rng, 2 * counter + 1));
}

// High-precision floating reference for a + b*sqrt(70).
mpf_class mpf_value(const QuadExt& x, int bits) {
  mpf_class root(70, bits);
  root = sqrt(root);
  mpf_class a(x.a, bits), b(x.b, bits);
  return a + b * root;
}

}  // namespace

TEST_CASE("rational helpers canonicalize and exponentiate") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-6, -4) == rat(3, 2));
  CHECK(to_string(rat(-6, 4)) == "-3/2");
  CHECK(rat_pow(rat(3, 2), 0) == 1);
  CHECK(rat_pow(rat(3, 2), 5) == rat(243, 32));
  CHECK(rat_from_string("35/12") == rat(35, 12));
  CHECK(to_double(rat(1, 8)) == 0.125);
}

TEST_CASE("splitmix64 stream is a pure function of (seed, counter)") {
  SplitMix64 a(42), b(42), c(43);
  for (std::uint64_t i = 0; i < 64; ++i) {
    CHECK(a.at(i) == b.at(i));
    const double u = a.uniform01(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = a.uniform(i, -3.0, 5.0);
    CHECK(v >= -3.0);
    CHECK(v < 5.0);
  }
  // different seeds should disagree somewhere early
  bool differs = false;
  for (std::uint64_t i = 0; i < 8; ++i) differs = differs || (a.at(i) != c.at(i));
  CHECK(differs);
  // calling out of order does not change values
  CHECK(a.at(17) == b.at(17));
  CHECK(a.at(3) == b.at(3));
}

TEST_CASE("quadext field laws hold on randomized elements") {
  SplitMix64 rng(2024);
  for (std::uint64_t i = 0; i < 60; ++i) {
    const QuadExt x = random_quadext(rng, 3 * i);
    const QuadExt y = random_quadext(rng, 3 * i + 1);
    const QuadExt z = random_quadext(rng, 3 * i + 2);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == QuadExt(0));
    CHECK(x * QuadExt(1) == x);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QuadExt(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("quadext inverse of zero is rejected") {
  CHECK_THROWS_AS(QuadExt(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), std::domain_error);
}

TEST_CASE("quadext exact sign matches a 256-bit floating oracle") {
  SplitMix64 rng(7);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const QuadExt x = random_quadext(rng, i);
    const mpf_class ref = mpf_value(x, 256);
    const int ref_sign = x.is_zero() ? 0 : (ref > 0 ? 1 : -1);
    CHECK(x.sign() == ref_sign);
  }
}

TEST_CASE("quadext sign is exact on continued-fraction convergents of sqrt70") {
  // p/q -> sqrt(70) makes p - q*sqrt(70) tiny with alternating sign; the sign
  // must still be resolved exactly. CF expansion: [8; 2,1,2,1,2,16 repeating].
  const int period[6] = {2, 1, 2, 1, 2, 16};
  mpz_class p_prev = 1, p = 8, q_prev = 0, q = 1;
  for (int step = 0; step < 40; ++step) {
    const int a = period[step % 6];
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = p; p = p_next;
    q_prev = q; q = q_next;

    const QuadExt diff(Rational(p), -Rational(q));  // p - q*sqrt70
    CHECK(diff.sign() != 0);
    const mpf_class ref = mpf_value(diff, 4096);
    CHECK(diff.sign() == (ref > 0 ? 1 : -1));
  }
}

TEST_CASE("quadext numeric value and printing") {
  const QuadExt x(rat(1, 2), rat(-1, 3));
  const double expect = 0.5 - std::sqrt(70.0) / 3.0;
  CHECK(x.to_double() == doctest::Approx(expect).epsilon(1e-15));
  CHECK(x.to_string().find("sqrt70") != std::string::npos);
  CHECK(QuadExt(rat(5)).is_rational());
  CHECK(x.field_norm() == rat(1, 4) - rat(70, 9));
}

TEST_CASE("parampoly canonical ordering and printing") {
  const ParamPoly w = ParamPoly::symbol(Sym::omega);
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  const ParamPoly g = ParamPoly::symbol(Sym::gamma);
  // graded-lex: total degree first, gamma*B^2 (deg 3) precedes B (deg 1)
  const ParamPoly p = B - g * B * B + w.scaled(rat(1, 16));
  CHECK(p.to_string() == "-gamma*B^2 + (1/16)*omega + B");
  CHECK(p.degree() == 3);
  CHECK((w - w).is_zero());
  CHECK(ParamPoly().to_string() == "0");
}

TEST_CASE("parampoly ring identities on randomized polynomials") {
  SplitMix64 rng(99);
  auto random_poly = [&](std::uint64_t base) {
    ParamPoly acc;
    for (int t = 0; t < 4; ++t) {
      Expo e{};
      for (int s = 0; s < kNumSymbols; ++s)
        e[s] = static_cast<int>(rng.at(base * 64 + 5 * t + s) % 3);
      acc += ParamPoly::monomial(e, random_rational(rng, base * 64 + 32 + t));
    }
    return acc;
  };
  for (std::uint64_t i = 0; i < 24; ++i) {
    const ParamPoly x = random_poly(3 * i), y = random_poly(3 * i + 1), z = random_poly(3 * i + 2);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("parampoly binomial expansion") {
  const ParamPoly x = ParamPoly::symbol(Sym::beta);
  const ParamPoly y = ParamPoly::symbol(Sym::lambda);
  const ParamPoly lhs = (x + y) * (x + y);
  const ParamPoly rhs = x * x + (x * y).scaled(rat(2)) + y * y;
  CHECK(lhs == rhs);
}

TEST_CASE("parampoly substitution composes polynomials") {
  const ParamPoly w = ParamPoly::symbol(Sym::omega);
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  // (omega^2 + B) with omega := B - 1  ->  B^2 - 2B + 1 + B = B^2 - B + 1
  const ParamPoly p = w * w + B;
  const ParamPoly q = p.substitute(Sym::omega, B - ParamPoly::constant(rat(1)));
  const ParamPoly expect = B * B - B + ParamPoly::constant(rat(1));
  CHECK(q == expect);
}

TEST_CASE("parampoly content and primitive part factorization") {
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  const ParamPoly lam = ParamPoly::symbol(Sym::lambda);
  const ParamPoly p = (lam * B * B).scaled(rat(-6, 4)) + (lam * lam * B * B).scaled(rat(9, 2));
  // content -3/2 * common monomial lambda*B^2, primitive part (1 - 3*lambda)
  // with positive leading coefficient under graded lex -> -(1 - 3 lambda)?
  const Rational c = p.rational_content();
  const Expo m = p.monomial_content();
  const ParamPoly prim = p.primitive_part();
  CHECK(m[static_cast<int>(Sym::lambda)] == 1);
  CHECK(m[static_cast<int>(Sym::B)] == 2);
  // reassemble: c * X^m * prim == p
  ParamPoly mono = ParamPoly::monomial(m, c);
  CHECK(mono * prim == p);
  // primitive part has coefficient gcd 1 and positive leading coefficient
  CHECK(prim.rational_content() == 1);
}

TEST_CASE("parampoly gamma elimination rewrites gamma*B^2 blocks") {
  const ParamPoly g = ParamPoly::symbol(Sym::gamma);
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  const ParamPoly lam = ParamPoly::symbol(Sym::lambda);
  // gamma*B^2 with gamma := c*lambda/B^2 at c = 1/1680 -> lambda/1680
  const ParamPoly p = g * B * B;
  CHECK(p.eliminate_gamma(rat(1, 1680)) == lam.scaled(rat(1, 1680)));
  // gamma*B (insufficient B power) must be rejected
  CHECK_THROWS_AS((g * B).eliminate_gamma(rat(1, 1680)), std::domain_error);
  // gamma-free polynomials pass through unchanged
  CHECK((lam + B).eliminate_gamma(rat(1)) == lam + B);
}

TEST_CASE("parampoly proportionality detects rational and monomial factors") {
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  const ParamPoly lam = ParamPoly::symbol(Sym::lambda);
  const ParamPoly beta = ParamPoly::symbol(Sym::beta);
  const ParamPoly base = lam - (B * B).scaled(rat(1680));

  auto r1 = ParamPoly::proportional(base.scaled(rat(-3, 7)), base);
  CHECK(r1.match);
  CHECK(r1.coef == rat(-3, 7));

  auto r2 = ParamPoly::proportional(base * beta * lam, base);
  CHECK(r2.match);
  CHECK(r2.mono[static_cast<int>(Sym::beta)] == 1);
  CHECK(r2.mono[static_cast<int>(Sym::lambda)] == 1);

  auto r3 = ParamPoly::proportional(base, base + beta);
  CHECK_FALSE(r3.match);

  auto r4 = ParamPoly::proportional(ParamPoly(), base);
  CHECK_FALSE(r4.match);
}

TEST_CASE("parampoly evaluation agrees between exact and floating routes") {
  const ParamPoly g = ParamPoly::symbol(Sym::gamma);
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  const ParamPoly w = ParamPoly::symbol(Sym::omega);
  const ParamPoly p = (g * B * B).scaled(rat(-16)) + B.scaled(rat(4)) - w;

  const std::array<Rational, kNumSymbols> exact{rat(12, 35), rat(1, 1680), rat(0), rat(1), rat(1)};
  const Rational pe = p.eval<Rational>(exact);

  std::array<double, kNumSymbols> num{};
  for (int s = 0; s < kNumSymbols; ++s) num[s] = to_double(exact[s]);
  const double pd = p.eval<double>(num);

  CHECK(pd == doctest::Approx(to_double(pe)).epsilon(1e-14));
  // and the specific value: -16/1680 + 4 - 12/35 = 128/35... check exactness
  CHECK(pe == rat(-16, 1680) + rat(4) - rat(12, 35));
}
