// Closed-form wave families: numeric landmarks, scaling laws, analytic norms
// against quadrature, Fourier transforms, symbol admissibility, and pointwise
// stationary-equation residuals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "kawalab/branch.hpp"

using namespace kawalab;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

// Plain trapezoid on a uniform grid (endpoints effectively zero for all the
// decaying integrands used here).
template <class F>
double trapezoid(F f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double acc = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < n; ++i) acc += f(lo + i * h);
  return acc * h;
}

}  // namespace

TEST_CASE("published family landmarks at unit speed") {
  const auto p = paper_kawahara_branch(1.0);
  CHECK(p.omega == 1.0);
  CHECK(p.lambda1 == doctest::Approx(0.374259942147).epsilon(1e-9));
  CHECK(p.beta1 == doctest::Approx(2.452397472983).epsilon(1e-9));
  CHECK(p.b == doctest::Approx(0.354182929501).epsilon(1e-9));
  CHECK(p.gamma1 == doctest::Approx(0.014156423991).epsilon(1e-7));
  CHECK(p.norm_sq() == doctest::Approx(28.5307796177).epsilon(1e-9));
  CHECK(p.index() == doctest::Approx(42.7961694266).epsilon(1e-9));
  CHECK(p.index() == doctest::Approx(1.5 * p.norm_sq()).epsilon(1e-14));
}

TEST_CASE("rederived family landmarks at unit speed") {
  const auto d = derived_kawahara_branch(1.0);
  CHECK(d.beta1 == 0.0);
  CHECK(d.lambda1 == doctest::Approx(35.0 / 12.0).epsilon(1e-14));
  CHECK(d.b == doctest::Approx(std::sqrt(13.0) / 12.0).epsilon(1e-14));
  CHECK(d.gamma1 == doctest::Approx(36.0 / 169.0).epsilon(1e-14));
  // ||phi||^2 = 280/(3 sqrt 13) at unit speed
  CHECK(d.norm_sq() == doctest::Approx(280.0 / (3.0 * std::sqrt(13.0))).epsilon(1e-12));
  CHECK(d.norm_sq() == doctest::Approx(25.886009157177).epsilon(1e-10));
}

TEST_CASE("family parameters obey the exact speed scalings") {
  for (BranchSource src : {BranchSource::paper, BranchSource::derived}) {
    const auto p1 = kawahara_branch(1.0, src);
    const auto p4 = kawahara_branch(4.0, src);
    CHECK(p4.lambda1 == doctest::Approx(4.0 * p1.lambda1).epsilon(1e-12));
    CHECK(p4.beta1 == doctest::Approx(4.0 * p1.beta1).epsilon(1e-12));
    CHECK(p4.b == doctest::Approx(2.0 * p1.b).epsilon(1e-12));
    CHECK(p4.gamma1 == doctest::Approx(p1.gamma1 / 4.0).epsilon(1e-12));
    //||phi||^2 scales like omega^{3/2}
    CHECK(p4.norm_sq() == doctest::Approx(8.0 * p1.norm_sq()).epsilon(1e-12));
    // gamma1 * omega is the family invariant
    const auto p3 = kawahara_branch(3.0, src);
    CHECK(p3.gamma1 * 3.0 == doctest::Approx(p1.gamma1).epsilon(1e-12));
  }
}

TEST_CASE("gamma-to-speed inversion round-trips") {
  for (BranchSource src : {BranchSource::paper, BranchSource::derived}) {
    const auto p = kawahara_branch(2.0, src);
    CHECK(omega_for_gamma(p.gamma1, src) == doctest::Approx(2.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(omega_for_gamma(-0.1, BranchSource::paper), std::invalid_argument);
  CHECK_THROWS_AS(kawahara_branch(0.0, BranchSource::paper), std::invalid_argument);
  CHECK_THROWS_AS(mkawahara_branch(-1.0, BranchSource::derived), std::invalid_argument);
}

TEST_CASE("analytic norms agree with quadrature") {
  const auto p = paper_kawahara_branch(1.0);
  const double qp = trapezoid([&](double x) { return p.profile(x) * p.profile(x); },
                              -120.0, 120.0, 60000);
  CHECK(qp == doctest::Approx(p.norm_sq()).epsilon(1e-10));

  const auto d = derived_kawahara_branch(1.0);
  const double qd = trapezoid([&](double x) { return d.profile(x) * d.profile(x); },
                              -150.0, 150.0, 60000);
  CHECK(qd == doctest::Approx(d.norm_sq()).epsilon(1e-10));

  for (BranchSource conv : {BranchSource::derived, BranchSource::paper}) {
    const auto m = mkawahara_branch(1.0, conv);
    const double qm = trapezoid([&](double x) { return m.profile(x) * m.profile(x); },
                                -80.0, 80.0, 40000);
    CHECK(qm == doctest::Approx(m.norm_sq()).epsilon(1e-10));
  }
  // the two cubic-equation conventions differ by the documented factor 6
  CHECK(mkawahara_branch(1.0, BranchSource::paper).norm_sq() ==
        doctest::Approx(6.0 * mkawahara_branch(1.0, BranchSource::derived).norm_sq())
            .epsilon(1e-12));
  CHECK(mkawahara_branch(1.0, BranchSource::derived).norm_sq() ==
        doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(mkawahara_branch(1.0, BranchSource::paper).index() ==
        doctest::Approx(6.0 * std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("closed-form transforms match direct quadrature and known values") {
  // sech^2: pi k / sinh(pi k / 2); at k = 2 this is 2 pi / sinh(pi)
  CHECK(fourier_sech2(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(fourier_sech2(2.0) ==
        doctest::Approx(2.0 * 3.14159265358979323846 / std::sinh(3.14159265358979323846))
            .epsilon(1e-14));
  CHECK(fourier_sech4(0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  // continuity of the removable singularity at k = 0
  CHECK(fourier_sech4(1e-9) == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
  CHECK(fourier_sech2(-1.3) == doctest::Approx(fourier_sech2(1.3)).epsilon(1e-15));

  for (double k : {0.3, 1.0, 2.7}) {
    const double q2 = trapezoid(
        [&](double x) { return std::cos(k * x) / std::pow(std::cosh(x), 2); }, -45.0, 45.0,
        30000);
    CHECK(fourier_sech2(k) == doctest::Approx(q2).epsilon(1e-9));
    const double q4 = trapezoid(
        [&](double x) { return std::cos(k * x) / std::pow(std::cosh(x), 4); }, -45.0, 45.0,
        30000);
    CHECK(fourier_sech4(k) == doctest::Approx(q4).epsilon(1e-9));
  }
}

TEST_CASE("profile transforms are strictly positive out to |k| = 60") {
  const auto ks = linspace(-60.0, 60.0, 2401);
  for (BranchSource src : {BranchSource::paper, BranchSource::derived}) {
    const auto p = kawahara_branch(1.0, src);
    for (double v : profile_fourier(p, ks)) CHECK(v > 0.0);
  }
  const auto m = mkawahara_branch(1.0, BranchSource::derived);
  for (double v : profile_fourier(m, ks)) CHECK(v > 0.0);
  for (double v : profile_sq_fourier(m, ks)) CHECK(v > 0.0);
}

TEST_CASE("transform scaling against quadrature for a scaled profile") {
  const auto d = derived_kawahara_branch(1.0);
  const std::vector<double> ks = {0.0, 0.5, 1.0};
  const auto vals = profile_fourier(d, ks);
  for (size_t i = 0; i < ks.size(); ++i) {
    const double q = trapezoid(
        [&](double x) { return d.profile(x) * std::cos(ks[i] * x); }, -150.0, 150.0, 60000);
    CHECK(vals[i] == doctest::Approx(q).epsilon(1e-9));
  }
}

TEST_CASE("dispersion symbol admissibility sandwich") {
  const auto spec = make_symbol_spec(1.0 / 1680.0, 13.0 / 420.0);
  CHECK(spec.nu == 4);
  CHECK(spec.mu == 4);
  const auto ks = linspace(-80.0, 80.0, 3201);
  const auto v = spec.validate(ks);
  CHECK(v.ok);
  CHECK(v.delta_min >= 0.0);
  CHECK(v.worst_lower_margin >= 0.0);
  CHECK(v.worst_upper_margin >= 0.0);
  CHECK(spec.delta(2.0) == doctest::Approx(16.0 / 1680.0 + 4.0 * 13.0 / 420.0).epsilon(1e-15));
  CHECK_THROWS_AS(make_symbol_spec(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("pointwise stationary residuals separate true and false waves") {
  const auto xi = linspace(-20.0, 20.0, 801);

  // rederived family: solves its equation to round-off at several speeds
  for (double w : {0.5, 1.0, 2.0}) {
    CHECK(grid_residual(derived_kawahara_branch(w), xi) < 1e-12 * std::max(1.0, w * w));
  }
  // published family: order-one residual (it does not solve the same equation)
  const double rp = grid_residual(paper_kawahara_branch(1.0), xi);
  CHECK(rp > 1e-2);
  CHECK(rp < 10.0);

  // cubic equation: the rederived convention solves it, the published
  // convention misses by an order-one factor
  CHECK(grid_residual(mkawahara_branch(1.0, BranchSource::derived), xi) < 1e-12);
  CHECK(grid_residual(mkawahara_branch(1.0, BranchSource::paper), xi) > 1.0);

  // benchmark wave through the generic sech-ansatz residual
  const BenchmarkWave bw;
  const std::array<double, kNumSymbols> vals{bw.speed, bw.gamma, 0.0, 1.0, bw.b * bw.b};
  CHECK(sech_ansatz_grid_residual(bw.equation_form(), kawahara_ansatz(), vals, xi) < 1e-13);
  CHECK(bw.profile(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bw.profile(1.0) == doctest::Approx(std::pow(1.0 / std::cosh(1.0), 4)).epsilon(1e-15));
}

TEST_CASE("profile evaluation fills a grid consistently") {
  const Grid g(128, 15.0);
  const auto p = paper_kawahara_branch(1.0);
  const auto gp = profile_eval(p, g);
  REQUIRE(gp.values.size() == 128);
  CHECK(gp.grid == g);
  for (int j = 0; j < g.n; ++j) {
    CHECK(gp.values[j] == doctest::Approx(p.profile(g.x(j))).epsilon(1e-15));
  }
  // evenness on the grid (x(j) and -x(j) both sampled for j != 0)
  for (int j = 1; j < g.n / 2; ++j) {
    CHECK(gp.values[j] == doctest::Approx(gp.values[g.n - j]).epsilon(1e-14));
  }
}

TEST_CASE("branch source labels") {
  CHECK(std::string(to_string(BranchSource::paper)) == "paper");
  CHECK(std::string(to_string(BranchSource::derived)) == "derived");
}
