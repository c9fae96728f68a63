// Fixed-point solver: convergence to the benchmark wave, invariances, error
// paths, residual behavior under grid refinement, and speed continuation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kawalab/branch.hpp"
#include "kawalab/petviashvili.hpp"

using namespace kawalab;

namespace {

PetviashviliParams benchmark_params() {
  PetviashviliParams p;
  const BenchmarkWave bw;
  p.gamma = bw.gamma;
  p.c2 = bw.c2;
  p.speed = bw.speed;
  p.q = 2;
  p.a = 0.5;
  return p;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("benchmark wave is recovered from a generic bump") {
  const Grid grid = auto_domain(1.0, 1024);
  CHECK(grid.L >= 20.0);
  const auto init = sech2_bump(grid, 2.0, 1.0);
  const auto [phi, report] = petviashvili_solve(benchmark_params(), grid, init);

  CHECK(report.converged);
  CHECK(report.iterations < 200);
  CHECK(std::abs(report.multiplier_final - 1.0) < 1e-12);
  CHECK(report.residual_sup < 100.0 * 1e-12);

  const BenchmarkWave bw;
  double err = 0;
  for (int j = 0; j < grid.n; ++j) err = std::max(err, std::abs(phi.values[j] - bw.profile(grid.x(j))));
  CHECK(err < 1e-8);

  SUBCASE("solution is even, positive, and decays to round-off at the edges") {
    double peak = *std::max_element(phi.values.begin(), phi.values.end());
    for (int j = 1; j < grid.n; ++j) {
      CHECK(std::abs(phi.values[j] - phi.values[grid.n - j]) < 1e-12);
    }
    for (int j = 0; j < grid.n; ++j) {
      CHECK(phi.values[j] > -1e-13);
      if (std::abs(grid.x(j)) >= 0.8 * grid.L) CHECK(std::abs(phi.values[j]) < 1e-12 * peak);
    }
  }

  SUBCASE("multiplier approaches one monotonically up to the round-off floor") {
    const auto& h = report.multiplier_history;
    REQUIRE(h.size() >= 10);
    for (size_t i = h.size() - 10; i + 1 < h.size(); ++i) {
      CHECK(std::abs(h[i + 1] - 1.0) <= std::max(std::abs(h[i] - 1.0), 5e-15));
    }
  }
}

TEST_CASE("fixed point does not depend on the initial bump") {
  const Grid grid = auto_domain(1.0, 512);
  const auto p = benchmark_params();
  const auto [phi_a, ra] = petviashvili_solve(p, grid, sech2_bump(grid, 2.0, 1.0));
  const auto [phi_b, rb] = petviashvili_solve(p, grid, gaussian_bump(grid, 0.7, 3.0));
  CHECK(ra.converged);
  CHECK(rb.converged);
  CHECK(sup_diff(phi_a.values, phi_b.values) < 1e-9);
}

TEST_CASE("error against the closed form drops spectrally under refinement") {
  const BenchmarkWave bw;
  const auto p = benchmark_params();
  std::vector<double> errs;
  for (int n : {128, 256, 512}) {
    const Grid grid(n, 20.0);
    const auto [phi, report] = petviashvili_solve(p, grid, sech2_bump(grid, 2.0, 1.0));
    CHECK(report.converged);
    double err = 0;
    for (int j = 0; j < grid.n; ++j)
      err = std::max(err, std::abs(phi.values[j] - bw.profile(grid.x(j))));
    errs.push_back(err);
  }
  // spectral accuracy: each doubling multiplies accuracy by far more than the
  // factor 4 a second-order method would give
  CHECK(errs[0] / errs[1] > 50.0);
  CHECK(errs[1] < 1e-7);
  CHECK(errs[2] < 1e-11);
}

TEST_CASE("raw residual reporting includes the amplified round-off floor") {
  const Grid grid = auto_domain(1.0, 512);
  const auto [phi, report] = petviashvili_solve(benchmark_params(), grid, sech2_bump(grid, 2.0, 1.0));
  CHECK(report.residual_sup_raw >= report.residual_sup * 0.01);
  CHECK(report.residual_sup_raw < 1e-6);
  CHECK(report.multiplier_history.size() == static_cast<size_t>(report.iterations));
}

TEST_CASE("invalid problems are rejected with specific errors") {
  const Grid grid(128, 10.0);
  auto p = benchmark_params();

  SUBCASE("negative speed makes the preconditioner non-positive") {
    p.speed = -0.1;
    try {
      petviashvili_solve(p, grid, sech2_bump(grid, 2.0, 1.0));
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("operator not positive") != std::string::npos);
    }
  }
  SUBCASE("zero initial data cannot seed the iteration") {
    CHECK_THROWS_AS(petviashvili_solve(p, grid, std::vector<double>(grid.n, 0.0)),
                    std::invalid_argument);
  }
  SUBCASE("odd initial data is rejected") {
    std::vector<double> odd(grid.n);
    for (int j = 0; j < grid.n; ++j) odd[j] = std::sin(3.14159265358979323846 * grid.x(j) / grid.L);
    CHECK_THROWS_AS(petviashvili_solve(p, grid, odd), std::invalid_argument);
  }
  SUBCASE("nonlinearity power below two is rejected") {
    p.q = 1;
    CHECK_THROWS_AS(petviashvili_solve(p, grid, sech2_bump(grid, 2.0, 1.0)),
                    std::invalid_argument);
  }
  SUBCASE("mismatched initial data length is rejected") {
    CHECK_THROWS_AS(petviashvili_solve(p, grid, std::vector<double>(64, 1.0)),
                    std::invalid_argument);
  }
  SUBCASE("iteration cap produces a SolveFailure carrying the partial report") {
    p.max_iter = 3;
    try {
      petviashvili_solve(p, grid, sech2_bump(grid, 2.0, 1.0));
      FAIL("expected SolveFailure");
    } catch (const SolveFailure& e) {
      CHECK(e.report.iterations == 3);
      CHECK_FALSE(e.report.converged);
    }
  }
}

TEST_CASE("auto domain guarantees resolved tails") {
  const Grid g = auto_domain(0.35, 1024);
  CHECK(0.35 * g.L >= 20.0 - 1e-12);
  CHECK(g.n == 1024);
  CHECK_THROWS_AS(auto_domain(0.0), std::invalid_argument);
}

TEST_CASE("speed continuation along the benchmark equation") {
  const Grid grid = auto_domain(1.0, 512);
  const BenchmarkWave bw;
  const std::vector<double> speeds = {0.8 * bw.speed, bw.speed, 1.2 * bw.speed};
  const auto sweep = continuation_sweep(bw.gamma, bw.c2, 2, 0.5, speeds, grid,
                                        sech2_bump(grid, 2.0, 1.0));
  CHECK_FALSE(sweep.aborted);
  REQUIRE(sweep.points.size() == 3);
  REQUIRE(sweep.slopes.size() == 2);
  for (double s : sweep.slopes) CHECK(s > 0.0);
  for (const auto& pt : sweep.points) CHECK(pt.norm_sq > 0.0);
  CHECK(sweep.points[0].norm_sq < sweep.points[1].norm_sq);
  CHECK(sweep.points[1].norm_sq < sweep.points[2].norm_sq);
}

TEST_CASE("cubic-equation continuation at fixed dispersion") {
  // gamma2 = 4/25 is the rederived value at unit speed; sweep speeds around 1.
  const Grid grid(512, 30.0);
  const std::vector<double> speeds = {0.9, 1.0, 1.1};
  const auto sweep = continuation_sweep(4.0 / 25.0, 1.0, 3, 1.0, speeds, grid,
                                        sech2_bump(grid, 1.2, 0.6));
  CHECK_FALSE(sweep.aborted);
  REQUIRE(sweep.points.size() == 3);
  for (double s : sweep.slopes) CHECK(s > 0.0);

  // centered slope of ||phi||^2 in speed at c = 1
  const double slope =
      (sweep.points[2].norm_sq - sweep.points[0].norm_sq) / (speeds[2] - speeds[0]);
  CHECK(slope > 2.2);
  CHECK(slope < 3.0);
  // the analytic one-term family at fixed (not speed-locked) dispersion does
  // not apply here; the printed 6*sqrt(5)/sqrt(c) slope belongs to the other
  // normalization convention and is checked in the acceptance gate instead
  WARN_MESSAGE(std::abs(slope - 6.0 * std::sqrt(5.0)) / (6.0 * std::sqrt(5.0)) < 0.01,
               "fixed-dispersion slope ", slope, " differs from 6*sqrt(5) = ",
               6.0 * std::sqrt(5.0), " (expected: different families)");
}

TEST_CASE("continuation handles degenerate and bad input") {
  const Grid grid(128, 20.0);
  const auto one = continuation_sweep(4.0 / 25.0, 1.0, 3, 1.0, {1.0}, grid,
                                      sech2_bump(grid, 1.2, 0.6));
  CHECK(one.points.size() == 1);
  CHECK(one.slopes.empty());

  CHECK_THROWS_AS(continuation_sweep(4.0 / 25.0, 1.0, 3, 1.0, {1.0, 0.5}, grid,
                                     sech2_bump(grid, 1.2, 0.6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(continuation_sweep(4.0 / 25.0, 1.0, 3, 1.0, {}, grid,
                                     sech2_bump(grid, 1.2, 0.6)),
                  std::invalid_argument);

  // a speed that breaks positivity aborts the sweep with partial results
  const auto bad = continuation_sweep(4.0 / 25.0, 1.0, 3, 1.0, {-0.5, 1.0}, grid,
                                      sech2_bump(grid, 1.2, 0.6));
  CHECK(bad.aborted);
  CHECK(bad.points.empty());
  CHECK(bad.error.find("operator not positive") != std::string::npos);
}
