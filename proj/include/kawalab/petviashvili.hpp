#pragma once
// Stabilized fixed-point solver for (M + c) phi = a phi^q on a periodic grid:
//   phi_{n+1} = m_n^theta (M+c)^{-1}[a phi_n^q],
//   m_n = <(M+c)phi_n, phi_n> / <a phi_n^q, phi_n>,  theta = q/(q-1).
// Independent numerical oracle for every closed-form wave family.

#include <stdexcept>
#include <string>
#include <vector>

#include "kawalab/fft.hpp"
#include "kawalab/grid.hpp"

namespace kawalab {

struct PetviashviliParams {
  double gamma = 0;     // k^4 coefficient of the symbol
  double c2 = 1.0;      // k^2 coefficient
  double speed = 0;     // c in (M + c)
  int q = 2;            // nonlinearity power
  double a = 0.5;       // nonlinearity coefficient
  double tol = 1e-12;   // on |m - 1|
  int max_iter = 2000;
  int polish_max = 60;  // extra iterations after |m-1| < tol, until the
                        // sup change per iteration drops below 0.1*tol*scale
};

struct SolveReport {
  int iterations = 0;
  std::vector<double> multiplier_history;
  double multiplier_final = 0;
  // Sup-norm of the preconditioned stationary equation
  // phi - (M+c)^{-1}[a phi^q]; free of the k^4 round-off amplification that
  // limits the raw form, so it honestly reflects fixed-point accuracy.
  double residual_sup = 0;
  // Sup-norm of the raw stationary equation (M+c)phi - a phi^q; its floor is
  // eps * gamma * k_max^4 * |phi_hat| and is reported for transparency.
  double residual_sup_raw = 0;
  bool converged = false;
};

struct SolveFailure : std::runtime_error {
  SolveFailure(const std::string& msg, SolveReport r)
      : std::runtime_error(msg), report(std::move(r)) {}
  SolveReport report;
};

// Throws std::invalid_argument if the symbol is not positive on the grid
// ("operator not positive...") or init is zero/odd; throws SolveFailure after
// max_iter without meeting tol.
std::pair<GridProfile, SolveReport> petviashvili_solve(const PetviashviliParams& params,
                                                       const Grid& grid,
                                                       const std::vector<double>& init);

// Gaussian / sech^2 initial bumps used by the CLI and the tests.
std::vector<double> gaussian_bump(const Grid& grid, double amplitude, double width);
std::vector<double> sech2_bump(const Grid& grid, double amplitude, double inv_width);

// Pick L so that expected_b * L >= 20 (tails below 1e-17 of the peak).
Grid auto_domain(double expected_b, int n = 1024);

struct SweepPoint {
  double speed = 0;
  double norm_sq = 0;
  int iterations = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<double> slopes;  // per-interval finite differences
  bool aborted = false;
  std::string error;
};

// Warm-started continuation in speed at fixed symbol coefficients; speeds must
// be ascending. A solve failure aborts with partial results.
SweepResult continuation_sweep(double gamma, double c2, int q, double a,
                               const std::vector<double>& speeds, const Grid& grid,
                               const std::vector<double>& init, double tol = 1e-12);

}  // namespace kawalab
