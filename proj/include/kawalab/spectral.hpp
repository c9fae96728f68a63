#pragma once
// Dense symmetric discretization of the linearized operator
//   L zeta = gamma zeta'''' - c2 zeta'' + speed zeta - potential(x) zeta
// about a solitary profile, plus eigenvalue counts, the chi-equation
// L chi = phi, and the stability index I = <chi, phi>.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "kawalab/grid.hpp"

namespace kawalab {

struct LinearizedOperator {
  Eigen::MatrixXd A;  // dense, explicitly symmetrized
  Grid grid{64, 1.0};
  double gamma = 0;
  double c2 = 1.0;
  double speed = 0;
  std::vector<double> potential;
  double asymmetry = 0;  // max |A - A^T| entry before symmetrization
};

// width_b > 0: reject grids with width_b * spacing > 0.2 ("grid too coarse").
// width_b == 0: the resolution check falls back to the relative size of the
// top-sixth Fourier content of the potential.
LinearizedOperator assemble_operator(const Grid& grid, double gamma, double c2, double speed,
                                     const std::vector<double>& potential, double width_b = 0);

struct SpectrumSummary {
  std::vector<double> lowest;  // m smallest eigenvalues, ascending
  int neg_count = 0;           // eigenvalues below -tau
  double tau = 0;              // zero threshold 1e-8 * max(1, max |diag|)
  double eig_zero = 0;         // second-smallest eigenvalue (zero-mode slot)
  bool zero_simple = false;    // |eig_zero| <= tau and third-smallest > tau
  double zero_residual = 0;    // ||A phi'|| / ||phi'|| with spectral phi'
  double cos_sim_zero_mode = 0;
  std::vector<double> ground_state;  // eigenvector of the smallest eigenvalue
  std::vector<double> zero_mode;     // eigenvector of the second smallest
};

// phi is the wave itself (not the potential); its spectral derivative is the
// analytic kernel candidate used for zero_residual and the cosine similarity.
SpectrumSummary lowest_spectrum(const LinearizedOperator& op, const std::vector<double>& phi,
                                int m = 4);

struct ChiResult {
  std::vector<double> chi;
  double index_I = 0;
  double cond = 0;           // even-subspace condition number
  double chi_residual = 0;   // ||A chi - phi|| / ||phi||
};

// Solves L chi = phi restricted to even grid functions (the kernel direction
// phi' is odd, so parity removes it without rank decisions). Throws
// std::runtime_error("near-singular even subspace") when cond > 1e12.
ChiResult solve_chi_and_index(const LinearizedOperator& op, const std::vector<double>& phi);

struct MomentCheck {
  std::vector<double> slopes;  // centered differences at interior speeds
  bool all_positive = false;
};

MomentCheck moment_check(const std::vector<double>& speeds, const std::vector<double>& norm_sqs);

// Relative residual || L (-(phi_plus - phi_minus)/(2 dc)) - phi_center || /
// ||phi_center||: small when chi = -dphi/dc solves the chi-equation (fixed
// symbol along the family), order-one when the symbol varies with speed.
double remark_consistency(const LinearizedOperator& op, const std::vector<double>& phi_minus,
                          const std::vector<double>& phi_center,
                          const std::vector<double>& phi_plus, double dc);

}  // namespace kawalab
