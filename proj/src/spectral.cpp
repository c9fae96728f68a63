#include "kawalab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "kawalab/fft.hpp"

namespace kawalab {

namespace {

double l2_grid(const std::vector<double>& v, double h) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s * h);
}

}  // namespace

LinearizedOperator assemble_operator(const Grid& grid, double gamma, double c2, double speed,
                                     const std::vector<double>& potential, double width_b) {
  const auto n = static_cast<std::size_t>(grid.n);
  if (potential.size() != n) throw std::invalid_argument("potential size does not match grid");

  if (width_b > 0) {
    if (width_b * grid.spacing() > 0.2) throw std::invalid_argument("grid too coarse");
  } else {
    // No analytic width available: require the top-sixth Fourier band of the
    // potential to be negligible relative to its peak coefficient.
    SpectralOps ops(grid);
    Cvec hat = ops.to_hat(potential);
    double peak = 0, tail = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t m = std::min(j, n - j);
      const double mag = std::abs(hat[j]);
      peak = std::max(peak, mag);
      if (m >= (5 * n) / 12) tail = std::max(tail, mag);  // |k| >= (5/6) k_max
    }
    if (peak > 0 && tail > 1e-8 * peak) throw std::invalid_argument("grid too coarse");
  }

  SpectralOps ops(grid);
  const auto& k = ops.k();

  // Circulant stencil of the Fourier multiplier gamma k^4 + c2 k^2 + speed.
  Cvec sym_hat(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double k2 = k[j] * k[j];
    sym_hat[j] = {gamma * k2 * k2 + c2 * k2 + speed, 0.0};
  }
  std::vector<double> stencil = ops.from_hat(sym_hat);  // inverse FFT, real part

  LinearizedOperator op;
  op.grid = grid;
  op.gamma = gamma;
  op.c2 = c2;
  op.speed = speed;
  op.potential = potential;
  op.A.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      op.A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          stencil[(i + n - j) % n] - (i == j ? potential[i] : 0.0);

  double asym = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(op.A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                                     op.A(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))));
  op.asymmetry = asym;
  op.A = 0.5 * (op.A + op.A.transpose()).eval();
  return op;
}

SpectrumSummary lowest_spectrum(const LinearizedOperator& op, const std::vector<double>& phi,
                                int m) {
  if (m < 4) throw std::invalid_argument("need at least 4 lowest eigenvalues");
  const auto n = static_cast<std::size_t>(op.grid.n);
  if (phi.size() != n) throw std::invalid_argument("phi size does not match grid");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.A);
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  const auto& evals = es.eigenvalues();  // ascending

  SpectrumSummary out;
  double max_diag = 0;
  for (Eigen::Index i = 0; i < op.A.rows(); ++i)
    max_diag = std::max(max_diag, std::abs(op.A(i, i)));
  out.tau = 1e-8 * std::max(1.0, max_diag);

  const int mm = std::min<int>(m, static_cast<int>(evals.size()));
  out.lowest.assign(evals.data(), evals.data() + mm);
  out.neg_count = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    if (evals[i] < -out.tau) ++out.neg_count;

  out.eig_zero = evals[1];
  out.zero_simple = std::abs(evals[1]) <= out.tau && evals[2] > out.tau;

  out.ground_state.resize(n);
  out.zero_mode.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.ground_state[j] = es.eigenvectors()(static_cast<Eigen::Index>(j), 0);
    out.zero_mode[j] = es.eigenvectors()(static_cast<Eigen::Index>(j), 1);
  }

  SpectralOps ops(op.grid);
  std::vector<double> dphi = ops.derivative(phi, 1);
  const double h = op.grid.spacing();
  const double dphi_norm = l2_grid(dphi, h);
  if (dphi_norm > 0) {
    Eigen::Map<const Eigen::VectorXd> dv(dphi.data(), static_cast<Eigen::Index>(n));
    Eigen::VectorXd Ad = op.A * dv;
    out.zero_residual = std::sqrt(Ad.squaredNorm() * h) / dphi_norm;
    double dot = 0, zn = 0;
    for (std::size_t j = 0; j < n; ++j) {
      dot += out.zero_mode[j] * dphi[j];
      zn += out.zero_mode[j] * out.zero_mode[j];
    }
    out.cos_sim_zero_mode = std::abs(dot) / (std::sqrt(zn) * dphi_norm / std::sqrt(h));
  }
  return out;
}

ChiResult solve_chi_and_index(const LinearizedOperator& op, const std::vector<double>& phi) {
  const auto n = static_cast<std::size_t>(op.grid.n);
  if (phi.size() != n) throw std::invalid_argument("phi size does not match grid");
  {
    double odd = 0, scale = 0;
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(phi[j]));
    for (std::size_t j = 1; j < n - j; ++j)
      odd = std::max(odd, std::abs(phi[j] - phi[n - j]));
    if (scale == 0) throw std::invalid_argument("phi is identically zero");
    if (odd > 1e-8 * scale)
      throw std::invalid_argument("phi must be even for the parity-restricted solve");
  }

  // Even grid functions are determined by their values at j = 0..n/2; columns
  // j and n-j of A act identically on them.
  const std::size_t half = n / 2;
  const auto he = static_cast<Eigen::Index>(half + 1);
  Eigen::MatrixXd B(he, he);
  Eigen::VectorXd rhs(he);
  for (std::size_t i = 0; i <= half; ++i) {
    rhs[static_cast<Eigen::Index>(i)] = phi[i];
    for (std::size_t j = 0; j <= half; ++j) {
      double v = op.A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (j != 0 && j != half) v += op.A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - j));
      B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  ChiResult out;
  out.cond = (smin > 0) ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(out.cond < 1e12)) throw std::runtime_error("near-singular even subspace");

  Eigen::VectorXd y = svd.solve(rhs);
  out.chi.assign(n, 0.0);
  for (std::size_t j = 0; j <= half; ++j) {
    out.chi[j] = y[static_cast<Eigen::Index>(j)];
    if (j != 0 && j != half) out.chi[n - j] = y[static_cast<Eigen::Index>(j)];
  }

  const double h = op.grid.spacing();
  Eigen::Map<const Eigen::VectorXd> cv(out.chi.data(), static_cast<Eigen::Index>(n));
  Eigen::Map<const Eigen::VectorXd> pv(phi.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd resid = op.A * cv - pv;
  out.chi_residual = std::sqrt(resid.squaredNorm() * h) / std::sqrt(pv.squaredNorm() * h);
  out.index_I = h * cv.dot(pv);
  return out;
}

MomentCheck moment_check(const std::vector<double>& speeds, const std::vector<double>& norm_sqs) {
  if (speeds.size() != norm_sqs.size()) throw std::invalid_argument("size mismatch");
  if (speeds.size() < 3) throw std::invalid_argument("need at least 3 speeds");
  MomentCheck out;
  for (std::size_t i = 1; i + 1 < speeds.size(); ++i)
    out.slopes.push_back((norm_sqs[i + 1] - norm_sqs[i - 1]) / (speeds[i + 1] - speeds[i - 1]));
  out.all_positive = std::all_of(out.slopes.begin(), out.slopes.end(),
                                 [](double s) { return s > 0; });
  return out;
}

double remark_consistency(const LinearizedOperator& op, const std::vector<double>& phi_minus,
                          const std::vector<double>& phi_center,
                          const std::vector<double>& phi_plus, double dc) {
  const auto n = static_cast<std::size_t>(op.grid.n);
  if (phi_minus.size() != n || phi_center.size() != n || phi_plus.size() != n)
    throw std::invalid_argument("profile size does not match grid");
  if (dc == 0) throw std::invalid_argument("dc must be nonzero");
  Eigen::VectorXd cand(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j)
    cand[static_cast<Eigen::Index>(j)] = -(phi_plus[j] - phi_minus[j]) / (2 * dc);
  Eigen::Map<const Eigen::VectorXd> pv(phi_center.data(), static_cast<Eigen::Index>(n));
  return (op.A * cand - pv).norm() / pv.norm();
}

}  // namespace kawalab
