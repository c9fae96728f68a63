#include "kawalab/petviashvili.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kawalab {

namespace {

double sup_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

// Enforce the even symmetry phi(x_j) = phi(x_{(n-j) mod n}) each iteration so
// round-off cannot excite the odd translation mode.
void symmetrize(std::vector<double>& v) {
  const std::size_t n = v.size();
  for (std::size_t j = 1; j < n - j; ++j) {
    const double avg = 0.5 * (v[j] + v[n - j]);
    v[j] = avg;
    v[n - j] = avg;
  }
}

}  // namespace

std::vector<double> gaussian_bump(const Grid& grid, double amplitude, double width) {
  std::vector<double> out(static_cast<std::size_t>(grid.n));
  const auto xs = grid.points();
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double t = xs[j] / width;
    out[j] = amplitude * std::exp(-t * t);
  }
  return out;
}

std::vector<double> sech2_bump(const Grid& grid, double amplitude, double inv_width) {
  std::vector<double> out(static_cast<std::size_t>(grid.n));
  const auto xs = grid.points();
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double s = 1.0 / std::cosh(inv_width * xs[j]);
    out[j] = amplitude * s * s;
  }
  return out;
}

Grid auto_domain(double expected_b, int n) {
  if (!(expected_b > 0)) throw std::invalid_argument("expected_b must be positive");
  double L = 20.0 / expected_b;
  return Grid{n, L};
}

std::pair<GridProfile, SolveReport> petviashvili_solve(const PetviashviliParams& params,
                                                       const Grid& grid,
                                                       const std::vector<double>& init) {
  if (init.size() != static_cast<std::size_t>(grid.n))
    throw std::invalid_argument("init size does not match grid");
  if (params.q < 2) throw std::invalid_argument("nonlinearity power q must be >= 2");
  if (params.a == 0) throw std::invalid_argument("nonlinearity coefficient a must be nonzero");

  SpectralOps ops(grid);
  const auto& k = ops.k();
  const std::size_t n = k.size();

  // Symbol of (M + c): delta(k) + c = gamma k^4 + c2 k^2 + c.
  std::vector<double> sym(n);
  double sym_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double k2 = k[j] * k[j];
    sym[j] = params.gamma * k2 * k2 + params.c2 * k2 + params.speed;
    sym_min = std::min(sym_min, sym[j]);
  }
  if (!(sym_min > 0))
    throw std::invalid_argument(
        "operator not positive on this grid: min symbol value " + std::to_string(sym_min) +
        "; reduce speed or adjust gamma/c2");

  // Validate the seed: nonzero and even about x = 0.
  if (sup_norm(init) == 0) throw std::invalid_argument("initial guess is identically zero");
  {
    double odd = 0;
    for (std::size_t j = 1; j < n - j; ++j)
      odd = std::max(odd, std::abs(init[j] - init[n - j]));
    if (odd > 1e-8 * sup_norm(init))
      throw std::invalid_argument("initial guess must be even about x = 0");
  }

  const double theta = static_cast<double>(params.q) / (params.q - 1);

  auto apply_inverse = [&](const std::vector<double>& rhs) {
    Cvec hat = ops.to_hat(rhs);
    for (std::size_t j = 0; j < n; ++j) hat[j] /= sym[j];
    return ops.from_hat(hat);
  };
  auto apply_forward = [&](const std::vector<double>& u) {
    Cvec hat = ops.to_hat(u);
    for (std::size_t j = 0; j < n; ++j) hat[j] *= sym[j];
    return ops.from_hat(hat);
  };
  auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += u[j] * v[j];
    return s * grid.spacing();
  };

  std::vector<double> phi = init;
  symmetrize(phi);

  SolveReport report;
  bool hit_tol = false;
  int polish_left = params.polish_max;
  const char* divergence = nullptr;

  for (int it = 0; it < params.max_iter; ++it) {
    std::vector<double> nl = ops.dealiased_power(phi, params.q);
    for (double& v : nl) v *= params.a;

    const double num = inner(apply_forward(phi), phi);
    const double den = inner(nl, phi);
    if (den == 0 || !std::isfinite(den) || !std::isfinite(num)) {
      divergence = "multiplier degenerate (zero or non-finite inner product)";
      break;
    }
    const double m = num / den;
    report.multiplier_history.push_back(m);
    report.multiplier_final = m;
    report.iterations = it + 1;

    std::vector<double> next = apply_inverse(nl);
    const double scale = std::pow(m, theta);
    if (!std::isfinite(scale)) {
      divergence = "multiplier power overflowed";
      break;
    }
    for (double& v : next) v *= scale;
    symmetrize(next);

    const double step = sup_diff(next, phi);
    phi = std::move(next);
    if (!std::isfinite(sup_norm(phi))) {
      divergence = "iterate became non-finite";
      break;
    }

    if (!hit_tol && std::abs(m - 1.0) < params.tol) hit_tol = true;
    if (hit_tol) {
      // Keep iterating briefly after the multiplier settles: the profile
      // itself still improves by orders of magnitude over a few more sweeps.
      if (step < 0.1 * params.tol * std::max(1.0, sup_norm(phi)) || polish_left == 0) {
        report.converged = true;
        break;
      }
      --polish_left;
    }
  }

  // Final residuals on the converged (or last) iterate.
  {
    std::vector<double> nl = ops.dealiased_power(phi, params.q);
    for (double& v : nl) v *= params.a;
    const std::vector<double> pre = apply_inverse(nl);
    double rs = 0;
    for (std::size_t j = 0; j < n; ++j) rs = std::max(rs, std::abs(phi[j] - pre[j]));
    report.residual_sup = rs;
    const std::vector<double> lhs = apply_forward(phi);
    double rr = 0;
    for (std::size_t j = 0; j < n; ++j) rr = std::max(rr, std::abs(lhs[j] - nl[j]));
    report.residual_sup_raw = rr;
  }

  if (divergence) throw SolveFailure(std::string("petviashvili diverged: ") + divergence, report);
  if (!report.converged)
    throw SolveFailure("petviashvili did not converge within max_iter", report);

  return {GridProfile{grid, std::move(phi)}, std::move(report)};
}

SweepResult continuation_sweep(double gamma, double c2, int q, double a,
                               const std::vector<double>& speeds, const Grid& grid,
                               const std::vector<double>& init, double tol) {
  if (speeds.empty()) throw std::invalid_argument("speeds must be nonempty");
  for (std::size_t i = 1; i < speeds.size(); ++i)
    if (!(speeds[i] > speeds[i - 1]))
      throw std::invalid_argument("speeds must be strictly ascending");

  SweepResult out;
  std::vector<double> warm = init;
  for (double c : speeds) {
    PetviashviliParams p;
    p.gamma = gamma;
    p.c2 = c2;
    p.speed = c;
    p.q = q;
    p.a = a;
    p.tol = tol;
    try {
      auto [prof, rep] = petviashvili_solve(p, grid, warm);
      double nsq = 0;
      for (double v : prof.values) nsq += v * v;
      nsq *= grid.spacing();
      out.points.push_back({c, nsq, rep.iterations});
      warm = prof.values;
    } catch (const SolveFailure& f) {
      out.aborted = true;
      out.error = f.what();
      break;
    } catch (const std::invalid_argument& e) {
      out.aborted = true;
      out.error = e.what();
      break;
    }
  }
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    const auto& lo = out.points[i - 1];
    const auto& hi = out.points[i];
    out.slopes.push_back((hi.norm_sq - lo.norm_sq) / (hi.speed - lo.speed));
  }
  return out;
}

}  // namespace kawalab
