#pragma once
// Pseudospectral time integration of
//   u_t + a (u^q)_x + c2 u_xxx - gamma u_xxxxx = 0
// with a fourth-order exponential integrator (the k^5 linear term is stiff),
// conserved-quantity tracking, and the H^2 orbital-distance diagnostic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kawalab/fft.hpp"
#include "kawalab/grid.hpp"

namespace kawalab {

struct EvoEquation {
  std::string name = "custom";
  double c2 = 1.0;    // u_xxx coefficient
  double gamma = 0;   // coefficient of -u_xxxxx
  double a = 0.5;     // flux coefficient in a (u^q)_x
  int q = 2;

  static EvoEquation kawahara(double gamma1);     // u u_x nonlinearity
  static EvoEquation mkawahara(double gamma2);    // 3 u^2 u_x nonlinearity
  static EvoEquation kdv();
  static EvoEquation mkdv();
  static EvoEquation benchmark();                 // c2 = 13/420, gamma = 1/1680
  static EvoEquation linear_only(double c2 = 1.0, double gamma = 1.0);
  static EvoEquation custom(double c2, double gamma, double a, int q);
};

struct BlowUpError : std::runtime_error {
  BlowUpError(const std::string& msg, double t) : std::runtime_error(msg), last_good_time(t) {}
  double last_good_time;
};

struct DiagnosticsRow {
  double t = 0;
  double mass = 0;
  double momentum = 0;
  double energy = 0;
  double orbital_dist = 0;
  double best_shift = 0;
};

struct Invariants {
  double mass = 0;      // integral of u
  double momentum = 0;  // integral of u^2
  double energy = 0;    // integral of a u^{q+1}/(q+1) - c2 u_x^2/2 - gamma u_xx^2/2
};

Invariants invariants(const Grid& grid, const EvoEquation& eq, const std::vector<double>& u);

// H^2 norm with the convention ||f||^2 = (1/2pi) * integral (1+k^2)^2 |fhat|^2 dk,
// discretized as (2L/N^2) * sum_j (1+k_j^2)^2 |F_j|^2, so the k^0 part equals
// the spatial L^2 norm.
double h2_norm(const Grid& grid, const std::vector<double>& f);

struct OrbitalDistance {
  double best_shift = 0;  // s* in [-L, L): u is closest to phi(. - s*)
  double distance = 0;    // H^2 distance at the optimal shift
};

// Maximizes the H^2 cross-correlation over grid shifts by FFT, refines by
// golden-section search to 1e-10 of a cell, then polishes the root of the
// correlation derivative by bisection. Throws on a zero reference profile.
OrbitalDistance orbital_distance(const Grid& grid, const std::vector<double>& u,
                                 const std::vector<double>& phi);

// One ETDRK4 step with contour-averaged coefficients, precomputed per
// (equation, grid, dt). The state is kept in Fourier space with the top third
// of modes zeroed; q = 2 products use the 2/3 truncation rule, higher powers
// the zero-padded product rule.
class Etdrk4 {
 public:
  Etdrk4(const EvoEquation& eq, const Grid& grid, double dt);

  void step(Cvec& uhat) const;
  void mask(Cvec& uhat) const;  // zero the highest third of modes
  const SpectralOps& ops() const { return ops_; }
  double dt() const { return dt_; }

 private:
  Cvec nonlinear(const Cvec& uhat) const;

  EvoEquation eq_;
  Grid grid_;
  double dt_;
  SpectralOps ops_;
  Cvec E_, E2_, Q_, f1_, f2_, f3_;
  std::vector<char> keep_;
};

// Integrate to time T with steps of dt, appending a DiagnosticsRow every
// sample_every steps (and at t = 0 and t = T). `reference` (nullable) enables
// the orbital-distance columns. Throws BlowUpError on NaN/Inf.
std::vector<DiagnosticsRow> evolve_with_diagnostics(const EvoEquation& eq, const Grid& grid,
                                                    std::vector<double>& u, double T, double dt,
                                                    int sample_every,
                                                    const std::vector<double>* reference);

// Convenience wrapper returning only the final state.
std::vector<double> integrate(const EvoEquation& eq, const Grid& grid,
                              const std::vector<double>& u0, double T, double dt);

struct ExperimentSummary {
  std::vector<DiagnosticsRow> rows;
  double d0 = 0;
  double max_dist = 0;
  double max_over_d0 = 0;
  double late_over_early = 0;        // mean distance over [3T/4,T] / mean over (0,T/4]
  // Max |u|/peak seen in the band antipodal to the wave's current position
  // (radiation that wrapped around the periodic domain).
  double boundary_contamination = 0;
  bool domain_contaminated = false;  // boundary_contamination > 1e-10
};

// Perturbation kinds: "scale" -> u0 = (1+eps) phi; "random" -> phi plus a
// truncated Fourier series on modes 1..8 with counter-based PRNG coefficients,
// scaled so the perturbation's H^2 norm is eps * ||phi||_H2.
ExperimentSummary stability_experiment(const EvoEquation& eq, const Grid& grid,
                                       const std::vector<double>& phi,
                                       const std::string& perturbation, double eps,
                                       std::uint64_t seed, double T, double dt,
                                       int sample_every);

}  // namespace kawalab
