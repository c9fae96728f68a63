#pragma once
// The explicit solitary-wave families: the published Kawahara closed forms,
// the rederived alternative family, both cubic-equation conventions, their
// analytic norms/indices, Fourier transforms, and pointwise ODE residuals
// evaluated through exact sech-derivative identities.

#include <string>
#include <vector>

#include "kawalab/grid.hpp"
#include "kawalab/sechpoly.hpp"

namespace kawalab {

enum class BranchSource { paper, derived };
const char* to_string(BranchSource s);

struct KawaharaBranchPoint {
  double omega = 0, lambda1 = 0, beta1 = 0, b = 0, gamma1 = 0;
  BranchSource source = BranchSource::paper;

  double profile(double xi) const;       // beta1*sech^2(b xi) + lambda1*sech^4(b xi)
  double norm_sq() const;                // (4b1^2/3 + 32b1*l1/15 + 32l1^2/35)/b
  double index() const;                  // d norm_sq / d omega = 1.5*norm_sq/omega
};

struct MKawaharaBranchPoint {
  double c = 0, alpha = 0, beta2 = 0, gamma2 = 0;
  BranchSource convention = BranchSource::derived;

  double profile(double xi) const;       // beta2*sech^2(alpha xi)
  double norm_sq() const;                // beta2^2*(4/3)/alpha
  double index() const;                  // d norm_sq / d c = norm_sq/(2c)
};

KawaharaBranchPoint paper_kawahara_branch(double omega);
KawaharaBranchPoint derived_kawahara_branch(double omega);
KawaharaBranchPoint kawahara_branch(double omega, BranchSource source);
MKawaharaBranchPoint mkawahara_branch(double c, BranchSource convention);

// gamma1*omega is constant along each family; invert it.
double omega_for_gamma(double gamma1, BranchSource source);

GridProfile profile_eval(const KawaharaBranchPoint& p, const Grid& grid);
GridProfile profile_eval(const MKawaharaBranchPoint& p, const Grid& grid);

// Sup-norm of the stationary ODE residual on the sample points, evaluated via
// the exact identities d^2 sech^n = B(n^2 sech^n - n(n+1) sech^{n+2}) — no
// numerical differentiation enters.
double grid_residual(const KawaharaBranchPoint& p, const std::vector<double>& xi);
double grid_residual(const MKawaharaBranchPoint& p, const std::vector<double>& xi);
// Same for a general sech-polynomial ansatz at numeric parameter values
// (omega, gamma, beta, lambda, B).
double sech_ansatz_grid_residual(const EquationForm& eq, const SechPoly& ansatz,
                                 const std::array<double, kNumSymbols>& vals,
                                 const std::vector<double>& xi);

// Closed-form transforms with the f^(k) = integral f e^{-ikx} dx convention:
// sech^2 -> pi*k/sinh(pi*k/2), sech^4 -> pi*k*(k^2+4)/(6 sinh(pi*k/2)).
double fourier_sech2(double k);  // value 2 at k = 0
double fourier_sech4(double k);  // value 4/3 at k = 0

// Transform of the wave profile (scaling f(b.)^ = f^(k/b)/b).
std::vector<double> profile_fourier(const KawaharaBranchPoint& p, const std::vector<double>& k);
std::vector<double> profile_fourier(const MKawaharaBranchPoint& p, const std::vector<double>& k);
// Transform of phi^2 for the cubic equation (kernel of its PF(2) hypothesis).
std::vector<double> profile_sq_fourier(const MKawaharaBranchPoint& p,
                                       const std::vector<double>& k);

// Admissibility data for the dispersion symbol delta(k) = gamma*k^4 + c2*k^2.
struct SymbolSpec {
  double gamma = 0, c2 = 1;
  double A1 = 0, A2 = 0;  // sandwich constants
  int nu = 4, mu = 4;
  double k0 = 1.0;
  double b_low = 0.0;     // required lower bound of delta

  double delta(double k) const { return gamma * k * k * k * k + c2 * k * k; }

  struct Validation {
    bool ok = false;
    double delta_min = 0;
    double worst_lower_margin = 0;  // min over samples of delta - A1|k|^nu
    double worst_upper_margin = 0;  // min over samples of A2(1+|k|)^mu - delta
  };
  Validation validate(const std::vector<double>& k_samples) const;
};
SymbolSpec make_symbol_spec(double gamma, double c2 = 1.0);

// The benchmark traveling wave: u = sech^4(x - 12/35 t) for the equation with
// third-derivative coefficient 13/420 and fifth-derivative coefficient 1/1680.
struct BenchmarkWave {
  double gamma = 1.0 / 1680.0;
  double c2 = 13.0 / 420.0;
  double speed = 12.0 / 35.0;
  double b = 1.0;  // profile() = sech^4(b xi)
  double profile(double xi) const;
  EquationForm equation_form() const;  // custom(13/420, 1/2, 2)
};

}  // namespace kawalab
