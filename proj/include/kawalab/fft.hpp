#pragma once
// Thin RAII wrapper over FFTW complex transforms plus the handful of spectral
// primitives the solvers share (derivatives, symbol application, dealiased
// powers). Plans use FFTW_ESTIMATE | FFTW_UNALIGNED: deterministic plan choice
// and no alignment constraints on caller buffers.

#include <complex>
#include <memory>
#include <vector>

#include "kawalab/grid.hpp"

namespace kawalab {

using Cvec = std::vector<std::complex<double>>;

class Fft {
 public:
  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }
  void forward(Cvec& a) const;   // unnormalized DFT
  void inverse(Cvec& a) const;   // normalized by 1/n

 private:
  int n_;
  void* fwd_;  // fftw_plan
  void* bwd_;
};

// Spectral toolbox bound to one grid (owns FFTs of size n and 2n).
class SpectralOps {
 public:
  explicit SpectralOps(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& k() const { return k_; }

  Cvec to_hat(const std::vector<double>& u) const;          // unnormalized
  std::vector<double> from_hat(const Cvec& uhat) const;     // real part of ifft

  // d^order/dx^order via multiplication by (ik)^order.
  std::vector<double> derivative(const std::vector<double>& u, int order) const;

  // u^q computed on a 2x zero-padded grid and truncated back (alias-free for
  // q <= 3 with the top-half padding).
  std::vector<double> dealiased_power(const std::vector<double>& u, int q) const;

 private:
  Grid grid_;
  std::vector<double> k_;
  std::shared_ptr<Fft> fft_, fft2_;
};

}  // namespace kawalab
