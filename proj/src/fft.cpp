#include "kawalab/fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace kawalab {

Fft::Fft(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("fft size");
  Cvec buf(n);
  auto* p = reinterpret_cast<fftw_complex*>(buf.data());
  fwd_ = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft::~Fft() {
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void Fft::forward(Cvec& a) const {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), p, p);
}

void Fft::inverse(Cvec& a) const {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), p, p);
  const double s = 1.0 / n_;
  for (auto& z : a) z *= s;
}

SpectralOps::SpectralOps(const Grid& grid)
    : grid_(grid),
      k_(grid.wavenumbers()),
      fft_(std::make_shared<Fft>(grid.n)),
      fft2_(std::make_shared<Fft>(2 * grid.n)) {}

Cvec SpectralOps::to_hat(const std::vector<double>& u) const {
  Cvec a(u.begin(), u.end());
  fft_->forward(a);
  return a;
}

std::vector<double> SpectralOps::from_hat(const Cvec& uhat) const {
  Cvec a = uhat;
  fft_->inverse(a);
  std::vector<double> u(a.size());
  for (size_t i = 0; i < a.size(); ++i) u[i] = a[i].real();
  return u;
}

std::vector<double> SpectralOps::derivative(const std::vector<double>& u, int order) const {
  Cvec a = to_hat(u);
  for (int j = 0; j < grid_.n; ++j) {
    std::complex<double> ik(0.0, k_[j]);
    std::complex<double> m = 1.0;
    for (int o = 0; o < order; ++o) m *= ik;
    a[j] *= m;
  }
  return from_hat(a);
}

std::vector<double> SpectralOps::dealiased_power(const std::vector<double>& u, int q) const {
  const int n = grid_.n;
  Cvec a = to_hat(u);
  Cvec ap(2 * n, std::complex<double>(0.0, 0.0));
  for (int j = 0; j < n / 2; ++j) ap[j] = a[j];
  for (int j = 1; j <= n / 2; ++j) ap[2 * n - j] = a[n - j];
  fft2_->inverse(ap);
  for (auto& z : ap) z *= 2.0;  // padded ifft halves grid values
  for (auto& z : ap) {
    double v = z.real(), w = 1.0;
    for (int i = 0; i < q; ++i) w *= v;
    z = w;
  }
  fft2_->forward(ap);
  Cvec w(n, std::complex<double>(0.0, 0.0));
  for (int j = 0; j < n / 2; ++j) w[j] = ap[j] * 0.5;
  for (int j = 1; j <= n / 2; ++j) w[n - j] = ap[2 * n - j] * 0.5;
  Cvec out = w;
  fft_->inverse(out);
  std::vector<double> res(n);
  for (int j = 0; j < n; ++j) res[j] = out[j].real();
  return res;
}

}  // namespace kawalab
