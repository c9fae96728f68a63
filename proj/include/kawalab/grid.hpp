#pragma once
// Uniform periodic grid on [-L, L) with FFT-ordered wavenumbers k_j = pi*j/L.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kawalab {

struct Grid {
  int n = 0;        // number of points (power of two, >= 64)
  double L = 0.0;   // half-length of the periodic box

  Grid() = default;
  Grid(int n_, double L_) : n(n_), L(L_) {
    if (n < 64 || (n & (n - 1)) != 0) throw std::invalid_argument("grid size must be a power of two >= 64");
    if (L <= 0) throw std::invalid_argument("grid half-length must be positive");
  }

  double spacing() const { return 2.0 * L / n; }
  double x(int j) const { return -L + j * spacing(); }

  std::vector<double> points() const {
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j) xs[j] = x(j);
    return xs;
  }

  // Signed wavenumbers in standard FFT ordering: j = 0..n/2-1, -n/2..-1.
  std::vector<double> wavenumbers() const {
    std::vector<double> ks(n);
    const double dk = 3.14159265358979323846 / L;
    for (int j = 0; j < n; ++j) {
      int js = (j < n / 2) ? j : j - n;
      ks[j] = dk * js;
    }
    return ks;
  }

  bool operator==(const Grid& o) const { return n == o.n && L == o.L; }
};

struct GridProfile {
  Grid grid;
  std::vector<double> values;
};

}  // namespace kawalab
