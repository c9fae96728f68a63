#include "kawalab/pf2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kawalab/prng.hpp"

namespace kawalab {

KernelSamples sample_kernel(const std::function<double(double)>& fn, double range,
                            int count, const std::string& provenance) {
  if (count < 3 || range <= 0) throw std::invalid_argument("bad kernel sampling parameters");
  if (count % 2 == 0) ++count;  // force a sample exactly at k = 0
  KernelSamples out;
  out.provenance = provenance;
  out.k.resize(static_cast<std::size_t>(count));
  out.g.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double k = -range + 2.0 * range * i / (count - 1);
    out.k[static_cast<std::size_t>(i)] = k;
    out.g[static_cast<std::size_t>(i)] = fn(k);
  }
  // Enforce exact evenness of the sample values (the grid is symmetric by
  // construction; round-off in k would otherwise leak into g).
  for (std::size_t i = 0, j = out.g.size() - 1; i < j; ++i, --j) {
    const double avg = 0.5 * (out.g[i] + out.g[j]);
    out.g[i] = avg;
    out.g[j] = avg;
  }
  return out;
}

double kernel_sech2_transform(double k) {
  if (std::abs(k) < 1e-12) return 2.0;
  return M_PI * k / std::sinh(M_PI * k / 2.0);
}

double kernel_sech4_transform(double k) {
  if (std::abs(k) < 1e-12) return 4.0 / 3.0;
  return M_PI * k * (k * k + 4.0) / (6.0 * std::sinh(M_PI * k / 2.0));
}

double kernel_gaussian(double k) { return std::exp(-k * k); }

double kernel_bimodal(double k) {
  const double t = std::abs(k) - 3.0;
  return std::exp(-t * t);
}

namespace {

// Samples below the smallest normal double carry little or no log precision
// (subnormal quantization), and rapidly decaying kernels underflow to exact
// zero inside |k| <= 40.  All positivity/log-concavity/TP2 verdicts are
// therefore evaluated on the "resolved block": the contiguous run of samples
// with g >= DBL_MIN around k = 0.  Underflowed tails are treated as exact
// zeros, which can never produce a negative 2x2 determinant on their own.
constexpr double kResolved = std::numeric_limits<double>::min();

struct ResolvedBlock {
  bool nonneg = true;       // no sample is negative
  bool contiguous = false;  // resolved samples form one block containing k=0
  bool empty = true;
  std::size_t lo = 0, hi = 0;  // inclusive resolved index range
};

ResolvedBlock find_resolved_block(const KernelSamples& kernel) {
  ResolvedBlock b;
  const std::size_t n = kernel.g.size();
  std::size_t lo = n, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (kernel.g[i] < 0) b.nonneg = false;
    if (kernel.g[i] >= kResolved) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  if (lo > hi) return b;
  b.empty = false;
  b.lo = lo;
  b.hi = hi;
  b.contiguous = true;
  for (std::size_t i = lo; i <= hi; ++i)
    if (!(kernel.g[i] >= kResolved)) b.contiguous = false;
  const std::size_t center = n / 2;
  b.contiguous = b.contiguous && lo <= center && center <= hi;
  return b;
}

void validate_kernel(const KernelSamples& kernel) {
  const std::size_t n = kernel.k.size();
  if (n != kernel.g.size()) throw std::invalid_argument("kernel k/g size mismatch");
  if (n < 3) throw std::invalid_argument("kernel needs at least 3 samples");
  const double span = kernel.k.back();
  if (!(span > 0) || std::abs(kernel.k.front() + span) > 1e-9 * span)
    throw std::invalid_argument("kernel grid must be symmetric about 0");
  const double h0 = kernel.k[1] - kernel.k[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double h = kernel.k[i] - kernel.k[i - 1];
    if (!(h > 0) || std::abs(h - h0) > 1e-9 * h0)
      throw std::invalid_argument("kernel grid must be uniform ascending");
  }
  double gmax = 0;
  for (double v : kernel.g) gmax = std::max(gmax, std::abs(v));
  for (std::size_t i = 0, j = n - 1; i < j; ++i, --j)
    if (std::abs(kernel.g[i] - kernel.g[j]) > 1e-12 * gmax)
      throw std::invalid_argument("kernel is not even");
}

// Catmull-Rom cubic through the values in (idx_lo..idx_hi) of `vals` on the
// uniform grid `k`, with the stencil clamped at the block ends.
double catmull_rom(const std::vector<double>& k, const std::vector<double>& vals,
                   std::size_t idx_lo, std::size_t idx_hi, double x) {
  const double lo = k[idx_lo], hi = k[idx_hi];
  if (x <= lo) return vals[idx_lo];
  if (x >= hi) return vals[idx_hi];
  const double h = (k.back() - k.front()) / static_cast<double>(k.size() - 1);
  auto cell = idx_lo + static_cast<std::size_t>((x - lo) / h);
  const std::size_t j = std::min(std::max(cell, idx_lo), idx_hi - 1);
  const double t = (x - (k.front() + static_cast<double>(j) * h)) / h;
  const double p0 = vals[j > idx_lo ? j - 1 : idx_lo];
  const double p1 = vals[j];
  const double p2 = vals[j + 1];
  const double p3 = vals[j + 2 <= idx_hi ? j + 2 : idx_hi];
  return p1 + 0.5 * t * (p2 - p0 +
                         t * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                              t * (3 * (p1 - p2) + p3 - p0)));
}

// Cubic interpolation of the kernel at x.  For nonnegative kernels the
// interpolation runs on log g over the resolved block (exact for Gaussian
// log-parabolas, near-exact on exponential tails, where direct interpolation
// of g would leave relative errors far above the determinant tolerance);
// outside the block the kernel is below resolution and evaluates to zero.
// Kernels with negative samples fall back to direct interpolation of g.
struct KernelInterp {
  const KernelSamples& kernel;
  ResolvedBlock blk;
  std::vector<double> lg;  // log g over the whole grid; valid on [blk.lo, blk.hi]
  bool log_space = false;

  explicit KernelInterp(const KernelSamples& ks) : kernel(ks), blk(find_resolved_block(ks)) {
    log_space = blk.nonneg && !blk.empty && blk.contiguous;
    if (log_space) {
      lg.assign(kernel.g.size(), 0.0);
      for (std::size_t i = blk.lo; i <= blk.hi; ++i) lg[i] = std::log(kernel.g[i]);
    }
  }

  // g(x), or 0 when x lies in an underflowed tail.
  double operator()(double x) const {
    if (log_space) {
      if (x < kernel.k[blk.lo] || x > kernel.k[blk.hi]) return 0.0;
      return std::exp(catmull_rom(kernel.k, lg, blk.lo, blk.hi, x));
    }
    return catmull_rom(kernel.k, kernel.g, 0, kernel.k.size() - 1, x);
  }
};

}  // namespace

LogConcavityReport positivity_and_logconcavity(const KernelSamples& kernel) {
  validate_kernel(kernel);
  if (kernel.k.size() < 64) throw std::invalid_argument("need at least 64 kernel samples");
  if (kernel.k.back() < 40.0 * (1 - 1e-12))
    throw std::invalid_argument("kernel samples must span |k| <= 40");

  LogConcavityReport out;
  out.min_g = *std::min_element(kernel.g.begin(), kernel.g.end());
  const ResolvedBlock blk = find_resolved_block(kernel);
  out.positive = blk.nonneg && !blk.empty && blk.contiguous;
  if (!out.positive) {
    out.log_concave = false;
    return out;
  }
  std::vector<double> lg(blk.hi - blk.lo + 1);
  for (std::size_t i = blk.lo; i <= blk.hi; ++i) lg[i - blk.lo] = std::log(kernel.g[i]);
  out.max_second_diff = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < lg.size(); ++i) {
    const double d2 = lg[i + 1] - 2 * lg[i] + lg[i - 1];
    if (d2 > out.max_second_diff) {
      out.max_second_diff = d2;
      out.worst_k = kernel.k[blk.lo + i];
    }
  }
  out.log_concave = out.max_second_diff <= 1e-10;
  return out;
}

Tp2Report tp2_sample_check(const KernelSamples& kernel, int num_samples, std::uint64_t seed) {
  validate_kernel(kernel);
  if (num_samples < 1) throw std::invalid_argument("num_samples must be positive");

  const double half = kernel.k.back() / 2.0;
  SplitMix64 rng{seed};
  const KernelInterp g(kernel);

  Tp2Report out;
  out.num_samples = num_samples;
  out.seed = seed;
  double gmax = 0;
  for (double v : kernel.g) gmax = std::max(gmax, std::abs(v));
  out.scale = gmax * gmax;
  out.min_det = std::numeric_limits<double>::infinity();

  for (int i = 0; i < num_samples; ++i) {
    const std::uint64_t base = 4ull * static_cast<std::uint64_t>(i);
    double x1 = rng.uniform(base + 0, -half, half);
    double x2 = rng.uniform(base + 1, -half, half);
    double y1 = rng.uniform(base + 2, -half, half);
    double y2 = rng.uniform(base + 3, -half, half);
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    const double det = g(x1 - y1) * g(x2 - y2) - g(x1 - y2) * g(x2 - y1);
    if (det < out.min_det) {
      out.min_det = det;
      out.argmin[0] = x1;
      out.argmin[1] = x2;
      out.argmin[2] = y1;
      out.argmin[3] = y2;
    }
  }
  out.pass = out.min_det >= -1e-12 * out.scale;
  return out;
}

}  // namespace kawalab
