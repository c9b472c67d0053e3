#include "strf/temporal_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace strf {

double KernelSpec::tau_level(int k) const {
  if (k <= 0) return 0.0;
  const double e = (distribution == TauDistribution::LinearInC) ? double(k - K)
                                                                : 2.0 * double(k - K);
  return std::pow(c, e) * tau_K;
}

KernelSpec compute_time_constants(double tau_K, double c, int K, TauDistribution dist) {
  if (tau_K <= 0.0) throw NonPositiveVariance("tau_K must be positive");
  if (c <= 1.0) throw BadRatio("distribution parameter c must exceed 1");
  if (K < 1) throw BadParams("K must be at least 1");

  KernelSpec spec;
  spec.tau_K = tau_K;
  spec.c = c;
  spec.K = K;
  spec.distribution = dist;
  spec.mu.resize(K);
  double prev = 0.0;
  for (int k = 1; k <= K; ++k) {
    const double tk = spec.tau_level(k);
    spec.mu[k - 1] = std::sqrt(tk - prev);
    prev = tk;
  }
  return spec;
}

namespace {

// One pass of y' = -y/mu + x/mu over a uniform grid, integrating the
// piecewise linear interpolant of x exactly:
//   y[n] = alpha*y[n-1] + (c1 - c2)*x[n] + c2*x[n-1]
// with alpha = exp(-dt/mu), c1 = 1 - alpha, c2 = (1 - alpha*(1+a))/a, a = dt/mu.
void convolve_exponential(std::vector<double>& x, double mu, double dt) {
  const double a = dt / mu;
  const double alpha = std::exp(-a);
  const double c1 = 1.0 - alpha;
  const double c2 = (1.0 - alpha * (1.0 + a)) / a;
  double prev_in = 0.0;  // kernel support starts at t = 0; x(t<0) = 0
  double y = 0.0;
  for (double& v : x) {
    const double cur = v;
    y = alpha * y + (c1 - c2) * cur + c2 * prev_in;
    prev_in = cur;
    v = y;
  }
}

}  // namespace

std::vector<double> temporal_kernel_explicit(const KernelSpec& spec,
                                             const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw EmptyGrid();
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] <= t_grid[i - 1]))
      throw BadParams("t_grid must be nonnegative ascending");
  }

  const double mu1 = spec.mu.front();
  if (spec.K == 1) {
    std::vector<double> out(t_grid.size());
    for (size_t i = 0; i < t_grid.size(); ++i) out[i] = std::exp(-t_grid[i] / mu1) / mu1;
    return out;
  }

  // Internal uniform grid fine relative to the sharpest stage, then linear
  // interpolation onto the requested points.
  const double mu_min = *std::min_element(spec.mu.begin(), spec.mu.end());
  const double t_max = t_grid.back();
  double dt = mu_min / 50.0;
  const size_t max_samples = 2'000'000;
  if (t_max / dt > double(max_samples)) dt = t_max / double(max_samples);
  const size_t n = size_t(std::ceil(t_max / dt)) + 2;

  std::vector<double> h(n);
  for (size_t i = 0; i < n; ++i) h[i] = std::exp(-(double(i) * dt) / mu1) / mu1;
  for (int k = 1; k < spec.K; ++k) convolve_exponential(h, spec.mu[k], dt);

  std::vector<double> out(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    const double pos = t_grid[i] / dt;
    const size_t j = std::min(size_t(pos), n - 2);
    const double w = pos - double(j);
    out[i] = (1.0 - w) * h[j] + w * h[j + 1];
  }
  return out;
}

KernelMoments kernel_moments(const std::vector<double>& t_grid,
                             const std::vector<double>& values) {
  KernelMoments m;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (size_t i = 1; i < t_grid.size(); ++i) {
    const double dt = t_grid[i] - t_grid[i - 1];
    const double f0 = values[i - 1], f1 = values[i];
    const double t0 = t_grid[i - 1], t1 = t_grid[i];
    s0 += 0.5 * dt * (f0 + f1);
    s1 += 0.5 * dt * (f0 * t0 + f1 * t1);
    s2 += 0.5 * dt * (f0 * t0 * t0 + f1 * t1 * t1);
  }
  m.mass = s0;
  if (s0 > 0.0) {
    m.mean = s1 / s0;
    m.variance = s2 / s0 - m.mean * m.mean;
  }
  return m;
}

}  // namespace strf
