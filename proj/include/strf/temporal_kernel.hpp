#pragma once

#include <vector>

#include "strf/errors.hpp"

namespace strf {

/// Exponent convention for the intermediate temporal variance levels.
/// LinearInC:    tau_k = c^(k-K) * tau_K
/// QuadraticInC: tau_k = c^(2(k-K)) * tau_K
enum class TauDistribution { LinearInC, QuadraticInC };

/// Cascade of K truncated exponential filters whose composed temporal
/// variance is tau_K. Units of mu are the square root of the units of
/// tau_K (internally the pipeline works in frames, see TemporalCascade).
struct KernelSpec {
  double tau_K = 0.0;  // composed temporal variance
  double c = 2.0;      // scale distribution ratio, > 1
  int K = 0;           // number of cascade stages
  std::vector<double> mu;  // per-stage time constants, mu_k = sqrt(tau_k - tau_{k-1})
  TauDistribution distribution = TauDistribution::LinearInC;

  /// Intermediate variance of level k (1-based), tau_0 = 0.
  double tau_level(int k) const;
};

/// Splits a target temporal variance into K cascade time constants with
/// a logarithmic distribution of the intermediate variances.
KernelSpec compute_time_constants(double tau_K, double c, int K,
                                  TauDistribution dist = TauDistribution::LinearInC);

/// Samples the composed time-causal kernel h(t; tau) on t_grid by numerically
/// convolving the K truncated exponentials (exact integration of a piecewise
/// linear interpolant, stage by stage). t_grid must be nonnegative ascending.
std::vector<double> temporal_kernel_explicit(const KernelSpec& spec,
                                             const std::vector<double>& t_grid);

/// Trapezoidal moments of a sampled kernel: mass, mean, variance.
struct KernelMoments {
  double mass = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};
KernelMoments kernel_moments(const std::vector<double>& t_grid,
                             const std::vector<double>& values);

}  // namespace strf
