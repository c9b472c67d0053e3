#pragma once

#include <vector>

#include "strf/image.hpp"

namespace strf {

/// Sampled-Gaussian smoothing kernel, truncated at ceil(4*sigma).
struct SpatialScaleSpec {
  double sigma_s = 0.0;   // standard deviation in pixels
  int kernel_radius = 0;  // truncation radius in pixels

  static SpatialScaleSpec from_sigma(double sigma);
};

/// Normalized sampled Gaussian taps for offsets [-radius, radius].
std::vector<float> gaussian_taps(const SpatialScaleSpec& spec);

/// Separable Gaussian smoothing with mirror (reflect-101) borders.
Image spatial_smooth(const Image& frame, const SpatialScaleSpec& spec);

/// Central-difference spatial derivative of order (m1, m2), m1 + m2 <= 2.
/// First order uses [-1/2, 0, 1/2], second order [1, -2, 1]; mixed orders
/// compose the two. Mirror borders.
Image spatial_derivative(const Image& frame, int m1, int m2);

/// Scale-normalization factor s^((m1+m2)*gamma_s/2) * tau^(n*gamma_tau/2).
double scale_normalization_factor(double s, double tau, int m1, int m2, int n,
                                  double gamma_s = 1.0, double gamma_tau = 1.0);

/// Pointwise scale normalization of a raw derivative response.
Image scale_normalize(const Image& raw, double s, double tau, int m1, int m2, int n,
                      double gamma_s = 1.0, double gamma_tau = 1.0);

}  // namespace strf
