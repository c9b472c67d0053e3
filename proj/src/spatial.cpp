#include "strf/spatial.hpp"

#include <cmath>

#include "strf/errors.hpp"

namespace strf {

SpatialScaleSpec SpatialScaleSpec::from_sigma(double sigma) {
  if (sigma <= 0.0) throw NonPositiveScale("sigma_s must be positive");
  return {sigma, int(std::ceil(4.0 * sigma))};
}

std::vector<float> gaussian_taps(const SpatialScaleSpec& spec) {
  if (spec.sigma_s <= 0.0) throw NonPositiveScale("sigma_s must be positive");
  const int r = spec.kernel_radius;
  std::vector<double> w(size_t(2 * r + 1));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    const double v = std::exp(-0.5 * double(i) * double(i) / (spec.sigma_s * spec.sigma_s));
    w[size_t(i + r)] = v;
    sum += v;
  }
  std::vector<float> taps(w.size());
  for (size_t i = 0; i < w.size(); ++i) taps[i] = float(w[i] / sum);
  return taps;
}

namespace {

// Horizontal pass (along x = columns) with mirror borders.
Image convolve_rows(const Image& in, const std::vector<float>& taps) {
  const int r = int(taps.size() / 2);
  const Eigen::Index h = in.rows(), w = in.cols();
  Image out(h, w);
  for (Eigen::Index x = 0; x < w; ++x) {
    const bool interior = (x - r >= 0) && (x + r < w);
    if (interior) {
      Eigen::ArrayXf acc = Eigen::ArrayXf::Zero(h);
      for (int i = -r; i <= r; ++i) acc += taps[size_t(i + r)] * in.col(x + i);
      out.col(x) = acc;
    } else {
      Eigen::ArrayXf acc = Eigen::ArrayXf::Zero(h);
      for (int i = -r; i <= r; ++i) acc += taps[size_t(i + r)] * in.col(mirror_index(x + i, w));
      out.col(x) = acc;
    }
  }
  return out;
}

Image convolve_cols(const Image& in, const std::vector<float>& taps) {
  const int r = int(taps.size() / 2);
  const Eigen::Index h = in.rows(), w = in.cols();
  Image out(h, w);
  for (Eigen::Index y = 0; y < h; ++y) {
    const bool interior = (y - r >= 0) && (y + r < h);
    Eigen::Matrix<float, 1, Eigen::Dynamic> acc =
        Eigen::Matrix<float, 1, Eigen::Dynamic>::Zero(w);
    for (int i = -r; i <= r; ++i) {
      const Eigen::Index yy = interior ? y + i : mirror_index(y + i, h);
      acc += taps[size_t(i + r)] * in.matrix().row(yy);
    }
    out.row(y) = acc.array();
  }
  return out;
}

}  // namespace

Image spatial_smooth(const Image& frame, const SpatialScaleSpec& spec) {
  const auto taps = gaussian_taps(spec);
  return convolve_cols(convolve_rows(frame, taps), taps);
}

namespace {

Image derivative_1d(const Image& in, int order, bool along_x) {
  const Eigen::Index h = in.rows(), w = in.cols();
  Image out(h, w);
  // interior via shifted blocks, borders by mirror
  if (along_x) {
    if (order == 1) {
      if (w >= 3)
        out.block(0, 1, h, w - 2) = 0.5f * (in.block(0, 2, h, w - 2) - in.block(0, 0, h, w - 2));
      for (Eigen::Index x : {Eigen::Index(0), w - 1})
        out.col(x) =
            0.5f * (in.col(mirror_index(x + 1, w)) - in.col(mirror_index(x - 1, w)));
    } else {
      if (w >= 3)
        out.block(0, 1, h, w - 2) = in.block(0, 2, h, w - 2) - 2.0f * in.block(0, 1, h, w - 2) +
                                    in.block(0, 0, h, w - 2);
      for (Eigen::Index x : {Eigen::Index(0), w - 1})
        out.col(x) = in.col(mirror_index(x + 1, w)) - 2.0f * in.col(x) +
                     in.col(mirror_index(x - 1, w));
    }
  } else {
    if (order == 1) {
      if (h >= 3)
        out.block(1, 0, h - 2, w) = 0.5f * (in.block(2, 0, h - 2, w) - in.block(0, 0, h - 2, w));
      for (Eigen::Index y : {Eigen::Index(0), h - 1})
        out.row(y) =
            0.5f * (in.row(mirror_index(y + 1, h)) - in.row(mirror_index(y - 1, h)));
    } else {
      if (h >= 3)
        out.block(1, 0, h - 2, w) = in.block(2, 0, h - 2, w) - 2.0f * in.block(1, 0, h - 2, w) +
                                    in.block(0, 0, h - 2, w);
      for (Eigen::Index y : {Eigen::Index(0), h - 1})
        out.row(y) = in.row(mirror_index(y + 1, h)) - 2.0f * in.row(y) +
                     in.row(mirror_index(y - 1, h));
    }
  }
  return out;
}

}  // namespace

Image spatial_derivative(const Image& frame, int m1, int m2) {
  if (m1 < 0 || m2 < 0 || m1 + m2 > 2)
    throw BadParams("spatial derivative orders limited to m1 + m2 <= 2");
  Image out = frame;
  if (m1 > 0) out = derivative_1d(out, m1, /*along_x=*/true);
  if (m2 > 0) out = derivative_1d(out, m2, /*along_x=*/false);
  return out;
}

double scale_normalization_factor(double s, double tau, int m1, int m2, int n,
                                  double gamma_s, double gamma_tau) {
  if (s <= 0.0 || (n > 0 && tau <= 0.0)) throw NonPositiveScale();
  double f = std::pow(s, double(m1 + m2) * gamma_s * 0.5);
  if (n > 0) f *= std::pow(tau, double(n) * gamma_tau * 0.5);
  return f;
}

Image scale_normalize(const Image& raw, double s, double tau, int m1, int m2, int n,
                      double gamma_s, double gamma_tau) {
  return raw * float(scale_normalization_factor(s, tau, m1, m2, n, gamma_s, gamma_tau));
}

}  // namespace strf
