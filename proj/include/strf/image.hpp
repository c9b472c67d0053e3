#pragma once

#include <Eigen/Dense>

namespace strf {

/// Pixel pipeline runs in 32-bit float; statistics accumulate in 64-bit.
/// Index convention: img(y, x) with y in [0, rows) and x in [0, cols).
using Image = Eigen::ArrayXXf;
using ImageD = Eigen::ArrayXXd;

/// Mirror (reflect-101) index fold: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
/// Defined for any offset; degenerate n == 1 pins to 0.
inline Eigen::Index mirror_index(Eigen::Index i, Eigen::Index n) {
  if (n == 1) return 0;
  const Eigen::Index p = 2 * (n - 1);
  i = ((i % p) + p) % p;
  return i < n ? i : p - i;
}

inline bool same_shape(const Image& a, const Image& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

}  // namespace strf
