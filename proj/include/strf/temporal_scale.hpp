#pragma once

#include <cstdint>
#include <vector>

#include "strf/image.hpp"
#include "strf/temporal_kernel.hpp"

namespace strf {

/// Fixed-depth ring of recent frames. index 0 is the most recent push.
class FrameRing {
 public:
  explicit FrameRing(int depth = 3) : depth_(depth) {}

  void push(Image frame);
  int size() const { return int(frames_.size()); }
  int depth() const { return depth_; }
  /// age = 0 is the current frame, age = 1 the previous one, ...
  const Image& at(int age) const;
  void clear() { frames_.clear(); }

 private:
  int depth_;
  std::vector<Image> frames_;  // most recent first
};

/// Per-stream recursive memory for one temporal scale cascade.
///
/// The streaming update is the standard time-recursive first-order smoothing
///   L(t; tau_k) = L(t-1; tau_k) + a_k (L(t; tau_{k-1}) - L(t-1; tau_k))
/// whose per-stage coefficient a_k = 1/(1 + mu~_k) is chosen so that the
/// discrete impulse-response variance of stage k equals mu_k^2. Variances of
/// cascaded stages add, so the composed discrete kernel carries temporal
/// variance tau_K exactly, matching the explicit continuous cascade. DC gain
/// is 1 per stage, so constants pass through unchanged.
class TemporalScaleState {
 public:
  TemporalScaleState() = default;
  TemporalScaleState(const KernelSpec& spec, Eigen::Index rows, Eigen::Index cols);

  bool initialized() const { return !levels_.empty(); }
  int stages() const { return spec_.K; }
  std::int64_t frames_seen() const { return frames_seen_; }
  const KernelSpec& spec() const { return spec_; }

  /// levels[0] is the current input frame, levels[k] the smoothing at tau_k.
  const Image& level(int k) const { return levels_.at(size_t(k)); }
  /// Snapshot of the levels before the latest update.
  const Image& prev_level(int k) const { return prev_levels_.at(size_t(k)); }
  /// Ring of the last smoothed frames at tau_K, for temporal differencing.
  const FrameRing& history() const { return history_; }

  void reset();

  /// Map a continuous-cascade time constant onto the discrete recursion
  /// coefficient: solves mu~(1 + mu~) = mu^2, returns 1/(1 + mu~).
  static double stage_coefficient(double mu);

 private:
  KernelSpec spec_;
  std::vector<double> coeff_;       // a_k per stage
  std::vector<Image> levels_;       // K+1 buffers, k=0 the input
  std::vector<Image> prev_levels_;  // levels at t-1
  FrameRing history_{3};
  std::int64_t frames_seen_ = 0;

  friend void temporal_smooth_step(TemporalScaleState& state, const Image& frame);
};

/// Advances the cascade by one frame in O(pixels * K). The first frame seeds
/// every level (the recursion starts from a settled state for that input).
void temporal_smooth_step(TemporalScaleState& state, const Image& frame);

/// Backward temporal difference over a ring of smoothed frames:
/// n=0 identity, n=1 weights [1,-1], n=2 weights [1,-2,1] into the past.
Image temporal_difference(const FrameRing& ring, int n);

}  // namespace strf
