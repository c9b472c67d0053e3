#include "strf/temporal_scale.hpp"

#include <cmath>

#include "strf/errors.hpp"

namespace strf {

void FrameRing::push(Image frame) {
  frames_.insert(frames_.begin(), std::move(frame));
  if (int(frames_.size()) > depth_) frames_.pop_back();
}

const Image& FrameRing::at(int age) const {
  if (age < 0 || age >= int(frames_.size()))
    throw InsufficientHistory("frame ring holds " + std::to_string(frames_.size()) +
                              " frames, requested age " + std::to_string(age));
  return frames_[size_t(age)];
}

double TemporalScaleState::stage_coefficient(double mu) {
  // discrete stage variance mu~(1+mu~) matched to the continuous mu^2
  const double mu_d = 0.5 * (std::sqrt(1.0 + 4.0 * mu * mu) - 1.0);
  return 1.0 / (1.0 + mu_d);
}

TemporalScaleState::TemporalScaleState(const KernelSpec& spec, Eigen::Index rows,
                                       Eigen::Index cols)
    : spec_(spec) {
  coeff_.resize(size_t(spec.K));
  for (int k = 0; k < spec.K; ++k) coeff_[size_t(k)] = stage_coefficient(spec.mu[size_t(k)]);
  levels_.assign(size_t(spec.K) + 1, Image::Zero(rows, cols));
  prev_levels_ = levels_;
}

void TemporalScaleState::reset() {
  for (auto& l : levels_) l.setZero();
  for (auto& l : prev_levels_) l.setZero();
  history_.clear();
  frames_seen_ = 0;
}

void temporal_smooth_step(TemporalScaleState& state, const Image& frame) {
  if (!state.initialized()) throw UninitializedState();
  if (!same_shape(frame, state.levels_.front()))
    throw DimensionMismatch("frame does not match state dimensions");

  state.prev_levels_ = state.levels_;
  state.levels_[0] = frame;
  if (state.frames_seen_ == 0) {
    // first frame seeds every level: the cascade starts settled on it
    for (int k = 1; k <= state.spec_.K; ++k) state.levels_[size_t(k)] = frame;
  } else {
    for (int k = 1; k <= state.spec_.K; ++k) {
      const float a = float(state.coeff_[size_t(k - 1)]);
      Image& lk = state.levels_[size_t(k)];
      lk += a * (state.levels_[size_t(k - 1)] - lk);
    }
  }
  state.history_.push(state.levels_.back());
  ++state.frames_seen_;
}

Image temporal_difference(const FrameRing& ring, int n) {
  if (n < 0 || n > 2) throw BadParams("temporal order must be 0, 1 or 2");
  if (ring.size() < n + 1)
    throw InsufficientHistory("need " + std::to_string(n + 1) + " frames, have " +
                              std::to_string(ring.size()));
  switch (n) {
    case 0:
      return ring.at(0);
    case 1:
      return ring.at(0) - ring.at(1);
    default:
      return ring.at(0) - 2.0f * ring.at(1) + ring.at(2);
  }
}

}  // namespace strf
