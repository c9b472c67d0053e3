#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strf/fieldset.hpp"
#include "strf/image.hpp"
#include "strf/spatial.hpp"
#include "strf/temporal_scale.hpp"

namespace strf {

/// Dense per-pixel receptive field responses for one frame, one plane per
/// channel, all scale-normalized with the configured gammas.
struct JetResponse {
  std::int64_t frame_index = 0;
  std::vector<ScalePair> scale_grid;
  std::vector<ChannelDesc> channels;
  std::vector<Image> planes;
  int interior_margin = 0;  // pixels near the border to exclude downstream

  Eigen::Index rows() const { return planes.empty() ? 0 : planes.front().rows(); }
  Eigen::Index cols() const { return planes.empty() ? 0 : planes.front().cols(); }
};

/// Rotationally invariant features from directional derivative channels:
/// gradient magnitude, Laplacian, and signed-square-root Hessian determinant
/// of L, L_t and L_tt per scale pair. Input must carry the 15 directional
/// channels (m1 + m2 in {1, 2}) x (n in {0, 1, 2}) for every scale pair.
JetResponse rotinv_features(const JetResponse& njet);

/// Streaming spatio-temporal receptive field extractor. Feed frames one at a
/// time; a JetResponse is produced once enough temporal history exists.
/// Memory is O(frame size * (K + history)) independent of stream length.
class JetEngine {
 public:
  struct Params {
    double fps = 25.0;  // converts sigma_tau from ms to frames
    double c = 2.0;
    int K = 7;
    TauDistribution distribution = TauDistribution::LinearInC;
    double gamma_s = 1.0;
    double gamma_tau = 1.0;
  };

  JetEngine(FieldSetSpec spec, Params params);

  /// Advance one frame; returns the jet for this frame when history allows.
  std::optional<JetResponse> push_frame(const Image& frame);

  /// Frames to discard from descriptor accumulation while the recursive
  /// filters settle: ceil(5 * max sigma_tau in frames), at least the
  /// temporal stencil depth.
  int warmup_frames() const { return warmup_; }
  int interior_margin() const { return margin_; }
  const FieldSetSpec& spec() const { return spec_; }
  const Params& params() const { return params_; }
  std::int64_t frames_seen() const { return frames_seen_; }

  void reset();

 private:
  FieldSetSpec spec_;            // as requested
  FieldSetSpec directional_;     // what the pipeline computes before invariants
  Params params_;
  int warmup_ = 0;
  int margin_ = 0;
  int ring_depth_ = 1;

  std::vector<double> tau_frames_;              // per distinct sigma_tau
  std::vector<KernelSpec> kernel_specs_;        // per distinct sigma_tau
  std::vector<TemporalScaleState> states_;      // per distinct sigma_tau
  std::vector<int> pair_state_;                 // scale pair -> state index or -1
  std::vector<SpatialScaleSpec> pair_spatial_;  // scale pair -> spatial spec
  std::vector<FrameRing> rings_;                // scale pair -> smoothed history
  std::int64_t frames_seen_ = 0;

  JetResponse compute_current() const;
};

}  // namespace strf
