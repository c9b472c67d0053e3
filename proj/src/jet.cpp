#include "strf/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "strf/errors.hpp"

namespace strf {

JetEngine::JetEngine(FieldSetSpec spec, Params params)
    : spec_(std::move(spec)), params_(params) {
  directional_ = (spec_.kind == FieldSetKind::STRFRotInv)
                     ? assemble_field_set(FieldSetKind::STRFNjet, spec_.scale_grid)
                     : spec_;
  ring_depth_ = directional_.max_temporal_order() + 1;

  std::map<double, int> tau_index;
  double max_sigma_tau_frames = 0.0;
  for (const auto& sp : spec_.scale_grid) {
    if (!sp.sigma_tau_ms) continue;
    if (!tau_index.count(*sp.sigma_tau_ms)) {
      const double sigma_frames = *sp.sigma_tau_ms * params_.fps / 1000.0;
      max_sigma_tau_frames = std::max(max_sigma_tau_frames, sigma_frames);
      tau_index[*sp.sigma_tau_ms] = int(tau_frames_.size());
      tau_frames_.push_back(sigma_frames * sigma_frames);
      kernel_specs_.push_back(compute_time_constants(sigma_frames * sigma_frames, params_.c,
                                                     params_.K, params_.distribution));
    }
  }
  states_.resize(kernel_specs_.size());

  int max_radius = 0;
  for (const auto& sp : spec_.scale_grid) {
    pair_state_.push_back(sp.sigma_tau_ms ? tau_index.at(*sp.sigma_tau_ms) : -1);
    pair_spatial_.push_back(SpatialScaleSpec::from_sigma(sp.sigma_s_px));
    rings_.emplace_back(ring_depth_);
    max_radius = std::max(max_radius, pair_spatial_.back().kernel_radius);
  }
  margin_ = max_radius + 1;
  warmup_ = std::max(int(std::ceil(5.0 * max_sigma_tau_frames)), ring_depth_);
}

void JetEngine::reset() {
  for (auto& st : states_) st = TemporalScaleState();
  for (auto& r : rings_) r.clear();
  frames_seen_ = 0;
}

std::optional<JetResponse> JetEngine::push_frame(const Image& frame) {
  for (size_t ti = 0; ti < states_.size(); ++ti) {
    if (!states_[ti].initialized())
      states_[ti] = TemporalScaleState(kernel_specs_[ti], frame.rows(), frame.cols());
    temporal_smooth_step(states_[ti], frame);
  }
  for (size_t si = 0; si < rings_.size(); ++si) {
    const int ti = pair_state_[si];
    const Image& base = (ti >= 0) ? states_[size_t(ti)].level(kernel_specs_[size_t(ti)].K)
                                  : frame;
    rings_[si].push(spatial_smooth(base, pair_spatial_[si]));
  }
  ++frames_seen_;

  if (rings_.empty() || rings_.front().size() < ring_depth_) {
    if (frames_seen_ < ring_depth_) return std::nullopt;
  }
  JetResponse jet = compute_current();
  if (spec_.kind == FieldSetKind::STRFRotInv) jet = rotinv_features(jet);
  return jet;
}

JetResponse JetEngine::compute_current() const {
  JetResponse jet;
  jet.frame_index = frames_seen_ - 1;
  jet.scale_grid = directional_.scale_grid;
  jet.channels = directional_.channels;
  jet.interior_margin = margin_;
  jet.planes.reserve(jet.channels.size());

  // Per (scale pair, spatial order): derivative images of the ring entries,
  // shared between the temporal orders that need them.
  struct BaseKey {
    int si, m1, m2;
    bool operator<(const BaseKey& o) const {
      return std::tie(si, m1, m2) < std::tie(o.si, o.m1, o.m2);
    }
  };
  std::map<BaseKey, std::vector<Image>> bases;
  auto base_stack = [&](int si, int m1, int m2, int depth) -> const std::vector<Image>& {
    auto& stack = bases[{si, m1, m2}];
    while (int(stack.size()) < depth)
      stack.push_back(spatial_derivative(rings_[size_t(si)].at(int(stack.size())), m1, m2));
    return stack;
  };

  for (const auto& ch : jet.channels) {
    const int si = ch.scale_index;
    const auto& stack = base_stack(si, ch.m1, ch.m2, ch.n + 1);
    Image plane;
    switch (ch.n) {
      case 0: plane = stack[0]; break;
      case 1: plane = stack[0] - stack[1]; break;
      default: plane = stack[0] - 2.0f * stack[1] + stack[2]; break;
    }
    const auto& sp = spec_.scale_grid[size_t(si)];
    const double s = sp.sigma_s_px * sp.sigma_s_px;
    const int ti = pair_state_[size_t(si)];
    const double tau = (ti >= 0) ? tau_frames_[size_t(ti)] : 1.0;
    jet.planes.push_back(scale_normalize(plane, s, tau, ch.m1, ch.m2, ch.n, params_.gamma_s,
                                         params_.gamma_tau));
  }
  return jet;
}

JetResponse rotinv_features(const JetResponse& njet) {
  const int n_scales = int(njet.scale_grid.size());
  // locate the directional channels this transform consumes
  auto find_plane = [&](int si, int m1, int m2, int n) -> const Image& {
    for (size_t i = 0; i < njet.channels.size(); ++i) {
      const auto& ch = njet.channels[i];
      if (ch.scale_index == si && ch.op == InvariantOp::None && ch.m1 == m1 && ch.m2 == m2 &&
          ch.n == n)
        return njet.planes[i];
    }
    throw MissingChannels("rotinv transform requires channel (" + std::to_string(m1) + "," +
                          std::to_string(m2) + "," + std::to_string(n) + ")");
  };

  JetResponse out;
  out.frame_index = njet.frame_index;
  out.scale_grid = njet.scale_grid;
  out.interior_margin = njet.interior_margin;

  FieldSetSpec rotinv = assemble_field_set(FieldSetKind::STRFRotInv, njet.scale_grid);
  out.channels = rotinv.channels;
  out.planes.reserve(out.channels.size());
  for (const auto& ch : out.channels) {
    const int si = ch.scale_index, n = ch.n;
    switch (ch.op) {
      case InvariantOp::GradMagnitude: {
        const Image& lx = find_plane(si, 1, 0, n);
        const Image& ly = find_plane(si, 0, 1, n);
        out.planes.push_back((lx.square() + ly.square()).sqrt());
        break;
      }
      case InvariantOp::Laplacian:
        out.planes.push_back(find_plane(si, 2, 0, n) + find_plane(si, 0, 2, n));
        break;
      case InvariantOp::DetHessianSignedSqrt: {
        const Image det = find_plane(si, 2, 0, n) * find_plane(si, 0, 2, n) -
                          find_plane(si, 1, 1, n).square();
        out.planes.push_back(det.sign() * det.abs().sqrt());
        break;
      }
      case InvariantOp::None:
        throw MissingChannels("unexpected directional channel in rotinv spec");
    }
  }
  (void)n_scales;
  return out;
}

}  // namespace strf
