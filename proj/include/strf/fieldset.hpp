#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strf/errors.hpp"

namespace strf {

enum class FieldSetKind { RFSpatial, STRFNjet, STRFRotInv, STRFNjetPrevious };

FieldSetKind parse_fieldset_name(const std::string& name);
std::string fieldset_name(FieldSetKind kind);

/// One spatial/temporal scale combination. sigma_tau unset means the channel
/// group is purely spatial (no temporal smoothing).
struct ScalePair {
  double sigma_s_px = 0.0;
  std::optional<double> sigma_tau_ms;

  bool operator==(const ScalePair&) const = default;
};

enum class InvariantOp { None, GradMagnitude, Laplacian, DetHessianSignedSqrt };

/// A single descriptor channel: a partial derivative of orders (m1, m2, n)
/// at one scale pair, or a rotational invariant applied to the n-th temporal
/// derivative of the smoothed video.
struct ChannelDesc {
  int m1 = 0;
  int m2 = 0;
  int n = 0;
  InvariantOp op = InvariantOp::None;
  int scale_index = 0;  // into FieldSetSpec::scale_grid

  std::string label() const;
};

/// A named receptive field set expanded over a scale grid. Channel ordering
/// is normative (PCA models are order-sensitive): scales outermost in grid
/// order; within a scale, derivative channels sorted by total spatial order,
/// then x-before-y, then temporal order; invariant channels by operator then
/// temporal order. See docs/fieldsets.md.
struct FieldSetSpec {
  FieldSetKind kind = FieldSetKind::STRFNjet;
  std::vector<ScalePair> scale_grid;
  std::vector<ChannelDesc> channels;

  int dimension() const { return int(channels.size()); }
  bool needs_temporal_smoothing() const { return kind != FieldSetKind::RFSpatial; }
  int max_temporal_order() const;

  /// Stable identity of the channel ordering, embedded in model files.
  std::uint64_t channel_order_hash() const;
  std::string channel_order_text() const;
};

/// Channels per scale pair for each named set (Table of receptive field sets).
int fieldset_channels_per_scale(FieldSetKind kind);

FieldSetSpec assemble_field_set(FieldSetKind kind, const std::vector<ScalePair>& scale_grid);
FieldSetSpec assemble_field_set(const std::string& name,
                                const std::vector<ScalePair>& scale_grid);

/// FNV-1a, used for channel-order and config digests throughout.
std::uint64_t fnv1a64(const void* data, size_t size, std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a64(const std::string& text);

}  // namespace strf
