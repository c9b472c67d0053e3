#include "strf/fieldset.hpp"

#include <algorithm>
#include <sstream>

namespace strf {

std::uint64_t fnv1a64(const void* data, size_t size, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& text) { return fnv1a64(text.data(), text.size()); }

FieldSetKind parse_fieldset_name(const std::string& name) {
  std::string s;
  for (char c : name) s += (c == '_') ? '-' : char(std::tolower(c));
  if (s == "rf-spatial") return FieldSetKind::RFSpatial;
  if (s == "strf-njet") return FieldSetKind::STRFNjet;
  if (s == "strf-rotinv") return FieldSetKind::STRFRotInv;
  if (s == "strf-njet-previous") return FieldSetKind::STRFNjetPrevious;
  throw UnknownFieldSet("unknown field set: " + name);
}

std::string fieldset_name(FieldSetKind kind) {
  switch (kind) {
    case FieldSetKind::RFSpatial: return "RF-Spatial";
    case FieldSetKind::STRFNjet: return "STRF-Njet";
    case FieldSetKind::STRFRotInv: return "STRF-RotInv";
    case FieldSetKind::STRFNjetPrevious: return "STRF-Njet-previous";
  }
  throw UnknownFieldSet();
}

int fieldset_channels_per_scale(FieldSetKind kind) {
  switch (kind) {
    case FieldSetKind::RFSpatial: return 5;
    case FieldSetKind::STRFNjet: return 17;
    case FieldSetKind::STRFRotInv: return 9;
    case FieldSetKind::STRFNjetPrevious: return 12;
  }
  throw UnknownFieldSet();
}

std::string ChannelDesc::label() const {
  std::string base = "L";
  for (int i = 0; i < m1; ++i) base += 'x';
  for (int i = 0; i < m2; ++i) base += 'y';
  for (int i = 0; i < n; ++i) base += 't';
  switch (op) {
    case InvariantOp::None: return base;
    case InvariantOp::GradMagnitude: return "gradmag(" + base + ")";
    case InvariantOp::Laplacian: return "laplacian(" + base + ")";
    case InvariantOp::DetHessianSignedSqrt: return "dethess(" + base + ")";
  }
  return base;
}

int FieldSetSpec::max_temporal_order() const {
  int n = 0;
  for (const auto& ch : channels) n = std::max(n, ch.n);
  return n;
}

std::string FieldSetSpec::channel_order_text() const {
  std::ostringstream os;
  os << "channel-order-v1 " << fieldset_name(kind);
  for (const auto& sp : scale_grid) {
    os << " [s=" << sp.sigma_s_px;
    if (sp.sigma_tau_ms) os << ",t=" << *sp.sigma_tau_ms;
    os << "]";
  }
  for (const auto& ch : channels) os << " " << ch.scale_index << ":" << ch.label();
  return os.str();
}

std::uint64_t FieldSetSpec::channel_order_hash() const { return fnv1a64(channel_order_text()); }

namespace {

// (m1, m2) combinations in normative order: total order ascending, x before y.
constexpr int kSpatialOrders[][2] = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};

void append_derivative_channels(std::vector<ChannelDesc>& out, int scale_index,
                                bool pure_temporal, int max_n_mixed) {
  if (pure_temporal) {
    out.push_back({0, 0, 1, InvariantOp::None, scale_index});
    out.push_back({0, 0, 2, InvariantOp::None, scale_index});
  }
  for (const auto& m : kSpatialOrders)
    for (int n = 0; n <= max_n_mixed; ++n)
      out.push_back({m[0], m[1], n, InvariantOp::None, scale_index});
}

}  // namespace

FieldSetSpec assemble_field_set(FieldSetKind kind, const std::vector<ScalePair>& scale_grid) {
  if (scale_grid.empty()) throw BadParams("scale grid must be nonempty");
  for (const auto& sp : scale_grid) {
    if (sp.sigma_s_px <= 0.0) throw NonPositiveScale("sigma_s must be positive");
    if (sp.sigma_tau_ms && *sp.sigma_tau_ms <= 0.0)
      throw NonPositiveScale("sigma_tau must be positive");
    if (kind != FieldSetKind::RFSpatial && !sp.sigma_tau_ms)
      throw BadParams("field set " + fieldset_name(kind) + " requires temporal scales");
  }

  FieldSetSpec spec;
  spec.kind = kind;
  spec.scale_grid = scale_grid;
  for (int si = 0; si < int(scale_grid.size()); ++si) {
    switch (kind) {
      case FieldSetKind::RFSpatial:
        append_derivative_channels(spec.channels, si, /*pure_temporal=*/false, 0);
        break;
      case FieldSetKind::STRFNjet:
        append_derivative_channels(spec.channels, si, true, 2);
        break;
      case FieldSetKind::STRFNjetPrevious:
        append_derivative_channels(spec.channels, si, true, 1);
        break;
      case FieldSetKind::STRFRotInv:
        for (auto op : {InvariantOp::GradMagnitude, InvariantOp::Laplacian,
                        InvariantOp::DetHessianSignedSqrt})
          for (int n = 0; n <= 2; ++n) spec.channels.push_back({0, 0, n, op, si});
        break;
    }
  }
  return spec;
}

FieldSetSpec assemble_field_set(const std::string& name,
                                const std::vector<ScalePair>& scale_grid) {
  return assemble_field_set(parse_fieldset_name(name), scale_grid);
}

}  // namespace strf
