// Copyright 2026 The rddkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rddkit/box.hpp"

namespace rddkit {

// Grid of reference boxes for a region proposal stage. A scale is the
// geometric-mean side length sqrt(w*h) in input-image pixels; a ratio is the
// aspect h/w; stride is how many input pixels one feature-map cell covers.
struct AnchorConfig {
  std::vector<double> scales;
  std::vector<double> ratios;
  double stride;

  AnchorConfig(std::vector<double> scales_in, std::vector<double> ratios_in,
               double stride_in)
      : scales(std::move(scales_in)),
        ratios(std::move(ratios_in)),
        stride(stride_in) {
    if (scales.empty() || ratios.empty()) {
      throw std::invalid_argument("anchor scales and ratios must be non-empty");
    }
    for (double s : scales) {
      if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("anchor scales must be positive");
      }
    }
    for (double r : ratios) {
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("anchor ratios must be positive");
      }
    }
    if (!(stride > 0.0) || !std::isfinite(stride)) {
      throw std::invalid_argument("anchor stride must be positive");
    }
  }

  std::size_t anchors_per_cell() const { return scales.size() * ratios.size(); }
};

inline AnchorConfig default_anchor_config(double stride = 16.0) {
  return AnchorConfig({32.0, 64.0, 128.0, 256.0, 512.0}, {0.5, 1.0, 2.0},
                      stride);
}

// One anchor per (cell, scale, ratio), centred on the cell centre
// ((j+0.5)*stride, (i+0.5)*stride) with width scale/sqrt(ratio) and height
// scale*sqrt(ratio). Ordering: row-major over cells, then scale-major within
// a cell (ratio index varies fastest). Base anchors are computed once at cell
// (0,0) and shifted by whole strides, so anchors on different cells differ by
// exactly (j*stride, i*stride).
inline std::vector<Box> generate_anchors(const AnchorConfig& cfg, int feat_h,
                                         int feat_w) {
  if (feat_h < 1 || feat_w < 1) {
    throw std::invalid_argument("feature map dimensions must be >= 1");
  }
  struct BaseAnchor {
    double x_min, y_min, x_max, y_max;
  };
  std::vector<BaseAnchor> base;
  base.reserve(cfg.anchors_per_cell());
  const double c0 = 0.5 * cfg.stride;
  for (double s : cfg.scales) {
    for (double r : cfg.ratios) {
      const double w = s / std::sqrt(r);
      const double h = s * std::sqrt(r);
      base.push_back({c0 - 0.5 * w, c0 - 0.5 * h, c0 + 0.5 * w, c0 + 0.5 * h});
    }
  }

  std::vector<Box> anchors;
  anchors.reserve(static_cast<std::size_t>(feat_h) * feat_w * base.size());
  for (int i = 0; i < feat_h; ++i) {
    const double dy = i * cfg.stride;
    for (int j = 0; j < feat_w; ++j) {
      const double dx = j * cfg.stride;
      for (const BaseAnchor& a : base) {
        anchors.emplace_back(a.x_min + dx, a.y_min + dy, a.x_max + dx,
                             a.y_max + dy);
      }
    }
  }
  return anchors;
}

// Regression offsets of a target box relative to an anchor: centre shifts
// normalized by the anchor size, log size ratios. The Faster R-CNN lineage
// convention.
struct BoxDelta {
  double dx;
  double dy;
  double dw;
  double dh;

  bool operator==(const BoxDelta&) const = default;
};

// Size deltas beyond this are clamped before exponentiation in
// decode_deltas; ln(1000/16) is the customary bound.
inline const double kDeltaClampBound = std::log(1000.0 / 16.0);

inline BoxDelta encode_deltas(const Box& anchor, const Box& target) {
  const double aw = anchor.width();
  const double ah = anchor.height();
  const double tw = target.width();
  const double th = target.height();
  if (aw <= 0.0 || ah <= 0.0 || tw <= 0.0 || th <= 0.0) {
    throw std::invalid_argument(
        "encode_deltas requires positive-area anchor and target");
  }
  const double ax = 0.5 * (anchor.x_min + anchor.x_max);
  const double ay = 0.5 * (anchor.y_min + anchor.y_max);
  const double tx = 0.5 * (target.x_min + target.x_max);
  const double ty = 0.5 * (target.y_min + target.y_max);
  return BoxDelta{(tx - ax) / aw, (ty - ay) / ah, std::log(tw / aw),
                  std::log(th / ah)};
}

inline Box decode_deltas(const Box& anchor, const BoxDelta& d,
                         double clamp_bound = kDeltaClampBound) {
  const double aw = anchor.width();
  const double ah = anchor.height();
  if (aw <= 0.0 || ah <= 0.0) {
    throw std::invalid_argument("decode_deltas requires a positive-area anchor");
  }
  const double ax = 0.5 * (anchor.x_min + anchor.x_max);
  const double ay = 0.5 * (anchor.y_min + anchor.y_max);
  const double dw = std::clamp(d.dw, -clamp_bound, clamp_bound);
  const double dh = std::clamp(d.dh, -clamp_bound, clamp_bound);
  const double cx = ax + d.dx * aw;
  const double cy = ay + d.dy * ah;
  const double w = aw * std::exp(dw);
  const double h = ah * std::exp(dh);
  return Box(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h);
}

}  // namespace rddkit
