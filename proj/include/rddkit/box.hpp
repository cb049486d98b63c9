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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rddkit/strings.hpp"

namespace rddkit {

// Axis-aligned rectangle in pixel coordinates. Origin is the image top-left,
// x grows rightward, y downward. Coordinates are continuous boundary
// positions, so width = x_max - x_min (no inclusive-index off-by-one).
// Zero-area boxes are representable; they never match anything under IoU.
struct Box {
  double x_min;
  double y_min;
  double x_max;
  double y_max;

  Box(double x_min_in, double y_min_in, double x_max_in, double y_max_in)
      : x_min(x_min_in), y_min(y_min_in), x_max(x_max_in), y_max(y_max_in) {
    if (!std::isfinite(x_min) || !std::isfinite(y_min) ||
        !std::isfinite(x_max) || !std::isfinite(y_max)) {
      throw std::invalid_argument("box coordinates must be finite");
    }
    if (x_min > x_max || y_min > y_max) {
      throw std::invalid_argument(
          "invalid box [" + format_double(x_min) + "," + format_double(y_min) +
          "," + format_double(x_max) + "," + format_double(y_max) +
          "]: min coordinate exceeds max");
    }
  }

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }

  bool operator==(const Box&) const = default;
};

inline double area(const Box& b) { return b.width() * b.height(); }

inline double intersection_area(const Box& a, const Box& b) {
  const double w =
      std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double h =
      std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

// Intersection over union in [0, 1]. Two boxes with an empty union (both
// degenerate) yield 0 so that broken annotations cannot poison aggregate
// metrics.
inline double iou(const Box& a, const Box& b) {
  const double inter = intersection_area(a, b);
  const double uni = area(a) + area(b) - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

// Per-axis coordinate scaling, the box counterpart of resizing an image.
inline Box scale_box(const Box& b, double sx, double sy) {
  if (!(sx > 0.0) || !(sy > 0.0) || !std::isfinite(sx) || !std::isfinite(sy)) {
    throw std::invalid_argument("scale factors must be positive and finite");
  }
  return Box(b.x_min * sx, b.y_min * sy, b.x_max * sx, b.y_max * sy);
}

// Mirror across the vertical image axis. Applying twice is the identity.
inline Box hflip_box(const Box& b, double image_width) {
  if (!(image_width > 0.0) || !std::isfinite(image_width)) {
    throw std::invalid_argument("image width must be positive and finite");
  }
  if (b.x_min < 0.0 || b.x_max > image_width) {
    throw std::invalid_argument("box x range [" + format_double(b.x_min) +
                                "," + format_double(b.x_max) +
                                "] outside image width " +
                                format_double(image_width));
  }
  return Box(image_width - b.x_max, b.y_min, image_width - b.x_min, b.y_max);
}

inline Box clip_box(const Box& b, double width, double height) {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("clip bounds must be positive");
  }
  const auto clamp = [](double v, double hi) {
    return std::min(std::max(v, 0.0), hi);
  };
  return Box(clamp(b.x_min, width), clamp(b.y_min, height),
             clamp(b.x_max, width), clamp(b.y_max, height));
}

// A model prediction: box, class label, confidence.
struct Detection {
  Box box;
  std::string class_label;
  double score;

  Detection(Box box_in, std::string label_in, double score_in)
      : box(box_in), class_label(std::move(label_in)), score(score_in) {
    if (class_label.empty()) {
      throw std::invalid_argument("detection class label must be non-empty");
    }
    if (!std::isfinite(score) || score < 0.0 || score > 1.0) {
      throw std::invalid_argument("detection score " + format_double(score) +
                                  " outside [0, 1]");
    }
  }

  bool operator==(const Detection&) const = default;
};

// An annotation: box plus class label.
struct GroundTruthBox {
  Box box;
  std::string class_label;

  GroundTruthBox(Box box_in, std::string label_in)
      : box(box_in), class_label(std::move(label_in)) {
    if (class_label.empty()) {
      throw std::invalid_argument("annotation class label must be non-empty");
    }
  }

  bool operator==(const GroundTruthBox&) const = default;
};

}  // namespace rddkit
