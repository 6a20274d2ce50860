// Copyright 2026 The pathqa Authors. All Rights Reserved.
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

#include <vector>

namespace pathqa {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

using Polygon = std::vector<Point>;

struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open [x0,x1) x [y0,y1)
  double area() const noexcept { return (x1 > x0 && y1 > y0) ? (x1 - x0) * (y1 - y0) : 0.0; }
};

Rect intersect(const Rect& a, const Rect& b) noexcept;
Rect bounding_box(const Polygon& poly) noexcept;
double polygon_area(const Polygon& poly) noexcept;  // absolute shoelace area

/// Clips a polygon to an axis-aligned rectangle (Sutherland-Hodgman).
Polygon clip_to_rect(const Polygon& poly, const Rect& rect);

/// Even-odd scanline fill sampled at pixel centres. The polygon is first
/// mapped by p' = p * scale - origin; for every pixel (x, y) of a
/// width x height raster whose centre (x+0.5, y+0.5) lies inside, calls
/// paint(x, y).
template <typename Paint>
void scanline_fill(const Polygon& poly, double scale, double origin_x, double origin_y, int width, int height,
                   Paint&& paint);

/// Rasterises `poly` into `mask` (width x height, row-major) writing `value`.
void fill_polygon(const Polygon& poly, double scale, double origin_x, double origin_y, int width, int height,
                  std::vector<unsigned char>& mask, unsigned char value);

}  // namespace pathqa

#include "pathqa/detail/scanline_impl.hpp"
