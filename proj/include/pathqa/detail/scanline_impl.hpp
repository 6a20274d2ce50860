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

#include <algorithm>
#include <cmath>
#include <vector>

namespace pathqa {

template <typename Paint>
void scanline_fill(const Polygon& poly, double scale, double origin_x, double origin_y, int width, int height,
                   Paint&& paint) {
  const std::size_t n = poly.size();
  if (n < 3 || width <= 0 || height <= 0) return;
  std::vector<Point> pts(n);
  double min_y = INFINITY, max_y = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {poly[i].x * scale - origin_x, poly[i].y * scale - origin_y};
    min_y = std::min(min_y, pts[i].y);
    max_y = std::max(max_y, pts[i].y);
  }
  const int row_begin = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
  const int row_end = std::min(height, static_cast<int>(std::ceil(max_y + 0.5)) + 1);
  std::vector<double> crossings;
  for (int y = row_begin; y < row_end; ++y) {
    const double cy = y + 0.5;
    crossings.clear();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point& a = pts[i];
      const Point& b = pts[j];
      if ((a.y > cy) != (b.y > cy)) crossings.push_back((b.x - a.x) * (cy - a.y) / (b.y - a.y) + a.x);
    }
    if (crossings.empty()) continue;
    std::sort(crossings.begin(), crossings.end());
    // A centre cx is inside iff an odd number of crossings lie strictly to
    // its right, i.e. cx in [c0, c1), [c2, c3), ...
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      const double lo = crossings[k];
      const double hi = crossings[k + 1];
      int x0 = std::max(0, static_cast<int>(std::ceil(lo - 0.5)));
      int x1 = std::min(width, static_cast<int>(std::ceil(hi - 0.5)));
      // Guard the ceil boundaries against rounding so the test matches
      // the per-pixel crossing rule exactly.
      while (x0 > 0 && (x0 - 1) + 0.5 >= lo) --x0;
      while (x0 < width && x0 + 0.5 < lo) ++x0;
      while (x1 > 0 && (x1 - 1) + 0.5 >= hi) --x1;
      while (x1 < width && x1 + 0.5 < hi) ++x1;
      for (int x = x0; x < x1; ++x) paint(x, y);
    }
  }
}

}  // namespace pathqa
