// Copyright 2026 Tacwipe Authors
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

#include "tacwipe/sim/taxel_layout.h"

#include <limits>

namespace tacwipe {

TaxelLayout MakeTaxelLayout() {
  TaxelLayout layout;
  const double px = layout.pitch_x();
  const double py = layout.pitch_y();
  for (int r = 0; r < TaxelLayout::kRows; ++r) {
    for (int c = 0; c < TaxelLayout::kCols; ++c) {
      const double x = -TaxelLayout::kEnvelopeX / 2.0 + (r + 0.5) * px;
      const double y = -TaxelLayout::kEnvelopeY / 2.0 + (c + 0.5) * py;
      layout.positions[r * TaxelLayout::kCols + c] = Eigen::Vector2d(x, y);
    }
  }
  return layout;
}

std::vector<int> RightColumnIndices(const TaxelLayout& layout) {
  double min_y = std::numeric_limits<double>::infinity();
  for (const auto& p : layout.positions) min_y = std::min(min_y, p.y());
  std::vector<int> indices;
  for (int i = 0; i < TaxelLayout::kCount; ++i) {
    if (layout.positions[i].y() < min_y + 1e-9) indices.push_back(i);
  }
  return indices;
}

}  // namespace tacwipe
