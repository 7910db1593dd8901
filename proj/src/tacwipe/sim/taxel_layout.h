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

#ifndef TACWIPE_SIM_TAXEL_LAYOUT_H_
#define TACWIPE_SIM_TAXEL_LAYOUT_H_

#include <array>
#include <vector>

#include <Eigen/Core>

namespace tacwipe {

// Geometry of the 24-cell three-axis tactile pad: a uniform 6x4 grid of cell
// centers, 6 rows along the travel axis x and 4 columns along the lateral
// axis y, centered on the sensor origin. Positions are in mm in the sensor
// frame. The pad envelope (cell centers plus one cell pitch) is 51.5 mm
// along x and 31.0 mm along y.
struct TaxelLayout {
  static constexpr int kRows = 6;   // along x
  static constexpr int kCols = 4;   // along y
  static constexpr int kCount = kRows * kCols;
  static constexpr double kEnvelopeX = 51.5;  // mm
  static constexpr double kEnvelopeY = 31.0;  // mm

  std::array<Eigen::Vector2d, kCount> positions;  // cell centers (x, y), mm

  double pitch_x() const { return kEnvelopeX / kRows; }
  double pitch_y() const { return kEnvelopeY / kCols; }
};

TaxelLayout MakeTaxelLayout();

// Taxels in the rightmost column (minimum y, x-axis taken as front).
std::vector<int> RightColumnIndices(const TaxelLayout& layout);

}  // namespace tacwipe

#endif  // TACWIPE_SIM_TAXEL_LAYOUT_H_
