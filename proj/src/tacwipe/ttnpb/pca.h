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

#ifndef TACWIPE_TTNPB_PCA_H_
#define TACWIPE_TTNPB_PCA_H_

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace tacwipe {

struct DegenerateData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PcaResult {
  Eigen::Matrix2d components;   // rows: PC1, PC2 (unit vectors)
  Eigen::Vector2d eigenvalues;  // descending; population variance convention
  Eigen::Vector2d mean;
  Eigen::MatrixX2d projected;   // one row per input point, columns (PC1, PC2)
};

// Mean-centered PCA of 2-d bias points. Components are sorted by descending
// eigenvalue and sign-fixed so each component's first nonzero loading is
// positive. Throws DegenerateData when all points coincide.
PcaResult PbPca(const std::vector<Eigen::Vector2d>& points);

}  // namespace tacwipe

#endif  // TACWIPE_TTNPB_PCA_H_
