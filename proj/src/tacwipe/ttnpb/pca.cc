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

#include "tacwipe/ttnpb/pca.h"

#include <cmath>

namespace tacwipe {

PcaResult PbPca(const std::vector<Eigen::Vector2d>& points) {
  if (points.size() < 2) {
    throw DegenerateData("pca: need at least two points");
  }
  const int n = static_cast<int>(points.size());
  PcaResult result;
  result.mean = Eigen::Vector2d::Zero();
  for (const auto& p : points) result.mean += p;
  result.mean /= n;

  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector2d d = p - result.mean;
    cov += d * d.transpose();
  }
  cov /= n;  // population convention: projection variances equal eigenvalues
  if (cov.norm() < 1e-18) {
    throw DegenerateData("pca: all points coincide");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(cov);
  // solver returns ascending eigenvalues; flip to descending
  result.eigenvalues = solver.eigenvalues().reverse();
  Eigen::Matrix2d comps;
  comps.row(0) = solver.eigenvectors().col(1).transpose();
  comps.row(1) = solver.eigenvectors().col(0).transpose();
  for (int r = 0; r < 2; ++r) {
    double lead = comps(r, 0);
    if (std::abs(lead) < 1e-12) lead = comps(r, 1);
    if (lead < 0) comps.row(r) = -comps.row(r);
  }
  result.components = comps;

  result.projected.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    result.projected.row(i) = (comps * (points[i] - result.mean)).transpose();
  }
  return result;
}

}  // namespace tacwipe
