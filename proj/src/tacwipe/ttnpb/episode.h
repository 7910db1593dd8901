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

#ifndef TACWIPE_TTNPB_EPISODE_H_
#define TACWIPE_TTNPB_EPISODE_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tacwipe {

// one 5 Hz tick of collected data: taxel forces, realized hand position, and
// the control reference active at that tick
struct EpisodeStep {
  Eigen::Matrix<double, 72, 1> force;
  Eigen::Vector3d pos;   // mm
  Eigen::Vector3d ctrl;  // (tau_roll, tau_pitch, force target)
};

// a contiguous recording on one material under one collection setting
struct Episode {
  std::string material_id;
  std::string trial_id;
  std::vector<EpisodeStep> steps;
};

}  // namespace tacwipe

#endif  // TACWIPE_TTNPB_EPISODE_H_
