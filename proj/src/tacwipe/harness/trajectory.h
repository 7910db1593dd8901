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

#ifndef TACWIPE_HARNESS_TRAJECTORY_H_
#define TACWIPE_HARNESS_TRAJECTORY_H_

#include <vector>

#include <Eigen/Dense>

namespace tacwipe {

struct TrajectoryConfig {
  double stroke_mm = 120.0;  // full stroke along x
  double pitch_mm = 20.0;    // lateral shift between lanes
  double speed_mm_s = 30.0;
  int lanes = 5;             // band width; the path ping-pongs across lanes
  double dt = 0.2;           // 5 Hz tick
};

// Serpentine wiping path centered on the origin: stroke along +x, shift one
// lane along y, stroke along -x, and so on, reversing lane direction at the
// band edges. Positions advance at most speed*dt per tick, the first point
// is the path start, and zero requested steps give an empty sequence.
std::vector<Eigen::Vector2d> GenTrajectory(const TrajectoryConfig& config, int n_steps);

}  // namespace tacwipe

#endif  // TACWIPE_HARNESS_TRAJECTORY_H_
