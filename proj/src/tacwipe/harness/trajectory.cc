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

#include "tacwipe/harness/trajectory.h"

#include <cassert>

namespace tacwipe {
namespace {

// emits the serpentine corner points one at a time, forever
class WaypointFeed {
 public:
  explicit WaypointFeed(const TrajectoryConfig& config)
      : half_stroke_(config.stroke_mm / 2.0),
        pitch_(config.pitch_mm),
        lanes_(config.lanes > 0 ? config.lanes : 1) {}

  Eigen::Vector2d Next() {
    const double y = (lane_ - (lanes_ - 1) / 2.0) * pitch_;
    const double x = at_far_end_ ? half_stroke_ : -half_stroke_;
    // alternate: stroke across, then shift one lane
    if (stroking_) {
      at_far_end_ = !at_far_end_;
    } else {
      if (lanes_ > 1) {
        if (lane_ + lane_dir_ < 0 || lane_ + lane_dir_ >= lanes_) lane_dir_ = -lane_dir_;
        lane_ += lane_dir_;
      }
    }
    stroking_ = !stroking_;
    return {x, y};
  }

 private:
  double half_stroke_;
  double pitch_;
  int lanes_;
  int lane_ = 0;
  int lane_dir_ = 1;
  bool at_far_end_ = false;
  bool stroking_ = true;  // next move is a stroke
};

}  // namespace

std::vector<Eigen::Vector2d> GenTrajectory(const TrajectoryConfig& config, int n_steps) {
  assert(config.stroke_mm > 0 && config.pitch_mm > 0 && config.speed_mm_s > 0);
  std::vector<Eigen::Vector2d> points;
  if (n_steps <= 0) return points;
  points.reserve(n_steps);

  WaypointFeed feed(config);
  Eigen::Vector2d pos = feed.Next();  // path start: near stroke end, first lane
  Eigen::Vector2d target = feed.Next();
  points.push_back(pos);

  const double step_len = config.speed_mm_s * config.dt;
  for (int t = 1; t < n_steps; ++t) {
    double remaining = step_len;
    while (remaining > 0) {
      const double dist = (target - pos).norm();
      if (dist > remaining) {
        pos += remaining / dist * (target - pos);
        break;
      }
      pos = target;
      remaining -= dist;
      target = feed.Next();
    }
    points.push_back(pos);
  }
  return points;
}

}  // namespace tacwipe
