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

#ifndef TACWIPE_TASKCTL_DYNAMICS_H_
#define TACWIPE_TASKCTL_DYNAMICS_H_

#include <Eigen/Dense>

#include "tacwipe/ttnpb/model.h"

namespace tacwipe {

// What the plan optimizer needs from a forward model: roll a plan out over
// the horizon and pull a loss gradient on the predicted frames back to the
// plan. Implementations must be pure: repeated calls with the same plan
// return the same values.
class HorizonDynamics {
 public:
  virtual ~HorizonDynamics() = default;

  virtual int horizon() const = 0;

  // plan: one control per column (3 x horizon, raw units);
  // returns predicted frames (72 x horizon, raw units)
  virtual Eigen::MatrixXd Expand(const Eigen::MatrixXd& plan) const = 0;

  // gradient of sum_t <frame_grad_t, F_t> with respect to the plan
  // (3 x horizon, raw units)
  virtual Eigen::MatrixXd ExpandGrad(const Eigen::MatrixXd& plan,
                                     const Eigen::MatrixXd& frame_grad) const = 0;
};

// Rolls the learned transition model out from the current tick: each
// predicted frame feeds back as the next step's force input, step t of the
// rollout consumes column t of the position track, and the live recurrent
// state is snapshotted at construction so rollouts never perturb the
// real-time state. The wiping path is scripted, so a controller legitimately
// knows where the hand will be over the horizon; feeding that track is what
// lets the model anticipate terrain ahead instead of extrapolating in place.
class TtnpbHorizon : public HorizonDynamics {
 public:
  // positions: 3 x horizon, column t = hand position fed at rollout step t
  // (column 0 is the current tick's position)
  TtnpbHorizon(const TtnpbModel& model, Eigen::Matrix<double, 72, 1> force,
               Eigen::Matrix3Xd positions, Eigen::Vector2d pb,
               const RecurrentState& live_state, int horizon);

  int horizon() const override { return horizon_; }
  Eigen::MatrixXd Expand(const Eigen::MatrixXd& plan) const override;
  Eigen::MatrixXd ExpandGrad(const Eigen::MatrixXd& plan,
                             const Eigen::MatrixXd& frame_grad) const override;

 private:
  const TtnpbModel& model_;
  Eigen::Matrix<double, 72, 1> force_;
  Eigen::Matrix3Xd positions_;
  Eigen::Vector2d pb_;
  RecurrentState snapshot_;
  int horizon_;
  mutable Eigen::VectorXd param_grad_scratch_;
};

}  // namespace tacwipe

#endif  // TACWIPE_TASKCTL_DYNAMICS_H_
