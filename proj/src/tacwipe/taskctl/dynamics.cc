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

#include "tacwipe/taskctl/dynamics.h"

#include <utility>
#include <vector>

namespace tacwipe {

using Eigen::MatrixXd;

TtnpbHorizon::TtnpbHorizon(const TtnpbModel& model, Eigen::Matrix<double, 72, 1> force,
                           Eigen::Matrix3Xd positions, Eigen::Vector2d pb,
                           const RecurrentState& live_state, int horizon)
    : model_(model),
      force_(std::move(force)),
      positions_(std::move(positions)),
      pb_(std::move(pb)),
      snapshot_(live_state),
      horizon_(horizon),
      param_grad_scratch_(model.net.param_count()) {
  if (positions_.cols() != horizon_) {
    throw DimensionMismatch("horizon: position track must be 3 x horizon");
  }
}

MatrixXd TtnpbHorizon::Expand(const MatrixXd& plan) const {
  if (plan.rows() != 3 || plan.cols() != horizon_) {
    throw DimensionMismatch("expand: plan must be 3 x horizon");
  }
  RecurrentState rstate = snapshot_;
  MatrixXd frames(72, horizon_);
  Eigen::Matrix<double, 72, 1> force = force_;
  for (int t = 0; t < horizon_; ++t) {
    force = Predict(model_, force, positions_.col(t), plan.col(t), pb_, rstate);
    frames.col(t) = force;
  }
  return frames;
}

MatrixXd TtnpbHorizon::ExpandGrad(const MatrixXd& plan,
                                  const MatrixXd& frame_grad) const {
  if (plan.rows() != 3 || plan.cols() != horizon_ ||
      frame_grad.rows() != 72 || frame_grad.cols() != horizon_) {
    throw DimensionMismatch("expand grad: plan/grad shapes must be 3|72 x horizon");
  }
  const Network& net = model_.net;
  const ScalingConstants& scaling = model_.scaling;

  // forward in scaled space with tapes; the scaled output of step t is the
  // scaled force input of step t+1, so gradients feed straight back
  RecurrentState rstate = snapshot_;
  std::vector<StepTape> tapes(horizon_);
  MatrixXd force = force_;
  for (int t = 0; t < horizon_; ++t) {
    const MatrixXd input =
        AssembleScaledInput(scaling, force, positions_.col(t), plan.col(t), pb_);
    force = net.Forward(input, rstate, &tapes[t]) * scaling.force_scale;
  }

  param_grad_scratch_.setZero();
  RecurrentGrad rgrad = net.MakeGrad(1);
  MatrixXd plan_grad(3, horizon_);
  MatrixXd feedback = MatrixXd::Zero(72, 1);  // grad on step t's scaled output
  for (int t = horizon_ - 1; t >= 0; --t) {
    const MatrixXd dout = frame_grad.col(t) * scaling.force_scale + feedback;
    const MatrixXd dinput = net.Backward(tapes[t], dout, rgrad, param_grad_scratch_);
    plan_grad(0, t) = dinput(75, 0) / scaling.tau_scale;
    plan_grad(1, t) = dinput(76, 0) / scaling.tau_scale;
    plan_grad(2, t) = dinput(77, 0) / scaling.fz_ref_scale;
    feedback = dinput.topRows(72);
  }
  return plan_grad;
}

}  // namespace tacwipe
