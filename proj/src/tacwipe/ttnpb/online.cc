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

#include "tacwipe/ttnpb/online.h"

#include <string>
#include <vector>

namespace tacwipe {

void OnlineBuffer::Push(const EpisodeStep& step) {
  steps_.push_back(step);
  if (static_cast<int>(steps_.size()) > capacity_) steps_.pop_front();
}

Eigen::Vector2d OnlineUpdatePb(const TtnpbModel& model, const OnlineBuffer& buffer,
                               const Eigen::Vector2d& p, MomentumState& mstate,
                               const OnlineConfig& config) {
  if (buffer.size() < config.start_threshold) {
    throw BufferTooSmall("online update: buffer holds " +
                         std::to_string(buffer.size()) + " ticks, needs " +
                         std::to_string(config.start_threshold));
  }
  const int len = buffer.size() - 1;  // transitions in the window
  const Network& net = model.net;
  const ScalingConstants& scaling = model.scaling;

  Eigen::Vector2d current = p;
  Eigen::VectorXd param_grad(net.param_count());  // computed, then discarded
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    RecurrentState rstate = net.MakeState(1);
    std::vector<StepTape> tapes(len);
    std::vector<Eigen::MatrixXd> preds(len);
    std::vector<Eigen::MatrixXd> targets(len);
    for (int t = 0; t < len; ++t) {
      const EpisodeStep& step = buffer.at(t);
      const Eigen::MatrixXd input =
          AssembleScaledInput(scaling, step.force, step.pos, step.ctrl, current);
      preds[t] = net.Forward(input, rstate, &tapes[t]);
      targets[t] = buffer.at(t + 1).force / scaling.force_scale;
    }

    // mean over transitions but sum over the 72 force components: a per-
    // component mean would shrink the bias gradient ~72x and stall
    // adaptation at the configured step size
    const double norm = 1.0 / len;
    param_grad.setZero();
    Eigen::Vector2d pb_grad = Eigen::Vector2d::Zero();
    RecurrentGrad rgrad = net.MakeGrad(1);
    for (int t = len - 1; t >= 0; --t) {
      const Eigen::MatrixXd dout = 2.0 * norm * (preds[t] - targets[t]);
      const Eigen::MatrixXd dinput = net.Backward(tapes[t], dout, rgrad, param_grad);
      pb_grad += dinput.bottomRows(2);
    }

    Eigen::VectorXd g = pb_grad;
    MomentumStep(current, g, mstate, config.momentum);
  }
  return current;
}

}  // namespace tacwipe
