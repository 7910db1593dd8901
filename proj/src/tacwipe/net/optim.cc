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

#include "tacwipe/net/optim.h"

#include <cmath>

namespace tacwipe {

void AdamStep(Eigen::Ref<Eigen::VectorXd> params, const Eigen::VectorXd& grad,
              AdamState& state, const AdamConfig& config) {
  state.t += 1;
  state.m = config.beta1 * state.m + (1.0 - config.beta1) * grad;
  state.v.array() =
      config.beta2 * state.v.array() + (1.0 - config.beta2) * grad.array().square();
  const double mc = 1.0 - std::pow(config.beta1, static_cast<double>(state.t));
  const double vc = 1.0 - std::pow(config.beta2, static_cast<double>(state.t));
  params.array() -= config.lr * (state.m.array() / mc) /
                    ((state.v.array() / vc).sqrt() + config.eps);
}

void MomentumStep(Eigen::Ref<Eigen::VectorXd> params, const Eigen::VectorXd& grad,
                  MomentumState& state, const MomentumConfig& config) {
  state.v = config.momentum * state.v - config.lr * grad;
  params += state.v;
}

}  // namespace tacwipe
