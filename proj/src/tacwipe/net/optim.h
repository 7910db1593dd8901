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

#ifndef TACWIPE_NET_OPTIM_H_
#define TACWIPE_NET_OPTIM_H_

#include <cstdint>

#include <Eigen/Dense>

namespace tacwipe {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  int64_t t = 0;

  explicit AdamState(Eigen::Index n = 0)
      : m(Eigen::VectorXd::Zero(n)), v(Eigen::VectorXd::Zero(n)) {}
};

// textbook bias-corrected Adam update, in place
void AdamStep(Eigen::Ref<Eigen::VectorXd> params, const Eigen::VectorXd& grad,
              AdamState& state, const AdamConfig& config);

struct MomentumConfig {
  double lr = 0.01;
  double momentum = 0.9;
};

struct MomentumState {
  Eigen::VectorXd v;

  explicit MomentumState(Eigen::Index n = 0) : v(Eigen::VectorXd::Zero(n)) {}
};

// classical momentum: v <- mu v - lr g; p <- p + v
void MomentumStep(Eigen::Ref<Eigen::VectorXd> params, const Eigen::VectorXd& grad,
                  MomentumState& state, const MomentumConfig& config);

}  // namespace tacwipe

#endif  // TACWIPE_NET_OPTIM_H_
