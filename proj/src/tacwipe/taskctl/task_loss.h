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

#ifndef TACWIPE_TASKCTL_TASK_LOSS_H_
#define TACWIPE_TASKCTL_TASK_LOSS_H_

#include <vector>

#include <Eigen/Dense>

#include "tacwipe/ttnpb/model.h"

namespace tacwipe {

enum class TaskLossKind {
  kTrackNormal,       // squared distance of every normal force to the target
  kShearVarianceMin,  // time-averaged across-taxel variance of lateral force
  kBiasRight,         // target on the right column, zero elsewhere
};

struct TaskLossConfig {
  TaskLossKind kind = TaskLossKind::kTrackNormal;
  double force_ref = 200.0;
  double smoothness_weight = 0.01;  // on scaled plan deltas
  std::vector<int> right_taxels;    // min-y column, for kBiasRight
  ScalingConstants scaling{};
};

// loss over predicted frames (72 x N, raw units) and the plan (3 x N);
// every kind adds smoothness_weight * sum ||scaled delta u||^2
double TaskLoss(const TaskLossConfig& config, const Eigen::MatrixXd& frames,
                const Eigen::MatrixXd& plan);

// analytic gradients of TaskLoss; either output may be null
void TaskLossGrad(const TaskLossConfig& config, const Eigen::MatrixXd& frames,
                  const Eigen::MatrixXd& plan, Eigen::MatrixXd* frame_grad,
                  Eigen::MatrixXd* plan_grad);

// per-run tracking/wiping quality over realized frames
struct EvalSummary {
  double e1 = 0;        // mean 2-norm distance of normal forces to target
  double e2 = 0;        // mean (across-taxel shear std) / (mean |shear|)
  double e3 = 0;        // mean right-bias error
  int steps = 0;
  int e2_excluded = 0;  // steps skipped because mean |shear| ~ 0
};

EvalSummary EvalMetrics(const std::vector<Eigen::Matrix<double, 72, 1>>& frames,
                        double force_ref, const std::vector<int>& right_taxels);

}  // namespace tacwipe

#endif  // TACWIPE_TASKCTL_TASK_LOSS_H_
