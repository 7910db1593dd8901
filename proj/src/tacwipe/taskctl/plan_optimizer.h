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

#ifndef TACWIPE_TASKCTL_PLAN_OPTIMIZER_H_
#define TACWIPE_TASKCTL_PLAN_OPTIMIZER_H_

#include <vector>

#include <Eigen/Dense>

#include "tacwipe/ctrl/contact_ctrl.h"
#include "tacwipe/taskctl/dynamics.h"
#include "tacwipe/taskctl/task_loss.h"

namespace tacwipe {

struct OptConfig {
  int horizon = 4;
  int gamma_candidates = 5;
  int epochs = 3;
  double gamma_max = 0.1;
};

// ascending step sizes gamma_max * r^(candidates-j), r = 10^(-1/2):
// {0.001, 0.00316, 0.01, 0.0316, 0.1} for the defaults
std::vector<double> GammaGrid(const OptConfig& config);

// previous plan shifted one tick with the last control duplicated
Eigen::MatrixXd WarmStart(const Eigen::MatrixXd& prev_plan);

// neutral plan: zero moments, nominal force target, repeated
Eigen::MatrixXd ColdStartPlan(int horizon);

// clamp every column to the control bounds
void ProjectPlan(Eigen::MatrixXd& plan);

struct PlanResult {
  Eigen::MatrixXd plan;        // best plan found (3 x horizon)
  ControlInput first;          // plan's first control, ready to execute
  double init_loss = 0;
  double final_loss = 0;
  bool aborted_nonfinite = false;  // model diverged; plan = projected init
};

// Three rounds of steepest descent with step-size search: each round
// backpropagates the task loss through the rollout, tries every gamma in the
// grid (projected to bounds), and keeps the lowest-loss candidate, smaller
// gamma winning ties. The best plan across rounds is returned and never loses
// to the initial plan. Any non-finite loss or gradient aborts the step and
// returns the projected initial plan with the flag set.
PlanResult OptimizePlan(const HorizonDynamics& dynamics, const TaskLossConfig& loss,
                        const OptConfig& config, const Eigen::MatrixXd& init_plan);

}  // namespace tacwipe

#endif  // TACWIPE_TASKCTL_PLAN_OPTIMIZER_H_
