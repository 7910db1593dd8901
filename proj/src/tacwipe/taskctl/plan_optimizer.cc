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

#include "tacwipe/taskctl/plan_optimizer.h"

#include <cmath>

namespace tacwipe {

using Eigen::MatrixXd;

std::vector<double> GammaGrid(const OptConfig& config) {
  std::vector<double> grid(config.gamma_candidates);
  const double ratio = std::pow(10.0, -0.5);
  for (int j = 0; j < config.gamma_candidates; ++j) {
    grid[j] = config.gamma_max * std::pow(ratio, config.gamma_candidates - 1 - j);
  }
  return grid;
}

MatrixXd WarmStart(const MatrixXd& prev_plan) {
  MatrixXd plan(prev_plan.rows(), prev_plan.cols());
  const int n = static_cast<int>(prev_plan.cols());
  plan.leftCols(n - 1) = prev_plan.rightCols(n - 1);
  plan.col(n - 1) = prev_plan.col(n - 1);
  return plan;
}

MatrixXd ColdStartPlan(int horizon) {
  MatrixXd plan(3, horizon);
  plan.row(0).setZero();
  plan.row(1).setZero();
  plan.row(2).setConstant(200.0);
  return plan;
}

void ProjectPlan(MatrixXd& plan) {
  plan.row(0) = plan.row(0).cwiseMax(ControlInput::kTauMin).cwiseMin(ControlInput::kTauMax);
  plan.row(1) = plan.row(1).cwiseMax(ControlInput::kTauMin).cwiseMin(ControlInput::kTauMax);
  plan.row(2) = plan.row(2).cwiseMax(ControlInput::kForceMin).cwiseMin(ControlInput::kForceMax);
}

PlanResult OptimizePlan(const HorizonDynamics& dynamics, const TaskLossConfig& loss,
                        const OptConfig& config, const Eigen::MatrixXd& init_plan) {
  PlanResult result;
  MatrixXd init = init_plan;
  ProjectPlan(init);

  auto eval = [&](const MatrixXd& plan) {
    return TaskLoss(loss, dynamics.Expand(plan), plan);
  };
  auto abort_with_init = [&]() {
    result.aborted_nonfinite = true;
    result.plan = init;
    result.first = ControlInput::FromVector(init.col(0));
    result.final_loss = result.init_loss;
    return result;
  };

  result.init_loss = eval(init);
  if (!std::isfinite(result.init_loss)) return abort_with_init();

  const std::vector<double> gammas = GammaGrid(config);
  MatrixXd plan = init;
  MatrixXd best_plan = init;
  double best_loss = result.init_loss;
  double plan_loss = result.init_loss;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const MatrixXd frames = dynamics.Expand(plan);
    MatrixXd frame_grad, plan_direct;
    TaskLossGrad(loss, frames, plan, &frame_grad, &plan_direct);
    const MatrixXd grad = dynamics.ExpandGrad(plan, frame_grad) + plan_direct;
    if (!grad.allFinite()) return abort_with_init();

    // step-size search: ascending grid, strict improvement keeps small gamma
    bool found = false;
    MatrixXd chosen;
    double chosen_loss = 0;
    for (double gamma : gammas) {
      MatrixXd candidate = plan - gamma * grad;
      ProjectPlan(candidate);
      const double candidate_loss = eval(candidate);
      if (!std::isfinite(candidate_loss)) continue;
      if (!found || candidate_loss < chosen_loss) {
        found = true;
        chosen = std::move(candidate);
        chosen_loss = candidate_loss;
      }
    }
    if (!found) return abort_with_init();

    plan = std::move(chosen);
    plan_loss = chosen_loss;
    if (plan_loss < best_loss) {
      best_loss = plan_loss;
      best_plan = plan;
    }
  }

  result.plan = best_plan;
  result.first = ControlInput::FromVector(best_plan.col(0));
  result.final_loss = best_loss;
  return result;
}

}  // namespace tacwipe
