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

#include "tacwipe/taskctl/task_loss.h"

#include <cmath>

namespace tacwipe {
namespace {

using Eigen::MatrixXd;

constexpr int kTaxels = 24;

Eigen::Vector3d ScaleVec(const ScalingConstants& s) {
  return {s.tau_scale, s.tau_scale, s.fz_ref_scale};
}

// membership mask over the 24 taxels, 1 for right-column entries
Eigen::Array<double, 24, 1> RightMask(const std::vector<int>& right_taxels) {
  Eigen::Array<double, 24, 1> mask = Eigen::Array<double, 24, 1>::Zero();
  for (int i : right_taxels) mask[i] = 1.0;
  return mask;
}

}  // namespace

double TaskLoss(const TaskLossConfig& config, const MatrixXd& frames,
                const MatrixXd& plan) {
  const int n = static_cast<int>(frames.cols());
  double loss = 0;
  switch (config.kind) {
    case TaskLossKind::kTrackNormal: {
      loss = (frames.bottomRows(kTaxels).array() - config.force_ref).square().sum();
      break;
    }
    case TaskLossKind::kShearVarianceMin: {
      for (int t = 0; t < n; ++t) {
        const auto fy = frames.col(t).segment(kTaxels, kTaxels).array();
        loss += (fy - fy.mean()).square().mean();
      }
      loss /= n;
      break;
    }
    case TaskLossKind::kBiasRight: {
      const auto mask = RightMask(config.right_taxels);
      for (int t = 0; t < n; ++t) {
        const auto fz = frames.col(t).tail(kTaxels).array();
        loss += (mask * (fz - config.force_ref).square() +
                 (1.0 - mask) * fz.square()).sum();
      }
      break;
    }
  }

  const Eigen::Vector3d scale = ScaleVec(config.scaling);
  for (int t = 1; t < static_cast<int>(plan.cols()); ++t) {
    const Eigen::Vector3d delta =
        (plan.col(t) - plan.col(t - 1)).cwiseQuotient(scale);
    loss += config.smoothness_weight * delta.squaredNorm();
  }
  return loss;
}

void TaskLossGrad(const TaskLossConfig& config, const MatrixXd& frames,
                  const MatrixXd& plan, MatrixXd* frame_grad, MatrixXd* plan_grad) {
  const int n = static_cast<int>(frames.cols());
  if (frame_grad) {
    frame_grad->setZero(72, n);
    switch (config.kind) {
      case TaskLossKind::kTrackNormal: {
        frame_grad->bottomRows(kTaxels) =
            2.0 * (frames.bottomRows(kTaxels).array() - config.force_ref).matrix();
        break;
      }
      case TaskLossKind::kShearVarianceMin: {
        for (int t = 0; t < n; ++t) {
          const auto fy = frames.col(t).segment(kTaxels, kTaxels).array();
          frame_grad->col(t).segment(kTaxels, kTaxels) =
              (2.0 / (kTaxels * n) * (fy - fy.mean())).matrix();
        }
        break;
      }
      case TaskLossKind::kBiasRight: {
        const auto mask = RightMask(config.right_taxels);
        for (int t = 0; t < n; ++t) {
          const auto fz = frames.col(t).tail(kTaxels).array();
          frame_grad->col(t).tail(kTaxels) =
              (2.0 * (mask * (fz - config.force_ref) + (1.0 - mask) * fz)).matrix();
        }
        break;
      }
    }
  }

  if (plan_grad) {
    plan_grad->setZero(3, plan.cols());
    const Eigen::Vector3d scale = ScaleVec(config.scaling);
    for (int t = 1; t < static_cast<int>(plan.cols()); ++t) {
      const Eigen::Vector3d d = 2.0 * config.smoothness_weight *
                                (plan.col(t) - plan.col(t - 1)).cwiseQuotient(scale)
                                    .cwiseQuotient(scale);
      plan_grad->col(t) += d;
      plan_grad->col(t - 1) -= d;
    }
  }
}

EvalSummary EvalMetrics(const std::vector<Eigen::Matrix<double, 72, 1>>& frames,
                        double force_ref, const std::vector<int>& right_taxels) {
  EvalSummary summary;
  summary.steps = static_cast<int>(frames.size());
  if (frames.empty()) return summary;

  const auto mask = RightMask(right_taxels);
  double e1_sum = 0, e2_sum = 0, e3_sum = 0;
  int e2_steps = 0;
  for (const auto& frame : frames) {
    const auto fy = frame.segment(kTaxels, kTaxels).array();
    const auto fz = frame.tail(kTaxels).array();

    e1_sum += std::sqrt((fz - force_ref).square().sum());

    const double mean_abs = fy.abs().mean();
    if (mean_abs >= 1e-9) {
      const double variance = (fy - fy.mean()).square().mean();
      e2_sum += std::sqrt(variance) / mean_abs;
      ++e2_steps;
    } else {
      ++summary.e2_excluded;
    }

    const double right = (mask * (fz - force_ref).square()).sum();
    const double left = ((1.0 - mask) * fz.square()).sum();
    e3_sum += std::sqrt(right) + std::sqrt(left);
  }
  summary.e1 = e1_sum / summary.steps;
  summary.e2 = e2_steps > 0 ? e2_sum / e2_steps : 0.0;
  summary.e3 = e3_sum / summary.steps;
  return summary;
}

}  // namespace tacwipe
