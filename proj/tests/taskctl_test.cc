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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "grad_check.h"
#include "tacwipe/sim/taxel_layout.h"
#include "tacwipe/taskctl/dynamics.h"
#include "tacwipe/taskctl/plan_optimizer.h"
#include "tacwipe/taskctl/task_loss.h"
#include "tacwipe/ttnpb/model.h"

namespace tacwipe {
namespace {

using Eigen::MatrixXd;
using testing_util::RelError;

std::vector<LayerSpec> SmallModelSpec() {
  return {{LayerKind::kFullyConnected, 80, 12, Activation::kTanh},
          {LayerKind::kLstm, 12, 8, Activation::kTanh},
          {LayerKind::kFullyConnected, 8, 72, Activation::kLinear}};
}

TtnpbModel SmallModel(uint64_t seed) {
  TtnpbModel model;
  model.net = Network::Random(SmallModelSpec(), seed);
  return model;
}

// transition model that copies the scaled force input straight to the output:
// one linear layer with an identity block over the 72 force rows, so every
// rollout frame equals the starting frame in raw units
TtnpbModel PassthroughModel() {
  TtnpbModel model;
  model.net = Network({{LayerKind::kFullyConnected, 80, 72, Activation::kLinear}});
  Eigen::Map<MatrixXd> w(model.net.params().data(), 72, 80);
  for (int i = 0; i < 72; ++i) w(i, i) = 1.0;
  return model;
}

MatrixXd RandomPlan(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> tau(-30, 30);
  std::uniform_real_distribution<double> force(80, 280);
  MatrixXd plan(3, n);
  for (int t = 0; t < n; ++t) {
    plan(0, t) = tau(rng);
    plan(1, t) = tau(rng);
    plan(2, t) = force(rng);
  }
  return plan;
}

Eigen::Matrix<double, 72, 1> RandomFrame(std::mt19937_64& rng) {
  std::normal_distribution<double> shear(0, 30);
  std::normal_distribution<double> normal(200, 40);
  Eigen::Matrix<double, 72, 1> frame;
  for (int i = 0; i < 48; ++i) frame[i] = shear(rng);
  for (int i = 48; i < 72; ++i) frame[i] = normal(rng);
  return frame;
}

TaskLossConfig LossConfig(TaskLossKind kind) {
  TaskLossConfig config;
  config.kind = kind;
  config.right_taxels = RightColumnIndices(MakeTaxelLayout());
  return config;
}

TEST(GammaGrid, DefaultsAreTheAscendingHalfDecadeGrid) {
  const std::vector<double> grid = GammaGrid(OptConfig{});
  ASSERT_EQ(grid.size(), 5u);
  const double expect[] = {1e-3, std::pow(10.0, -2.5), 1e-2, std::pow(10.0, -1.5), 1e-1};
  for (int j = 0; j < 5; ++j) EXPECT_NEAR(grid[j], expect[j], 1e-15) << "entry " << j;
  for (int j = 1; j < 5; ++j) EXPECT_GT(grid[j], grid[j - 1]);
}

TEST(WarmStart, ShiftsAndDuplicatesLastColumn) {
  MatrixXd prev(3, 4);
  prev << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12;
  const MatrixXd shifted = WarmStart(prev);
  EXPECT_EQ(shifted.col(0), prev.col(1));
  EXPECT_EQ(shifted.col(1), prev.col(2));
  EXPECT_EQ(shifted.col(2), prev.col(3));
  EXPECT_EQ(shifted.col(3), prev.col(3));
}

TEST(ColdStartPlan, NeutralMomentsNominalForce) {
  const MatrixXd plan = ColdStartPlan(4);
  ASSERT_EQ(plan.cols(), 4);
  for (int t = 0; t < 4; ++t) {
    EXPECT_EQ(plan(0, t), 0.0);
    EXPECT_EQ(plan(1, t), 0.0);
    EXPECT_EQ(plan(2, t), 200.0);
  }
}

TEST(ProjectPlan, ClampsEveryRowToItsBounds) {
  MatrixXd plan(3, 2);
  plan << 60, -70, -55, 12, 400, 20;
  ProjectPlan(plan);
  EXPECT_EQ(plan(0, 0), 50.0);
  EXPECT_EQ(plan(0, 1), -50.0);
  EXPECT_EQ(plan(1, 0), -50.0);
  EXPECT_EQ(plan(1, 1), 12.0);
  EXPECT_EQ(plan(2, 0), 300.0);
  EXPECT_EQ(plan(2, 1), 50.0);
}

Eigen::Matrix3Xd HeldTrack(const Eigen::Vector3d& pos, int horizon) {
  return pos.replicate(1, horizon);
}

TEST(TtnpbHorizon, PassthroughModelRepeatsTheStartingFrame) {
  const TtnpbModel model = PassthroughModel();
  Eigen::Matrix<double, 72, 1> force;
  for (int i = 0; i < 72; ++i) force[i] = 100.0 + 25.0 * (i % 4);  // /200 exact
  RecurrentState live = model.net.MakeState(1);
  const TtnpbHorizon dynamics(model, force, HeldTrack({0, 0, -1}, 4), {0.1, 0.2}, live, 4);
  std::mt19937_64 rng(3);
  const MatrixXd frames = dynamics.Expand(RandomPlan(4, rng));
  ASSERT_EQ(frames.rows(), 72);
  ASSERT_EQ(frames.cols(), 4);
  for (int t = 0; t < 4; ++t) {
    EXPECT_EQ(frames.col(t), force) << "step " << t;
  }
}

TEST(TtnpbHorizon, OneStepHorizonMatchesPredict) {
  const TtnpbModel model = SmallModel(11);
  std::mt19937_64 rng(4);
  const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
  const Eigen::Vector3d pos(5, -12, -1.5);
  const Eigen::Vector2d pb(0.2, -0.3);

  RecurrentState live = model.net.MakeState(1);
  // advance the live state so the snapshot is nontrivial
  Predict(model, RandomFrame(rng), pos, {3, -2, 180}, pb, live);
  Predict(model, RandomFrame(rng), pos, {1, 0, 210}, pb, live);

  const Eigen::Vector3d u(7.0, -4.0, 190.0);
  RecurrentState copy = live;
  const Eigen::Matrix<double, 72, 1> direct = Predict(model, force, pos, u, pb, copy);

  const TtnpbHorizon dynamics(model, force, HeldTrack(pos, 1), pb, live, 1);
  MatrixXd plan(3, 1);
  plan.col(0) = u;
  const MatrixXd frames = dynamics.Expand(plan);
  for (int i = 0; i < 72; ++i) EXPECT_NEAR(frames(i, 0), direct[i], 1e-14);
}

TEST(TtnpbHorizon, FollowsThePositionTrackStepByStep) {
  const TtnpbModel model = SmallModel(17);
  std::mt19937_64 rng(6);
  const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
  const Eigen::Vector2d pb(0.15, -0.25);
  RecurrentState live = model.net.MakeState(1);
  Predict(model, RandomFrame(rng), {0, 0, -1}, {2, 1, 205}, pb, live);

  Eigen::Matrix3Xd track(3, 2);
  track.col(0) = Eigen::Vector3d(6, -12, -1.0);
  track.col(1) = Eigen::Vector3d(12, -12, -1.0);  // hand keeps moving in x

  const TtnpbHorizon dynamics(model, force, track, pb, live, 2);
  MatrixXd plan(3, 2);
  plan.col(0) = Eigen::Vector3d(4, -1, 190);
  plan.col(1) = Eigen::Vector3d(5, 0, 210);
  const MatrixXd frames = dynamics.Expand(plan);

  RecurrentState manual = live;
  const Eigen::Matrix<double, 72, 1> f1 =
      Predict(model, force, track.col(0), plan.col(0), pb, manual);
  const Eigen::Matrix<double, 72, 1> f2 =
      Predict(model, f1, track.col(1), plan.col(1), pb, manual);
  for (int i = 0; i < 72; ++i) {
    EXPECT_NEAR(frames(i, 0), f1[i], 1e-14);
    EXPECT_NEAR(frames(i, 1), f2[i], 1e-14);
  }
  // a track that stops early predicts different contact than one that moves
  const TtnpbHorizon held(model, force, HeldTrack(track.col(0), 2), pb, live, 2);
  EXPECT_NE(held.Expand(plan).col(1), frames.col(1));
}

TEST(TtnpbHorizon, ExpandIsPureAndLeavesLiveStateAlone) {
  const TtnpbModel model = SmallModel(12);
  std::mt19937_64 rng(5);
  const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
  RecurrentState live = model.net.MakeState(1);
  Predict(model, RandomFrame(rng), {0, 0, -1}, {0, 0, 200}, {0, 0}, live);
  const RecurrentState before = live;

  const TtnpbHorizon dynamics(model, force, HeldTrack({0, 0, -1}, 4), {0.1, -0.1}, live, 4);
  const MatrixXd plan = RandomPlan(4, rng);
  const MatrixXd a = dynamics.Expand(plan);
  const MatrixXd b = dynamics.Expand(plan);
  EXPECT_EQ(a, b);
  ASSERT_EQ(live.h.size(), before.h.size());
  for (size_t l = 0; l < live.h.size(); ++l) {
    EXPECT_EQ(live.h[l], before.h[l]);
    EXPECT_EQ(live.c[l], before.c[l]);
  }
}

TEST(TtnpbHorizon, ExpandGradMatchesFiniteDifferences) {
  const TaskLossKind kinds[] = {TaskLossKind::kTrackNormal,
                                TaskLossKind::kShearVarianceMin,
                                TaskLossKind::kBiasRight};
  for (int trial = 0; trial < 3; ++trial) {
    const TtnpbModel model = SmallModel(100 + trial);
    std::mt19937_64 rng(200 + trial);
    const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
    RecurrentState live = model.net.MakeState(1);
    Predict(model, RandomFrame(rng), {2, -4, -1}, {0, 0, 200}, {0.1, 0.1}, live);
    Predict(model, RandomFrame(rng), {2, -4, -1}, {5, 2, 220}, {0.1, 0.1}, live);

    const TtnpbHorizon dynamics(model, force, HeldTrack({2, -4, -1}, 4), {0.1, 0.1}, live, 4);
    const TaskLossConfig config = LossConfig(kinds[trial]);
    const MatrixXd plan = RandomPlan(4, rng);

    const MatrixXd frames = dynamics.Expand(plan);
    MatrixXd frame_grad, plan_direct;
    TaskLossGrad(config, frames, plan, &frame_grad, &plan_direct);
    const MatrixXd analytic = dynamics.ExpandGrad(plan, frame_grad) + plan_direct;

    const double h = 1e-3;
    double max_err = 0;
    for (int t = 0; t < 4; ++t) {
      for (int r = 0; r < 3; ++r) {
        MatrixXd plus = plan, minus = plan;
        plus(r, t) += h;
        minus(r, t) -= h;
        const double numeric = (TaskLoss(config, dynamics.Expand(plus), plus) -
                                TaskLoss(config, dynamics.Expand(minus), minus)) /
                               (2 * h);
        max_err = std::max(max_err, RelError(analytic(r, t), numeric));
      }
    }
    EXPECT_LE(max_err, 1e-3) << "trial " << trial;
  }
}

TEST(TaskLoss, PerfectTrackingCostsNothing) {
  const TaskLossConfig config = LossConfig(TaskLossKind::kTrackNormal);
  MatrixXd frames = MatrixXd::Zero(72, 4);
  frames.topRows(48).setConstant(17.0);  // shear rows are ignored by this kind
  frames.bottomRows(24).setConstant(config.force_ref);
  const MatrixXd plan = ColdStartPlan(4);
  EXPECT_EQ(TaskLoss(config, frames, plan), 0.0);
}

TEST(TaskLoss, UniformShearLeavesOnlyTheSmoothnessTerm) {
  const TaskLossConfig config = LossConfig(TaskLossKind::kShearVarianceMin);
  MatrixXd frames = MatrixXd::Zero(72, 3);
  for (int t = 0; t < 3; ++t) {
    frames.col(t).segment(24, 24).setConstant(7.0 - 5.0 * t);  // equal across taxels
    frames.col(t).bottomRows(24).setConstant(150.0);
  }
  MatrixXd plan(3, 3);
  plan << 5, -10, 20, 0, 15, -5, 200, 150, 260;

  double smoothness = 0;
  const Eigen::Vector3d scale(config.scaling.tau_scale, config.scaling.tau_scale,
                              config.scaling.fz_ref_scale);
  for (int t = 1; t < 3; ++t) {
    smoothness += config.smoothness_weight *
                  ((plan.col(t) - plan.col(t - 1)).cwiseQuotient(scale)).squaredNorm();
  }
  EXPECT_NEAR(TaskLoss(config, frames, plan), smoothness, 1e-15);
}

TEST(TaskLoss, PerfectRightColumnBiasCostsNothing) {
  const TaskLossConfig config = LossConfig(TaskLossKind::kBiasRight);
  MatrixXd frames = MatrixXd::Zero(72, 4);
  for (int i : config.right_taxels) {
    frames.row(48 + i).setConstant(config.force_ref);
  }
  EXPECT_EQ(TaskLoss(config, frames, ColdStartPlan(4)), 0.0);
}

TEST(TaskLossGrad, MatchesFiniteDifferencesForEveryKind) {
  const TaskLossKind kinds[] = {TaskLossKind::kTrackNormal,
                                TaskLossKind::kShearVarianceMin,
                                TaskLossKind::kBiasRight};
  std::mt19937_64 rng(9);
  for (const TaskLossKind kind : kinds) {
    const TaskLossConfig config = LossConfig(kind);
    const int n = 4;
    MatrixXd frames(72, n);
    for (int t = 0; t < n; ++t) frames.col(t) = RandomFrame(rng);
    const MatrixXd plan = RandomPlan(n, rng);

    MatrixXd frame_grad, plan_grad;
    TaskLossGrad(config, frames, plan, &frame_grad, &plan_grad);

    // every kind is quadratic, so central differences are exact up to rounding
    double max_err = 0;
    const double hf = 0.5;
    for (int t = 0; t < n; ++t) {
      for (int i = 0; i < 72; ++i) {
        MatrixXd plus = frames, minus = frames;
        plus(i, t) += hf;
        minus(i, t) -= hf;
        const double numeric =
            (TaskLoss(config, plus, plan) - TaskLoss(config, minus, plan)) / (2 * hf);
        max_err = std::max(max_err, RelError(frame_grad(i, t), numeric));
      }
    }
    const double hp = 5.0;
    for (int t = 0; t < n; ++t) {
      for (int r = 0; r < 3; ++r) {
        MatrixXd plus = plan, minus = plan;
        plus(r, t) += hp;
        minus(r, t) -= hp;
        const double numeric =
            (TaskLoss(config, frames, plus) - TaskLoss(config, frames, minus)) / (2 * hp);
        max_err = std::max(max_err, RelError(plan_grad(r, t), numeric));
      }
    }
    EXPECT_LE(max_err, 1e-6) << "kind " << static_cast<int>(kind);
  }
}

// analytically transparent dynamics: every normal-force row equals the plan's
// force target, shear is zero; lets the optimizer be checked against a manual
// replication of its search
class FzPassthroughDynamics : public HorizonDynamics {
 public:
  explicit FzPassthroughDynamics(int n) : n_(n) {}
  int horizon() const override { return n_; }
  MatrixXd Expand(const MatrixXd& plan) const override {
    MatrixXd frames = MatrixXd::Zero(72, plan.cols());
    frames.bottomRows(24) = plan.row(2).replicate(24, 1);
    return frames;
  }
  MatrixXd ExpandGrad(const MatrixXd& plan,
                      const MatrixXd& frame_grad) const override {
    MatrixXd grad = MatrixXd::Zero(3, plan.cols());
    grad.row(2) = frame_grad.bottomRows(24).colwise().sum();
    return grad;
  }

 private:
  int n_;
};

TEST(OptimizePlan, OneRoundMatchesManualStepSizeSearch) {
  const FzPassthroughDynamics dynamics(4);
  const TaskLossConfig loss = LossConfig(TaskLossKind::kTrackNormal);
  OptConfig config;
  config.epochs = 1;
  MatrixXd init(3, 4);
  init.row(0).setZero();
  init.row(1).setZero();
  init.row(2).setConstant(100.0);

  // manual replication of one descent round over the step-size grid
  const auto eval = [&](const MatrixXd& p) {
    return TaskLoss(loss, dynamics.Expand(p), p);
  };
  MatrixXd frames = dynamics.Expand(init);
  MatrixXd frame_grad, plan_direct;
  TaskLossGrad(loss, frames, init, &frame_grad, &plan_direct);
  const MatrixXd grad = dynamics.ExpandGrad(init, frame_grad) + plan_direct;
  MatrixXd manual_best;
  double manual_loss = std::numeric_limits<double>::infinity();
  for (const double gamma : GammaGrid(config)) {
    MatrixXd candidate = init - gamma * grad;
    ProjectPlan(candidate);
    const double candidate_loss = eval(candidate);
    if (candidate_loss < manual_loss) {
      manual_loss = candidate_loss;
      manual_best = candidate;
    }
  }
  const double init_loss = eval(init);
  if (init_loss < manual_loss) {
    manual_loss = init_loss;
    manual_best = init;
  }

  const PlanResult result = OptimizePlan(dynamics, loss, config, init);
  EXPECT_EQ(result.init_loss, init_loss);
  EXPECT_EQ(result.final_loss, manual_loss);
  EXPECT_EQ(result.plan, manual_best);
  EXPECT_LT(result.final_loss, result.init_loss);
  // the chosen force target moved toward the reference without overshooting
  // past a bound
  EXPECT_GT(result.plan(2, 0), 100.0);
  EXPECT_LE(result.plan(2, 0), 300.0);
  EXPECT_EQ(result.first.force, result.plan(2, 0));
}

TEST(OptimizePlan, NeverReturnsWorseThanTheInitialPlan) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const TtnpbModel model = SmallModel(300 + trial);
    const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
    RecurrentState live = model.net.MakeState(1);
    const TtnpbHorizon dynamics(model, force, HeldTrack({0, -5, -1}, 4), {0.05, -0.05}, live, 4);
    const TaskLossConfig loss =
        LossConfig(static_cast<TaskLossKind>(trial % 3));
    const MatrixXd init = RandomPlan(4, rng);
    const PlanResult result = OptimizePlan(dynamics, loss, OptConfig{}, init);
    EXPECT_LE(result.final_loss, result.init_loss + 1e-12) << "trial " << trial;
    EXPECT_FALSE(result.aborted_nonfinite);
    EXPECT_EQ(result.final_loss, TaskLoss(loss, dynamics.Expand(result.plan), result.plan));
  }
}

TEST(OptimizePlan, ZeroGradientIsAFixedPoint) {
  // zero-weight model predicts zero frames no matter the plan, and a constant
  // plan has zero smoothness gradient, so descent has nowhere to go
  TtnpbModel model;
  model.net = Network(SmallModelSpec());
  Eigen::Matrix<double, 72, 1> force;
  force.setConstant(120.0);
  RecurrentState live = model.net.MakeState(1);
  const TtnpbHorizon dynamics(model, force, HeldTrack({0, 0, -1}, 4), {0, 0}, live, 4);
  const MatrixXd init = ColdStartPlan(4);
  const PlanResult result =
      OptimizePlan(dynamics, LossConfig(TaskLossKind::kTrackNormal), OptConfig{}, init);
  EXPECT_EQ(result.plan, init);
  EXPECT_EQ(result.final_loss, result.init_loss);
}

TEST(OptimizePlan, ResultAlwaysRespectsControlBounds) {
  std::mt19937_64 rng(33);
  const TtnpbModel model = SmallModel(44);
  const Eigen::Matrix<double, 72, 1> force = RandomFrame(rng);
  RecurrentState live = model.net.MakeState(1);
  const TtnpbHorizon dynamics(model, force, HeldTrack({0, 0, -1}, 4), {0.3, 0.3}, live, 4);

  MatrixXd init(3, 4);  // deliberately out of bounds
  init << 90, -90, 0, 10, 60, -60, 45, -45, 400, 10, 200, 350;
  const PlanResult result =
      OptimizePlan(dynamics, LossConfig(TaskLossKind::kTrackNormal), OptConfig{}, init);
  for (int t = 0; t < 4; ++t) {
    EXPECT_GE(result.plan(0, t), ControlInput::kTauMin);
    EXPECT_LE(result.plan(0, t), ControlInput::kTauMax);
    EXPECT_GE(result.plan(1, t), ControlInput::kTauMin);
    EXPECT_LE(result.plan(1, t), ControlInput::kTauMax);
    EXPECT_GE(result.plan(2, t), ControlInput::kForceMin);
    EXPECT_LE(result.plan(2, t), ControlInput::kForceMax);
  }
  EXPECT_EQ(result.first.tau_roll, result.plan(0, 0));
  EXPECT_EQ(result.first.tau_pitch, result.plan(1, 0));
  EXPECT_EQ(result.first.force, result.plan(2, 0));
}

TEST(EvalMetrics, ZeroErrorFixtures) {
  const std::vector<int> right = RightColumnIndices(MakeTaxelLayout());

  // uniform normal force at the reference: no tracking error
  Eigen::Matrix<double, 72, 1> tracking = Eigen::Matrix<double, 72, 1>::Zero();
  tracking.tail(24).setConstant(200.0);
  tracking.segment(24, 24).setConstant(4.0);
  const EvalSummary s1 = EvalMetrics({tracking, tracking, tracking}, 200.0, right);
  EXPECT_EQ(s1.e1, 0.0);
  EXPECT_EQ(s1.steps, 3);

  // shear equal across taxels: zero spread, nothing excluded
  EXPECT_EQ(s1.e2, 0.0);
  EXPECT_EQ(s1.e2_excluded, 0);

  // reference force on the right column, nothing elsewhere: no bias error
  Eigen::Matrix<double, 72, 1> biased = Eigen::Matrix<double, 72, 1>::Zero();
  for (int i : right) biased[48 + i] = 200.0;
  const EvalSummary s3 = EvalMetrics({biased, biased}, 200.0, right);
  EXPECT_EQ(s3.e3, 0.0);
}

TEST(EvalMetrics, VanishingShearStepsAreExcludedNotAveraged) {
  Eigen::Matrix<double, 72, 1> quiet = Eigen::Matrix<double, 72, 1>::Zero();
  quiet.tail(24).setConstant(100.0);
  const EvalSummary summary = EvalMetrics({quiet, quiet}, 200.0, {});
  EXPECT_EQ(summary.e2, 0.0);
  EXPECT_EQ(summary.e2_excluded, 2);
  EXPECT_EQ(summary.steps, 2);
  EXPECT_GT(summary.e1, 0.0);
}

TEST(EvalMetrics, EmptyRunReportsZeroSteps) {
  const EvalSummary summary = EvalMetrics({}, 200.0, {});
  EXPECT_EQ(summary.steps, 0);
  EXPECT_EQ(summary.e1, 0.0);
}

TEST(EvalMetrics, TrackingLossEqualsSumOfSquaredPerStepErrors) {
  std::mt19937_64 rng(14);
  const int n = 4;
  MatrixXd frames(72, n);
  std::vector<Eigen::Matrix<double, 72, 1>> frame_list;
  for (int t = 0; t < n; ++t) {
    frames.col(t) = RandomFrame(rng);
    frame_list.push_back(frames.col(t));
  }
  const TaskLossConfig config = LossConfig(TaskLossKind::kTrackNormal);
  const double loss = TaskLoss(config, frames, ColdStartPlan(n));  // constant plan

  double expected = 0;
  for (const auto& frame : frame_list) {
    const double e1 = EvalMetrics({frame}, config.force_ref, {}).e1;
    expected += e1 * e1;
  }
  EXPECT_NEAR(loss, expected, 1e-9 * expected);
}

}  // namespace
}  // namespace tacwipe
