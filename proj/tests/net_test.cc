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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "grad_check.h"
#include "tacwipe/net/network.h"
#include "tacwipe/net/optim.h"

namespace tacwipe {
namespace {

using testing_util::AnalyticSequenceGrads;
using testing_util::MaxGradError;
using testing_util::RandomSequence;

std::vector<LayerSpec> MixedSpec() {
  return {{LayerKind::kFullyConnected, 4, 5, Activation::kTanh},
          {LayerKind::kFullyConnected, 5, 5, Activation::kTanh},
          {LayerKind::kLstm, 5, 4, Activation::kTanh},
          {LayerKind::kFullyConnected, 4, 4, Activation::kTanh},
          {LayerKind::kLstm, 4, 3, Activation::kTanh},
          {LayerKind::kFullyConnected, 3, 2, Activation::kLinear}};
}

TEST(LayerSpec, ParamCountFormulas) {
  EXPECT_EQ(LayerParamCount({LayerKind::kFullyConnected, 7, 5, Activation::kTanh}),
            5 * 7 + 5);
  // LSTM: Wx (4H x in) + Wh (4H x H) + b (4H)
  EXPECT_EQ(LayerParamCount({LayerKind::kLstm, 7, 5, Activation::kTanh}),
            20 * 7 + 20 * 5 + 20);
  EXPECT_EQ(TotalParamCount(MixedSpec()),
            (5 * 4 + 5) + (5 * 5 + 5) + (16 * 5 + 16 * 4 + 16) + (4 * 4 + 4) +
                (12 * 4 + 12 * 3 + 12) + (2 * 3 + 2));
}

TEST(LayerSpec, ValidationRejectsBrokenChains) {
  std::vector<LayerSpec> bad = MixedSpec();
  bad[2].in_dim = 7;  // does not chain from layer 1's out_dim
  EXPECT_THROW(ValidateSpec(bad), BadNetworkSpec);
  bad = MixedSpec();
  bad[0].out_dim = 0;
  EXPECT_THROW(ValidateSpec(bad), BadNetworkSpec);
  EXPECT_THROW(ValidateSpec({}), BadNetworkSpec);
}

TEST(Network, ZeroWeightsZeroInputGiveZeroOutput) {
  Network net(MixedSpec());
  RecurrentState rstate = net.MakeState(2);
  const Eigen::MatrixXd out = net.Forward(Eigen::MatrixXd::Zero(4, 2), rstate, nullptr);
  EXPECT_EQ(out.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Network, SingleTanhLayerWithIdentityWeights) {
  Network net({{LayerKind::kFullyConnected, 3, 3, Activation::kTanh}});
  Eigen::Map<Eigen::MatrixXd> w(net.params().data(), 3, 3);
  w.setIdentity();
  Eigen::MatrixXd x(3, 1);
  x << 0.3, -1.2, 2.0;
  RecurrentState rstate = net.MakeState(1);
  const Eigen::MatrixXd out = net.Forward(x, rstate, nullptr);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(out(i, 0), std::tanh(x(i, 0)), 1e-15);
}

TEST(Network, ForwardIsPure) {
  Network net = Network::Random(MixedSpec(), 7);
  std::mt19937_64 rng(8);
  const auto inputs = RandomSequence(4, 3, 2, rng);
  RecurrentState a = net.MakeState(3);
  RecurrentState b = net.MakeState(3);
  for (const auto& x : inputs) {
    EXPECT_EQ(net.Forward(x, a, nullptr), net.Forward(x, b, nullptr));
  }
}

TEST(Network, ForwardRejectsWrongInputRows) {
  Network net = Network::Random(MixedSpec(), 7);
  RecurrentState rstate = net.MakeState(1);
  EXPECT_THROW(net.Forward(Eigen::MatrixXd::Zero(5, 1), rstate, nullptr),
               DimensionMismatch);
}

TEST(Network, LinearLayerBackwardMatchesClosedForm) {
  Network net({{LayerKind::kFullyConnected, 4, 3, Activation::kLinear}});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int i = 0; i < net.param_count(); ++i) net.params()[i] = dist(rng);
  const Eigen::Map<const Eigen::MatrixXd> w(net.params().data(), 3, 4);

  Eigen::MatrixXd x(4, 1), g(3, 1);
  for (int i = 0; i < 4; ++i) x(i, 0) = dist(rng);
  for (int i = 0; i < 3; ++i) g(i, 0) = dist(rng);

  RecurrentState rstate = net.MakeState(1);
  StepTape tape;
  net.Forward(x, rstate, &tape);
  RecurrentGrad rgrad = net.MakeGrad(1);
  Eigen::VectorXd param_grad = Eigen::VectorXd::Zero(net.param_count());
  const Eigen::MatrixXd input_grad = net.Backward(tape, g, rgrad, param_grad);

  EXPECT_LT((input_grad - w.transpose() * g).cwiseAbs().maxCoeff(), 1e-14);
  const Eigen::Map<const Eigen::MatrixXd> dw(param_grad.data(), 3, 4);
  EXPECT_LT((dw - g * x.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((param_grad.tail(3) - g.col(0)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Network, ZeroOutputGradGivesZeroGrads) {
  Network net = Network::Random(MixedSpec(), 3);
  std::mt19937_64 rng(4);
  const auto inputs = RandomSequence(4, 2, 1, rng);
  RecurrentState rstate = net.MakeState(2);
  StepTape tape;
  net.Forward(inputs[0], rstate, &tape);
  RecurrentGrad rgrad = net.MakeGrad(2);
  Eigen::VectorXd param_grad = Eigen::VectorXd::Zero(net.param_count());
  const Eigen::MatrixXd input_grad =
      net.Backward(tape, Eigen::MatrixXd::Zero(2, 2), rgrad, param_grad);
  EXPECT_EQ(input_grad.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(param_grad.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Network, FiniteDifferenceFcLayers) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Network net = Network::Random({{LayerKind::kFullyConnected, 6, 5, Activation::kTanh},
                                   {LayerKind::kFullyConnected, 5, 4, Activation::kLinear}},
                                  seed);
    std::mt19937_64 rng(seed + 100);
    const auto inputs = RandomSequence(6, 2, 3, rng);
    const auto targets = RandomSequence(4, 2, 3, rng);
    EXPECT_LE(MaxGradError(net, inputs, targets), 1e-4) << "seed " << seed;
  }
}

TEST(Network, FiniteDifferenceLstmLayer) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Network net = Network::Random({{LayerKind::kLstm, 5, 4, Activation::kTanh}}, seed);
    std::mt19937_64 rng(seed + 200);
    const auto inputs = RandomSequence(5, 2, 3, rng);
    const auto targets = RandomSequence(4, 2, 3, rng);
    EXPECT_LE(MaxGradError(net, inputs, targets), 1e-4) << "seed " << seed;
  }
}

TEST(Network, FiniteDifferenceMixedStack) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Network net = Network::Random(MixedSpec(), seed);
    std::mt19937_64 rng(seed + 300);
    const auto inputs = RandomSequence(4, 2, 3, rng);
    const auto targets = RandomSequence(2, 2, 3, rng);
    EXPECT_LE(MaxGradError(net, inputs, targets), 1e-4) << "seed " << seed;
  }
}

// gradient of the composed stack equals the chain of the two sub-stacks'
// gradients, at several split points
TEST(Network, TapeComposesAcrossSplits) {
  const std::vector<LayerSpec> spec = MixedSpec();
  Network full = Network::Random(spec, 13);
  std::mt19937_64 rng(14);
  const auto inputs = RandomSequence(4, 1, 2, rng);
  const auto targets = RandomSequence(2, 1, 2, rng);
  const testing_util::AnalyticGrads reference =
      AnalyticSequenceGrads(full, inputs, targets);

  std::vector<int> splits = {2, 3, 5};
  std::shuffle(splits.begin(), splits.end(), rng);
  for (int split : splits) {
    Network bottom(std::vector<LayerSpec>(spec.begin(), spec.begin() + split));
    Network top(std::vector<LayerSpec>(spec.begin() + split, spec.end()));
    const int cut = full.layer_offset(split);
    bottom.params() = full.params().head(cut);
    top.params() = full.params().tail(full.param_count() - cut);

    RecurrentState rs_bottom = bottom.MakeState(1);
    RecurrentState rs_top = top.MakeState(1);
    const int steps = static_cast<int>(inputs.size());
    std::vector<StepTape> tapes_bottom(steps), tapes_top(steps);
    std::vector<Eigen::MatrixXd> mids(steps), outs(steps);
    for (int t = 0; t < steps; ++t) {
      mids[t] = bottom.Forward(inputs[t], rs_bottom, &tapes_bottom[t]);
      outs[t] = top.Forward(mids[t], rs_top, &tapes_top[t]);
    }
    Eigen::VectorXd pg_bottom = Eigen::VectorXd::Zero(bottom.param_count());
    Eigen::VectorXd pg_top = Eigen::VectorXd::Zero(top.param_count());
    RecurrentGrad rg_bottom = bottom.MakeGrad(1);
    RecurrentGrad rg_top = top.MakeGrad(1);
    Eigen::MatrixXd first_input_grad;
    for (int t = steps - 1; t >= 0; --t) {
      const Eigen::MatrixXd mid_grad =
          top.Backward(tapes_top[t], outs[t] - targets[t], rg_top, pg_top);
      first_input_grad =
          bottom.Backward(tapes_bottom[t], mid_grad, rg_bottom, pg_bottom);
    }
    Eigen::VectorXd chained(full.param_count());
    chained << pg_bottom, pg_top;
    EXPECT_LT((chained - reference.params).cwiseAbs().maxCoeff(), 1e-12)
        << "split " << split;
    EXPECT_LT((first_input_grad - reference.inputs[0]).cwiseAbs().maxCoeff(), 1e-12)
        << "split " << split;
  }
}

TEST(Adam, FirstStepMovesByLearningRateAgainstGradientSign) {
  Eigen::VectorXd params = Eigen::VectorXd::Zero(4);
  Eigen::VectorXd grad(4);
  grad << 1.0, -2.0, 0.5, 3.0;
  AdamState state(4);
  const AdamConfig config;
  AdamStep(params, grad, state, config);
  for (int i = 0; i < 4; ++i) {
    const double sign = grad[i] > 0 ? 1.0 : -1.0;
    EXPECT_NEAR(params[i], -config.lr * sign, 1e-6 * config.lr) << "entry " << i;
  }
}

TEST(Adam, ZeroGradientLeavesParamsUnchanged) {
  Eigen::VectorXd params(3);
  params << 1.0, -2.0, 0.25;
  const Eigen::VectorXd before = params;
  AdamState state(3);
  AdamStep(params, Eigen::VectorXd::Zero(3), state, AdamConfig{});
  EXPECT_EQ(params, before);
}

TEST(Momentum, TwoConstantGradStepsUnrollExactly) {
  const double lr = 0.01, g = 0.7;
  Eigen::VectorXd params = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd grad(1);
  grad << g;
  MomentumState state(1);
  const MomentumConfig config{lr, 0.9};
  MomentumStep(params, grad, state, config);
  MomentumStep(params, grad, state, config);
  // v1 = -lr g; v2 = 0.9 v1 - lr g; total = -(1 + 1.9) lr g
  EXPECT_NEAR(params[0], -lr * g * 2.9, 1e-15);
}

TEST(Momentum, ZeroGradientZeroStateIsIdentity) {
  Eigen::VectorXd params(2);
  params << 5.0, -3.0;
  const Eigen::VectorXd before = params;
  MomentumState state(2);
  MomentumStep(params, Eigen::VectorXd::Zero(2), state, MomentumConfig{});
  EXPECT_EQ(params, before);
}

TEST(Network, RandomInitBoundsAndForgetBias) {
  const std::vector<LayerSpec> spec = {{LayerKind::kLstm, 6, 4, Activation::kTanh}};
  Network net = Network::Random(spec, 21);
  const int h = 4;
  const int wx = 4 * h * 6, wh = 4 * h * h;
  for (int i = 0; i < wx; ++i) {
    EXPECT_LE(std::abs(net.params()[i]), 1.0 / std::sqrt(6.0) + 1e-12);
  }
  // bias block: i, f, g, o rows; the forget rows start one block in
  const Eigen::VectorXd bias = net.params().segment(wx + wh, 4 * h);
  for (int i = 0; i < h; ++i) {
    EXPECT_EQ(bias[i], 0.0);          // input gate
    EXPECT_EQ(bias[h + i], 1.0);      // forget gate
    EXPECT_EQ(bias[2 * h + i], 0.0);  // candidate
    EXPECT_EQ(bias[3 * h + i], 0.0);  // output gate
  }
}

}  // namespace
}  // namespace tacwipe
