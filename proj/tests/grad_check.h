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

// test-only helpers: central-difference gradient checks of a network over a
// short input sequence, against the analytic reverse pass

#ifndef TACWIPE_TESTS_GRAD_CHECK_H_
#define TACWIPE_TESTS_GRAD_CHECK_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tacwipe/net/network.h"

namespace tacwipe {
namespace testing_util {

// 0.5 sum_t ||y_t - target_t||^2 over a fresh recurrent state
inline double SequenceLoss(const Network& net,
                           const std::vector<Eigen::MatrixXd>& inputs,
                           const std::vector<Eigen::MatrixXd>& targets) {
  RecurrentState rstate = net.MakeState(static_cast<int>(inputs[0].cols()));
  double loss = 0;
  for (size_t t = 0; t < inputs.size(); ++t) {
    const Eigen::MatrixXd out = net.Forward(inputs[t], rstate, nullptr);
    loss += 0.5 * (out - targets[t]).squaredNorm();
  }
  return loss;
}

struct AnalyticGrads {
  Eigen::VectorXd params;
  std::vector<Eigen::MatrixXd> inputs;
};

inline AnalyticGrads AnalyticSequenceGrads(
    const Network& net, const std::vector<Eigen::MatrixXd>& inputs,
    const std::vector<Eigen::MatrixXd>& targets) {
  const int batch = static_cast<int>(inputs[0].cols());
  const int steps = static_cast<int>(inputs.size());
  RecurrentState rstate = net.MakeState(batch);
  std::vector<StepTape> tapes(steps);
  std::vector<Eigen::MatrixXd> outs(steps);
  for (int t = 0; t < steps; ++t) {
    outs[t] = net.Forward(inputs[t], rstate, &tapes[t]);
  }
  AnalyticGrads grads;
  grads.params = Eigen::VectorXd::Zero(net.param_count());
  grads.inputs.resize(steps);
  RecurrentGrad rgrad = net.MakeGrad(batch);
  for (int t = steps - 1; t >= 0; --t) {
    const Eigen::MatrixXd output_grad = outs[t] - targets[t];
    grads.inputs[t] = net.Backward(tapes[t], output_grad, rgrad, grads.params);
  }
  return grads;
}

inline double RelError(double analytic, double numeric) {
  return std::abs(analytic - numeric) /
         std::max({std::abs(numeric), std::abs(analytic), 1e-4});
}

// max relative error between analytic and central-difference gradients over
// every parameter and every input entry
inline double MaxGradError(Network& net, std::vector<Eigen::MatrixXd> inputs,
                           const std::vector<Eigen::MatrixXd>& targets,
                           double h = 1e-5) {
  const AnalyticGrads analytic = AnalyticSequenceGrads(net, inputs, targets);
  double worst = 0;
  Eigen::VectorXd& params = net.params();
  for (int i = 0; i < net.param_count(); ++i) {
    const double saved = params[i];
    params[i] = saved + h;
    const double up = SequenceLoss(net, inputs, targets);
    params[i] = saved - h;
    const double down = SequenceLoss(net, inputs, targets);
    params[i] = saved;
    worst = std::max(worst, RelError(analytic.params[i], (up - down) / (2 * h)));
  }
  for (size_t t = 0; t < inputs.size(); ++t) {
    for (int j = 0; j < inputs[t].size(); ++j) {
      const double saved = *(inputs[t].data() + j);
      *(inputs[t].data() + j) = saved + h;
      const double up = SequenceLoss(net, inputs, targets);
      *(inputs[t].data() + j) = saved - h;
      const double down = SequenceLoss(net, inputs, targets);
      *(inputs[t].data() + j) = saved;
      worst = std::max(
          worst, RelError(*(analytic.inputs[t].data() + j), (up - down) / (2 * h)));
    }
  }
  return worst;
}

inline std::vector<Eigen::MatrixXd> RandomSequence(int rows, int cols, int steps,
                                                   std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Eigen::MatrixXd> seq(steps);
  for (auto& m : seq) {
    m.resize(rows, cols);
    for (int j = 0; j < m.size(); ++j) *(m.data() + j) = dist(rng);
  }
  return seq;
}

}  // namespace testing_util
}  // namespace tacwipe

#endif  // TACWIPE_TESTS_GRAD_CHECK_H_
