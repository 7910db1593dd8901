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

#include "tacwipe/ttnpb/model.h"

namespace tacwipe {

std::vector<LayerSpec> TtnpbLayerSpec() {
  using K = LayerKind;
  using A = Activation;
  return {
      {K::kFullyConnected, TtnpbModel::kInputDim, 300, A::kTanh},
      {K::kFullyConnected, 300, 200, A::kTanh},
      {K::kFullyConnected, 200, 100, A::kTanh},
      {K::kFullyConnected, 100, 100, A::kTanh},
      {K::kLstm, 100, 100, A::kTanh},
      {K::kLstm, 100, 100, A::kTanh},
      {K::kFullyConnected, 100, 100, A::kTanh},
      {K::kFullyConnected, 100, 200, A::kTanh},
      {K::kFullyConnected, 200, 300, A::kTanh},
      {K::kFullyConnected, 300, TtnpbModel::kForceDim, A::kLinear},
  };
}

TtnpbModel MakeTtnpbModel(uint64_t seed) {
  TtnpbModel model;
  model.net = Network::Random(TtnpbLayerSpec(), seed);
  return model;
}

Eigen::MatrixXd AssembleScaledInput(const ScalingConstants& scaling,
                                    const Eigen::MatrixXd& force,
                                    const Eigen::MatrixXd& pos,
                                    const Eigen::MatrixXd& ctrl,
                                    const Eigen::MatrixXd& pb) {
  const Eigen::Index batch = force.cols();
  if (force.rows() != TtnpbModel::kForceDim || pos.rows() != TtnpbModel::kPosDim ||
      ctrl.rows() != TtnpbModel::kCtrlDim || pb.rows() != TtnpbModel::kPbDim ||
      pos.cols() != batch || ctrl.cols() != batch || pb.cols() != batch) {
    throw DimensionMismatch("assemble input: block shapes disagree");
  }
  Eigen::MatrixXd input(TtnpbModel::kInputDim, batch);
  input.topRows(TtnpbModel::kForceDim) = force / scaling.force_scale;
  for (int k = 0; k < 3; ++k) {
    input.row(TtnpbModel::kForceDim + k) = pos.row(k) / scaling.pos_half[k];
  }
  input.row(75) = ctrl.row(0) / scaling.tau_scale;
  input.row(76) = ctrl.row(1) / scaling.tau_scale;
  input.row(77) = ctrl.row(2) / scaling.fz_ref_scale;
  input.bottomRows(TtnpbModel::kPbDim) = pb;
  return input;
}

Eigen::Matrix<double, 72, 1> Predict(const TtnpbModel& model,
                                     const Eigen::Matrix<double, 72, 1>& force,
                                     const Eigen::Vector3d& pos,
                                     const Eigen::Vector3d& ctrl,
                                     const Eigen::Vector2d& pb,
                                     RecurrentState& rstate) {
  const Eigen::MatrixXd input =
      AssembleScaledInput(model.scaling, force, pos, ctrl, pb);
  const Eigen::MatrixXd out = model.net.Forward(input, rstate, nullptr);
  return out.col(0) * model.scaling.force_scale;
}

}  // namespace tacwipe
