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

#ifndef TACWIPE_TTNPB_MODEL_H_
#define TACWIPE_TTNPB_MODEL_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tacwipe/net/network.h"

namespace tacwipe {

// divisors that bring every model input into roughly [-1, 1]; fixed at
// data-collection time from the control bounds and workspace extent
struct ScalingConstants {
  double force_scale = 200.0;                    // taxel forces
  Eigen::Vector3d pos_half{60.0, 50.0, 5.0};     // workspace half-extent, mm
  double tau_scale = 50.0;                       // moment targets
  double fz_ref_scale = 300.0;                   // force target
};

// one-step tactile transition predictor: given current forces, hand
// position, control reference, and the 2-d parametric bias, predicts the
// next force frame. Two LSTM layers carry contact history across ticks.
struct TtnpbModel {
  static constexpr int kForceDim = 72;
  static constexpr int kPosDim = 3;
  static constexpr int kCtrlDim = 3;
  static constexpr int kPbDim = 2;
  static constexpr int kInputDim = kForceDim + kPosDim + kCtrlDim + kPbDim;  // 80
  static constexpr int kPbOffset = kForceDim + kPosDim + kCtrlDim;           // 78

  Network net;
  ScalingConstants scaling;
};

// the 10-layer stack: 4 FC, 2 LSTM, 4 FC, tanh throughout except the linear
// readout (scaled forces exceed tanh's range)
std::vector<LayerSpec> TtnpbLayerSpec();

TtnpbModel MakeTtnpbModel(uint64_t seed);

// column-wise assembly of scaled network inputs from raw-unit batches
Eigen::MatrixXd AssembleScaledInput(const ScalingConstants& scaling,
                                    const Eigen::MatrixXd& force,
                                    const Eigen::MatrixXd& pos,
                                    const Eigen::MatrixXd& ctrl,
                                    const Eigen::MatrixXd& pb);

// one prediction step in raw units; advances rstate in place
Eigen::Matrix<double, 72, 1> Predict(const TtnpbModel& model,
                                     const Eigen::Matrix<double, 72, 1>& force,
                                     const Eigen::Vector3d& pos,
                                     const Eigen::Vector3d& ctrl,
                                     const Eigen::Vector2d& pb,
                                     RecurrentState& rstate);

}  // namespace tacwipe

#endif  // TACWIPE_TTNPB_MODEL_H_
