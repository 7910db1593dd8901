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

#ifndef TACWIPE_TTNPB_TRAIN_H_
#define TACWIPE_TTNPB_TRAIN_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tacwipe/net/optim.h"
#include "tacwipe/ttnpb/episode.h"
#include "tacwipe/ttnpb/model.h"

namespace tacwipe {

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// one learned bias per (material, trial) recording; trials of one material
// should land close together, which the clustering checks rely on
struct PbEntry {
  std::string material_id;
  std::string trial_id;
  Eigen::Vector2d p = Eigen::Vector2d::Zero();
};

struct PBTable {
  std::vector<PbEntry> entries;

  // index of (material, trial), -1 when absent
  int Find(const std::string& material_id, const std::string& trial_id) const;
  // unique material ids in first-appearance order
  std::vector<std::string> Materials() const;
  // mean bias over a material's trials; throws std::out_of_range when absent
  Eigen::Vector2d MaterialMean(const std::string& material_id) const;
  // material whose mean bias is closest to p; empty table -> empty string
  std::string NearestMaterial(const Eigen::Vector2d& p) const;
};

struct TrainConfig {
  int window = 20;        // truncated-backprop window, ticks
  int stride = 10;
  int batch = 32;         // windows per update
  int max_epochs = 200;
  int plateau_epochs = 20;                 // early stop after this many stalls
  double plateau_rel_improvement = 1e-4;   // improvement below this is a stall
  uint64_t seed = 0;
  AdamConfig weight_adam{};
  // bias entries are two parameters racing 387k co-adapting weights: at the
  // weight rate they stall short of their own optimum (the shared layers
  // absorb what the bias should have encoded), so they learn faster
  AdamConfig pb_adam{.lr = 1e-2};
  std::vector<LayerSpec> layer_spec = TtnpbLayerSpec();
  ScalingConstants scaling{};
};

struct TrainResult {
  TtnpbModel model;
  PBTable pb;
  std::vector<double> loss_curve;  // per-epoch mean squared error, scaled space
  double initial_loss = 0;         // evaluated before the first update
  double final_loss = 0;
  int epochs_run = 0;
};

// Joint optimization of network weights and per-trial biases on next-step
// force prediction. Every window carries its trial's bias as two input rows;
// weight and bias Adam steps happen together on each batch, and a trial's
// bias moves only when one of its windows is in the batch. Throws
// InsufficientData when a trial yields no training window.
TrainResult Train(const std::vector<Episode>& episodes, const TrainConfig& config);

}  // namespace tacwipe

#endif  // TACWIPE_TTNPB_TRAIN_H_
