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

#ifndef TACWIPE_HARNESS_CONFIG_H_
#define TACWIPE_HARNESS_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tacwipe/ctrl/contact_ctrl.h"
#include "tacwipe/harness/trajectory.h"
#include "tacwipe/sim/contact_sim.h"
#include "tacwipe/taskctl/plan_optimizer.h"
#include "tacwipe/ttnpb/online.h"
#include "tacwipe/ttnpb/train.h"

namespace tacwipe {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// everything an experiment needs, loadable from one YAML file; every field
// has a working default so a missing section falls back cleanly
struct ExperimentConfig {
  uint64_t seed = 1;
  std::string materials_file = "configs/materials.yaml";
  std::vector<std::string> train_materials{"desk", "paper", "cardboard", "plastic",
                                           "foam"};
  std::string held_out_material = "thin_cardboard";

  // collection: (sigma_tau, sigma_force) target-walk settings, steps per run
  std::vector<std::pair<double, double>> sigma_settings{{10.0, 30.0}, {3.0, 10.0}};
  int collect_steps = 1000;

  TrajectoryConfig trajectory{};
  SimConfig sim{};
  Gains gains{};
  TrainConfig train{};
  OnlineConfig online{};
  int online_capacity = 30;

  OptConfig opt{};
  int control_steps = 600;
  double loss_smoothness = 0.01;
  double force_ref = 200.0;
  double hover_z = 3.0;  // start height above the surface, mm

  std::string raw_text;  // the file as loaded, echoed into artifacts
};

// parses the YAML experiment file; throws ConfigError on unreadable files,
// wrong types, or out-of-range values. Missing path = built-in defaults.
ExperimentConfig LoadExperimentConfig(const std::string& path);

// trial id for a sigma setting, e.g. (10, 30) -> "s10_30"
std::string SigmaTrialId(double sigma_tau, double sigma_force);

}  // namespace tacwipe

#endif  // TACWIPE_HARNESS_CONFIG_H_
