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

#include "tacwipe/harness/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace tacwipe {
namespace {

template <typename T>
void Fetch(const YAML::Node& node, const char* key, T& out) {
  if (!node || !node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

std::string TrimNumber(double v) {
  // compact decimal for ids: 10 -> "10", 0.5 -> "0.5"
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

std::string SigmaTrialId(double sigma_tau, double sigma_force) {
  return "s" + TrimNumber(sigma_tau) + "_" + TrimNumber(sigma_force);
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  ExperimentConfig config;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  config.raw_text = buffer.str();

  YAML::Node root;
  try {
    root = YAML::Load(config.raw_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(path + ": " + e.what());
  }

  Fetch(root, "seed", config.seed);
  Fetch(root, "materials_file", config.materials_file);
  Fetch(root, "train_materials", config.train_materials);
  Fetch(root, "held_out_material", config.held_out_material);

  if (const YAML::Node collect = root["collect"]) {
    Fetch(collect, "steps", config.collect_steps);
    if (const YAML::Node settings = collect["sigma_settings"]) {
      config.sigma_settings.clear();
      for (const auto& entry : settings) {
        double tau = 0, force = 0;
        Fetch(entry, "tau", tau);
        Fetch(entry, "force", force);
        if (tau < 0 || force < 0) throw ConfigError("sigma settings must be >= 0");
        config.sigma_settings.emplace_back(tau, force);
      }
    }
  }

  if (const YAML::Node traj = root["trajectory"]) {
    Fetch(traj, "stroke_mm", config.trajectory.stroke_mm);
    Fetch(traj, "pitch_mm", config.trajectory.pitch_mm);
    Fetch(traj, "speed_mm_s", config.trajectory.speed_mm_s);
    Fetch(traj, "lanes", config.trajectory.lanes);
    if (config.trajectory.stroke_mm <= 0 || config.trajectory.pitch_mm <= 0 ||
        config.trajectory.speed_mm_s <= 0 || config.trajectory.lanes <= 0) {
      throw ConfigError("trajectory parameters must be positive");
    }
  }

  if (const YAML::Node sim = root["sim"]) {
    Fetch(sim, "lag_time_const", config.sim.lag_time_const);
    Fetch(sim, "compliance_lift", config.sim.compliance_lift);
    Fetch(sim, "compliance_tilt", config.sim.compliance_tilt);
    Fetch(sim, "drag_lever", config.sim.drag_lever);
    Fetch(sim, "tangent_stiffness", config.sim.tangent_stiffness);
    Fetch(sim, "slip_speed_eps", config.sim.slip_speed_eps);
    Fetch(sim, "rattle_base", config.sim.rattle_base);
    Fetch(sim, "rattle_per_load", config.sim.rattle_per_load);
    Fetch(sim, "rattle_angle_factor", config.sim.rattle_angle_factor);
  }

  if (const YAML::Node train = root["train"]) {
    Fetch(train, "window", config.train.window);
    Fetch(train, "stride", config.train.stride);
    Fetch(train, "batch", config.train.batch);
    Fetch(train, "max_epochs", config.train.max_epochs);
    Fetch(train, "plateau_epochs", config.train.plateau_epochs);
    Fetch(train, "lr", config.train.weight_adam.lr);
    Fetch(train, "pb_lr", config.train.pb_adam.lr);
    if (config.train.window < 1 || config.train.stride < 1 || config.train.batch < 1 ||
        config.train.max_epochs < 1 || config.train.weight_adam.lr <= 0 ||
        config.train.pb_adam.lr <= 0) {
      throw ConfigError("training parameters out of range");
    }
  }

  if (const YAML::Node online = root["online"]) {
    Fetch(online, "start_threshold", config.online.start_threshold);
    Fetch(online, "capacity", config.online_capacity);
    Fetch(online, "epochs", config.online.epochs);
    Fetch(online, "lr", config.online.momentum.lr);
    Fetch(online, "momentum", config.online.momentum.momentum);
    if (config.online.start_threshold < 2 || config.online_capacity < 2 ||
        config.online.epochs < 1 || config.online.momentum.lr <= 0) {
      throw ConfigError("online parameters out of range");
    }
  }

  if (const YAML::Node control = root["control"]) {
    Fetch(control, "steps", config.control_steps);
    Fetch(control, "horizon", config.opt.horizon);
    Fetch(control, "gamma_candidates", config.opt.gamma_candidates);
    Fetch(control, "epochs", config.opt.epochs);
    Fetch(control, "gamma_max", config.opt.gamma_max);
    Fetch(control, "smoothness", config.loss_smoothness);
    Fetch(control, "force_ref", config.force_ref);
    if (config.opt.horizon < 1 || config.opt.gamma_candidates < 1 ||
        config.opt.epochs < 1 || config.opt.gamma_max <= 0 ||
        config.loss_smoothness < 0) {
      throw ConfigError("control parameters out of range");
    }
  }

  if (config.collect_steps < 0 || config.control_steps < 0) {
    throw ConfigError("step counts must be >= 0");
  }
  if (!std::isfinite(config.force_ref)) throw ConfigError("force_ref must be finite");
  return config;
}

}  // namespace tacwipe
