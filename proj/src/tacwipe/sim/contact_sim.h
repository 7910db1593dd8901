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

#ifndef TACWIPE_SIM_CONTACT_SIM_H_
#define TACWIPE_SIM_CONTACT_SIM_H_

#include <array>
#include <random>
#include <stdexcept>

#include <Eigen/Core>

#include "tacwipe/sim/material.h"
#include "tacwipe/sim/taxel_layout.h"

namespace tacwipe {

struct NonFiniteCommand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hand pose in the world frame. Positions in mm, angles in deg. z points up;
// the surface sits near z = 0. yaw is held at 0 throughout.
struct HandPose {
  double x = 0, y = 0, z = 0;
  double roll = 0, pitch = 0, yaw = 0;

  bool IsFinite() const;
};

// One reading of the 24-cell three-axis pad, dimensionless. Stored planar:
// [fx(24), fy(24), fz(24)], taxel order matching TaxelLayout::positions.
struct SensorFrame {
  static constexpr int kTaxels = TaxelLayout::kCount;
  static constexpr int kDim = 3 * kTaxels;

  Eigen::Matrix<double, kDim, 1> data = Eigen::Matrix<double, kDim, 1>::Zero();

  auto fx() { return data.segment<kTaxels>(0); }
  auto fy() { return data.segment<kTaxels>(kTaxels); }
  auto fz() { return data.segment<kTaxels>(2 * kTaxels); }
  auto fx() const { return data.segment<kTaxels>(0); }
  auto fy() const { return data.segment<kTaxels>(kTaxels); }
  auto fz() const { return data.segment<kTaxels>(2 * kTaxels); }

  double MeanNormal() const { return fz().mean(); }
};

// Fixed simulator properties of the low-rigidity arm and pad. Defaults are
// the production values; tests zero individual effects to isolate the
// contact laws.
struct SimConfig {
  double lag_time_const = 0.3;      // s, first-order pose lag (0 = rigid)
  double compliance_lift = 0.002;   // mm of z deflection per force-unit
  double compliance_tilt = 0.0005;  // deg of tilt per torque-unit
  double drag_lever = 40.0;         // mm, tangential drag -> tilt moment arm
  double tangent_stiffness = 20.0;  // force-units per mm of anchor stretch
  double slip_speed_eps = 1.0;      // mm/s, tanh smoothing of anchor slip
  double rattle_base = 0.05;        // mm of pose noise at zero load
  double rattle_per_load = 0.008;   // mm of pose noise per 100 force-units
  double rattle_angle_factor = 0.2; // deg of angle noise per mm of pose noise
};

// Mutable simulator state. Equal seeds and equal command sequences give
// bit-identical output sequences.
struct SimState {
  HandPose realized;
  std::array<Eigen::Vector2d, TaxelLayout::kCount> anchors{};  // world mm
  std::array<bool, TaxelLayout::kCount> in_contact{};
  // wrench felt on the previous step, used for this step's deflections
  double last_normal_total = 0;  // sum of fz
  double last_tau_roll = 0;      // moment / 100, dimensionless
  double last_tau_pitch = 0;
  double last_drag_x = 0;        // sum of fx
  double last_drag_y = 0;        // sum of fy
  std::mt19937_64 rng;
};

SimState MakeSimState(uint64_t seed, const HandPose& start);

// Advances the simulator by one tick. The realized pose follows the command
// through a first-order lag, deflects under the previous step's contact
// wrench, and picks up load-dependent rattle noise. Per-taxel normal force is
// a one-sided spring on penetration; tangential force is an anchor-spring
// clipped to the Coulomb cone with slip when exceeded.
//
// Sign conventions: +roll presses the +y (left) pad edge down; +pitch presses
// the -x (rear) pad edge down. Forces are reported along world axes.
//
// Throws NonFiniteCommand if the commanded pose contains non-finite values.
SensorFrame SimStep(SimState& state, const MaterialParams& material,
                    const SimConfig& config, const TaxelLayout& layout,
                    const HandPose& commanded, double dt);

// Offset removal: element-wise subtraction of a bias frame captured out of
// contact, with fz floored at 0.
SensorFrame RemoveOffsets(const SensorFrame& frame, const SensorFrame& bias);

}  // namespace tacwipe

#endif  // TACWIPE_SIM_CONTACT_SIM_H_
