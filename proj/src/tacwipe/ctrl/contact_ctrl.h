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

#ifndef TACWIPE_CTRL_CONTACT_CTRL_H_
#define TACWIPE_CTRL_CONTACT_CTRL_H_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "tacwipe/sim/contact_sim.h"
#include "tacwipe/sim/taxel_layout.h"

namespace tacwipe {

// contact reference for one tick: two moment targets and a mean normal
// force target, the 3-dimensional action the transition model learns
struct ControlInput {
  static constexpr double kTauMin = -50.0;
  static constexpr double kTauMax = 50.0;
  static constexpr double kForceMin = 50.0;
  static constexpr double kForceMax = 300.0;

  double tau_roll = 0;   // scaled moment target about x, [-50, 50]
  double tau_pitch = 0;  // scaled moment target about y, [-50, 50]
  double force = 200;    // mean per-taxel normal force target, [50, 300]

  void Clamp();
  Eigen::Vector3d AsVector() const { return {tau_roll, tau_pitch, force}; }
  static ControlInput FromVector(const Eigen::Vector3d& v) {
    return {v[0], v[1], v[2]};
  }
};

// posture targets the proportional loop integrates; the harness turns them
// into a commanded pose (z command = -press_depth)
struct CtrlState {
  double roll = 0;        // deg, clamped to +-theta_max
  double pitch = 0;       // deg, clamped to +-theta_max
  double press_depth = 0; // mm below the nominal surface, unclamped
};

struct Gains {
  double k_theta = 0.01;      // deg per unit of scaled moment error
  double k_force = 0.03;      // mm per unit of force error
  double moment_scale = 0.01; // raw moment (mm * force) -> scaled moment
  double dtheta_max = 3.0;    // deg, per-tick angle step bound
  double theta_max = 5.0;     // deg, absolute angle bound
  double ddepth_max = 5.0;    // mm, per-tick depth step bound
};

// raw contact moments from the normal-force image: (sum y_i fz_i,
// sum -x_i fz_i). Positive roll moment means the +y edge carries more load.
Eigen::Vector2d SensedTorques(const SensorFrame& frame, const TaxelLayout& layout);

// one proportional update of the posture targets toward the reference.
// Per-tick steps are clamped, angles are clamped absolutely, depth is not.
void ProportionalStep(CtrlState& state, const SensorFrame& frame,
                      const TaxelLayout& layout, const ControlInput& target,
                      const Gains& gains);

// clamped gaussian random walk on the reference, used to excite the system
// during data collection. sigma_tau drives both moment targets, sigma_force
// the force target; draws happen in that fixed order.
ControlInput RandomWalkTargets(const ControlInput& current, double sigma_tau,
                               double sigma_force, std::mt19937_64& rng);

}  // namespace tacwipe

#endif  // TACWIPE_CTRL_CONTACT_CTRL_H_
