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

#include "tacwipe/ctrl/contact_ctrl.h"

#include <algorithm>

namespace tacwipe {

void ControlInput::Clamp() {
  tau_roll = std::clamp(tau_roll, kTauMin, kTauMax);
  tau_pitch = std::clamp(tau_pitch, kTauMin, kTauMax);
  force = std::clamp(force, kForceMin, kForceMax);
}

Eigen::Vector2d SensedTorques(const SensorFrame& frame, const TaxelLayout& layout) {
  double tau_roll = 0, tau_pitch = 0;
  const auto fz = frame.fz();
  for (int i = 0; i < TaxelLayout::kCount; ++i) {
    tau_roll += layout.positions[i].y() * fz[i];
    tau_pitch += -layout.positions[i].x() * fz[i];
  }
  return {tau_roll, tau_pitch};
}

void ProportionalStep(CtrlState& state, const SensorFrame& frame,
                      const TaxelLayout& layout, const ControlInput& target,
                      const Gains& gains) {
  const Eigen::Vector2d tau = gains.moment_scale * SensedTorques(frame, layout);

  const double droll = std::clamp(gains.k_theta * (target.tau_roll - tau[0]),
                                  -gains.dtheta_max, gains.dtheta_max);
  const double dpitch = std::clamp(gains.k_theta * (target.tau_pitch - tau[1]),
                                   -gains.dtheta_max, gains.dtheta_max);
  state.roll = std::clamp(state.roll + droll, -gains.theta_max, gains.theta_max);
  state.pitch = std::clamp(state.pitch + dpitch, -gains.theta_max, gains.theta_max);

  const double ddepth = std::clamp(gains.k_force * (target.force - frame.MeanNormal()),
                                   -gains.ddepth_max, gains.ddepth_max);
  state.press_depth += ddepth;
}

ControlInput RandomWalkTargets(const ControlInput& current, double sigma_tau,
                               double sigma_force, std::mt19937_64& rng) {
  std::normal_distribution<double> unit(0.0, 1.0);
  ControlInput next = current;
  next.tau_roll += sigma_tau * unit(rng);
  next.tau_pitch += sigma_tau * unit(rng);
  next.force += sigma_force * unit(rng);
  next.Clamp();
  return next;
}

}  // namespace tacwipe
