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

#include "tacwipe/sim/contact_sim.h"

#include <cassert>
#include <cmath>

namespace tacwipe {
namespace {

constexpr double kDegToRad = M_PI / 180.0;

struct EffectivePose {
  double x, y, z;          // mm
  double sin_roll, cos_roll, sin_pitch, cos_pitch;
};

// World height of taxel i under the effective pose. +roll presses the +y
// edge down, +pitch presses the -x edge down (stable with the moment signs
// used by the proportional controller).
inline double TaxelWorldZ(const EffectivePose& p, const Eigen::Vector2d& local) {
  return p.z + local.x() * p.sin_pitch - local.y() * p.sin_roll;
}

inline Eigen::Vector2d TaxelWorldXY(const EffectivePose& p,
                                    const Eigen::Vector2d& local) {
  return {p.x + local.x() * p.cos_pitch, p.y + local.y() * p.cos_roll};
}

double TotalNormalAt(const EffectivePose& pose, const MaterialParams& material,
                     const TaxelLayout& layout) {
  double total = 0;
  for (const auto& local : layout.positions) {
    const Eigen::Vector2d xy = TaxelWorldXY(pose, local);
    const double pen = SurfaceHeight(material, xy.x(), xy.y()) - TaxelWorldZ(pose, local);
    if (pen > 0) total += material.stiffness * pen;
  }
  return total;
}

// The arm lifts by compliance_lift mm per force-unit of total normal load,
// which couples back into the load. Solve z + delta self-consistently;
// TotalNormalAt is non-increasing in z, so bisection on delta is exact
// enough after 60 halvings.
double SolveLiftDeflection(const EffectivePose& pose, const MaterialParams& material,
                           const SimConfig& config, const TaxelLayout& layout) {
  if (config.compliance_lift <= 0) return 0;
  EffectivePose probe = pose;
  const double full = config.compliance_lift * TotalNormalAt(probe, material, layout);
  if (full <= 0) return 0;
  double lo = 0, hi = full;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    probe.z = pose.z + mid;
    const double want = config.compliance_lift * TotalNormalAt(probe, material, layout);
    if (want > mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool HandPose::IsFinite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) &&
         std::isfinite(roll) && std::isfinite(pitch) && std::isfinite(yaw);
}

SimState MakeSimState(uint64_t seed, const HandPose& start) {
  SimState state;
  state.realized = start;
  state.rng.seed(seed);
  return state;
}

SensorFrame SimStep(SimState& state, const MaterialParams& material,
                    const SimConfig& config, const TaxelLayout& layout,
                    const HandPose& commanded, double dt) {
  if (!commanded.IsFinite()) {
    throw NonFiniteCommand("sim_step: commanded pose contains non-finite values");
  }
  assert(dt > 0);

  // first-order lag toward the command
  const double alpha =
      config.lag_time_const > 0 ? 1.0 - std::exp(-dt / config.lag_time_const) : 1.0;
  HandPose pose = state.realized;
  pose.x += alpha * (commanded.x - pose.x);
  pose.y += alpha * (commanded.y - pose.y);
  pose.z += alpha * (commanded.z - pose.z);
  pose.roll += alpha * (commanded.roll - pose.roll);
  pose.pitch += alpha * (commanded.pitch - pose.pitch);
  pose.yaw += alpha * (commanded.yaw - pose.yaw);
  state.realized = pose;  // the lag integrator carries no noise or deflection

  // compliance tilt under the previous step's wrench: contact moments unload
  // the loaded edge, tangential drag digs the leading edge in
  const double tilt = config.compliance_tilt;
  const double lever = config.drag_lever / 100.0;  // into moment/100 units
  double roll_eff = pose.roll - tilt * (state.last_tau_roll + lever * state.last_drag_y);
  double pitch_eff = pose.pitch - tilt * (state.last_tau_pitch - lever * state.last_drag_x);

  // posture rattle, scaled by material rattle gain and by load
  const double noise_mm = material.rattle_gain *
      (config.rattle_base + config.rattle_per_load * state.last_normal_total / 100.0);
  std::normal_distribution<double> unit(0.0, 1.0);
  const double nx = unit(state.rng), ny = unit(state.rng), nz = unit(state.rng);
  const double nr = unit(state.rng), np = unit(state.rng);

  EffectivePose eff;
  eff.x = pose.x + nx * noise_mm;
  eff.y = pose.y + ny * noise_mm;
  eff.z = pose.z + nz * noise_mm;
  const double roll_rad = (roll_eff + nr * noise_mm * config.rattle_angle_factor) * kDegToRad;
  const double pitch_rad = (pitch_eff + np * noise_mm * config.rattle_angle_factor) * kDegToRad;
  eff.sin_roll = std::sin(roll_rad);
  eff.cos_roll = std::cos(roll_rad);
  eff.sin_pitch = std::sin(pitch_rad);
  eff.cos_pitch = std::cos(pitch_rad);

  eff.z += SolveLiftDeflection(eff, material, config, layout);

  SensorFrame frame;
  double total_normal = 0, tau_roll = 0, tau_pitch = 0, drag_x = 0, drag_y = 0;
  for (int i = 0; i < TaxelLayout::kCount; ++i) {
    const Eigen::Vector2d& local = layout.positions[i];
    const Eigen::Vector2d xy = TaxelWorldXY(eff, local);
    const double pen = SurfaceHeight(material, xy.x(), xy.y()) - TaxelWorldZ(eff, local);
    if (pen <= 0) {
      state.anchors[i] = xy;
      state.in_contact[i] = false;
      continue;
    }
    const double fz = material.stiffness * pen;

    if (!state.in_contact[i]) {
      state.anchors[i] = xy;
      state.in_contact[i] = true;
    }
    Eigen::Vector2d spring = config.tangent_stiffness * (state.anchors[i] - xy);
    const double cone = material.friction * fz;
    const double mag = spring.norm();
    if (mag > cone && mag > 0) {
      // anchor slips toward the cone surface; tanh on the slip speed keeps
      // slow crossings smooth
      const double excess = (mag - cone) / config.tangent_stiffness;
      const double blend = std::tanh((excess / dt) / config.slip_speed_eps);
      state.anchors[i] -= blend * excess * (state.anchors[i] - xy).normalized();
      spring = config.tangent_stiffness * (state.anchors[i] - xy);
      const double new_mag = spring.norm();
      if (new_mag > cone && new_mag > 0) spring *= cone / new_mag;
    }

    frame.fx()[i] = spring.x();
    frame.fy()[i] = spring.y();
    frame.fz()[i] = fz;
    total_normal += fz;
    tau_roll += local.y() * fz;
    tau_pitch += -local.x() * fz;
    drag_x += spring.x();
    drag_y += spring.y();
  }

  state.last_normal_total = total_normal;
  state.last_tau_roll = tau_roll / 100.0;
  state.last_tau_pitch = tau_pitch / 100.0;
  state.last_drag_x = drag_x;
  state.last_drag_y = drag_y;
  return frame;
}

SensorFrame RemoveOffsets(const SensorFrame& frame, const SensorFrame& bias) {
  SensorFrame out;
  out.data = frame.data - bias.data;
  out.fz() = out.fz().cwiseMax(0.0);
  return out;
}

}  // namespace tacwipe
