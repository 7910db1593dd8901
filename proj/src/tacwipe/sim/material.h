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

#ifndef TACWIPE_SIM_MATERIAL_H_
#define TACWIPE_SIM_MATERIAL_H_

#include <map>
#include <stdexcept>
#include <string>

namespace tacwipe {

struct InvalidMaterial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Surface material model. Forces are dimensionless; lengths in mm.
struct MaterialParams {
  std::string name;
  double stiffness = 100.0;     // force-units per mm penetration per taxel, > 0
  double friction = 0.5;        // Coulomb coefficient, >= 0
  double waviness_amp = 0.0;    // mm, >= 0
  double waviness_len = 40.0;   // mm, > 0
  double rattle_gain = 0.0;     // posture-noise scale, >= 0

  void Validate() const;
};

// Height of the surface above the nominal plane at lateral position (x, y).
double SurfaceHeight(const MaterialParams& material, double x, double y);

// Material library file: one record per material, name plus 5 parameters.
using MaterialLibrary = std::map<std::string, MaterialParams>;

MaterialLibrary LoadMaterialLibrary(const std::string& path);
const MaterialParams& FindMaterial(const MaterialLibrary& library,
                                   const std::string& name);

}  // namespace tacwipe

#endif  // TACWIPE_SIM_MATERIAL_H_
