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

#include "tacwipe/sim/material.h"

#include <cmath>

#include <yaml-cpp/yaml.h>

namespace tacwipe {

void MaterialParams::Validate() const {
  if (!(stiffness > 0.0)) throw InvalidMaterial(name + ": stiffness must be > 0");
  if (!(friction >= 0.0)) throw InvalidMaterial(name + ": friction must be >= 0");
  if (!(waviness_amp >= 0.0)) throw InvalidMaterial(name + ": waviness_amp must be >= 0");
  if (!(waviness_len > 0.0)) throw InvalidMaterial(name + ": waviness_len must be > 0");
  if (!(rattle_gain >= 0.0)) throw InvalidMaterial(name + ": rattle_gain must be >= 0");
}

double SurfaceHeight(const MaterialParams& material, double x, double y) {
  if (material.waviness_amp == 0.0) return 0.0;
  const double k = 2.0 * M_PI / material.waviness_len;
  return material.waviness_amp * std::sin(k * x) * std::sin(k * y);
}

MaterialLibrary LoadMaterialLibrary(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw InvalidMaterial("failed to load material library " + path + ": " + e.what());
  }
  const YAML::Node records = root["materials"] ? root["materials"] : root;
  if (!records.IsMap()) {
    throw InvalidMaterial("material library " + path + ": expected a map of records");
  }
  MaterialLibrary library;
  for (const auto& item : records) {
    MaterialParams m;
    m.name = item.first.as<std::string>();
    const YAML::Node& rec = item.second;
    try {
      m.stiffness = rec["stiffness"].as<double>();
      m.friction = rec["friction"].as<double>();
      m.waviness_amp = rec["waviness_amp"].as<double>();
      m.waviness_len = rec["waviness_len"].as<double>();
      m.rattle_gain = rec["rattle_gain"].as<double>();
    } catch (const YAML::Exception& e) {
      throw InvalidMaterial("material " + m.name + " in " + path + ": " + e.what());
    }
    m.Validate();
    library.emplace(m.name, std::move(m));
  }
  return library;
}

const MaterialParams& FindMaterial(const MaterialLibrary& library,
                                   const std::string& name) {
  auto it = library.find(name);
  if (it == library.end()) {
    throw InvalidMaterial("unknown material: " + name);
  }
  return it->second;
}

}  // namespace tacwipe
