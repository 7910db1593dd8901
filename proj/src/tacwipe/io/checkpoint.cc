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

#include "tacwipe/io/checkpoint.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace tacwipe {
namespace {

// numeric fields are written in host byte order; the artifact targets
// little-endian platforms only
constexpr char kMagic[4] = {'T', 'W', 'C', 'K'};
constexpr int32_t kVersion = 1;

void PutBytes(std::ofstream& out, const void* data, size_t n) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

template <typename T>
void Put(std::ofstream& out, T value) {
  PutBytes(out, &value, sizeof(T));
}

void PutString(std::ofstream& out, const std::string& s) {
  Put<int32_t>(out, static_cast<int32_t>(s.size()));
  PutBytes(out, s.data(), s.size());
}

void GetBytes(std::ifstream& in, void* data, size_t n, const std::string& path) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
  if (in.gcount() != static_cast<std::streamsize>(n)) {
    throw CheckpointError(path + ": truncated checkpoint");
  }
}

template <typename T>
T Get(std::ifstream& in, const std::string& path) {
  T value;
  GetBytes(in, &value, sizeof(T), path);
  return value;
}

std::string GetString(std::ifstream& in, const std::string& path) {
  const int32_t n = Get<int32_t>(in, path);
  if (n < 0 || n > (1 << 20)) throw CheckpointError(path + ": bad string length");
  std::string s(static_cast<size_t>(n), '\0');
  if (n > 0) GetBytes(in, s.data(), static_cast<size_t>(n), path);
  return s;
}

}  // namespace

void WriteCheckpoint(const std::string& path, const CheckpointData& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError(path + ": cannot open for writing");

  PutBytes(out, kMagic, 4);
  Put<int32_t>(out, kVersion);

  const Network& net = data.model.net;
  Put<int32_t>(out, static_cast<int32_t>(net.spec().size()));
  for (const LayerSpec& layer : net.spec()) {
    Put<int32_t>(out, static_cast<int32_t>(layer.kind));
    Put<int32_t>(out, layer.in_dim);
    Put<int32_t>(out, layer.out_dim);
    Put<int32_t>(out, static_cast<int32_t>(layer.activation));
  }
  Put<int64_t>(out, static_cast<int64_t>(net.param_count()));
  PutBytes(out, net.params().data(), sizeof(double) * net.param_count());

  const ScalingConstants& s = data.model.scaling;
  Put<double>(out, s.force_scale);
  for (int i = 0; i < 3; ++i) Put<double>(out, s.pos_half[i]);
  Put<double>(out, s.tau_scale);
  Put<double>(out, s.fz_ref_scale);

  // bias entries grouped per material, one top-level record per material
  const auto materials = data.pb.Materials();
  Put<int32_t>(out, static_cast<int32_t>(materials.size()));
  for (const auto& material : materials) {
    PutString(out, material);
    int32_t trials = 0;
    for (const auto& e : data.pb.entries) {
      if (e.material_id == material) ++trials;
    }
    Put<int32_t>(out, trials);
    for (const auto& e : data.pb.entries) {
      if (e.material_id != material) continue;
      PutString(out, e.trial_id);
      Put<double>(out, e.p[0]);
      Put<double>(out, e.p[1]);
    }
  }

  PutString(out, data.config_echo);
  if (!out.good()) throw CheckpointError(path + ": write failed");
}

CheckpointData ReadCheckpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(path + ": cannot open");

  char magic[4];
  GetBytes(in, magic, 4, path);
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw CheckpointError(path + ": bad magic, not a checkpoint");
  }
  const int32_t version = Get<int32_t>(in, path);
  if (version != kVersion) {
    throw CheckpointError(path + ": unsupported version " + std::to_string(version));
  }

  const int32_t n_layers = Get<int32_t>(in, path);
  if (n_layers <= 0 || n_layers > 1024) {
    throw CheckpointError(path + ": bad layer count");
  }
  std::vector<LayerSpec> spec(static_cast<size_t>(n_layers));
  for (auto& layer : spec) {
    layer.kind = static_cast<LayerKind>(Get<int32_t>(in, path));
    layer.in_dim = Get<int32_t>(in, path);
    layer.out_dim = Get<int32_t>(in, path);
    layer.activation = static_cast<Activation>(Get<int32_t>(in, path));
  }

  CheckpointData data;
  data.model.net = Network(spec);
  const int64_t params = Get<int64_t>(in, path);
  if (params != data.model.net.param_count()) {
    throw CheckpointError(path + ": parameter count does not match layer specs");
  }
  GetBytes(in, data.model.net.params().data(), sizeof(double) * params, path);

  ScalingConstants& s = data.model.scaling;
  s.force_scale = Get<double>(in, path);
  for (int i = 0; i < 3; ++i) s.pos_half[i] = Get<double>(in, path);
  s.tau_scale = Get<double>(in, path);
  s.fz_ref_scale = Get<double>(in, path);

  const int32_t n_materials = Get<int32_t>(in, path);
  if (n_materials < 0 || n_materials > 4096) {
    throw CheckpointError(path + ": bad material count");
  }
  for (int32_t m = 0; m < n_materials; ++m) {
    const std::string material = GetString(in, path);
    const int32_t trials = Get<int32_t>(in, path);
    if (trials < 0 || trials > 4096) throw CheckpointError(path + ": bad trial count");
    for (int32_t k = 0; k < trials; ++k) {
      PbEntry entry;
      entry.material_id = material;
      entry.trial_id = GetString(in, path);
      entry.p[0] = Get<double>(in, path);
      entry.p[1] = Get<double>(in, path);
      data.pb.entries.push_back(std::move(entry));
    }
  }

  data.config_echo = GetString(in, path);
  return data;
}

uint64_t FileHash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(path + ": cannot open for hashing");
  uint64_t hash = 14695981039346656037ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ULL;
    }
    if (in.eof()) break;
  }
  return hash;
}

std::string HashHex(uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace tacwipe
