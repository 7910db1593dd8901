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

#ifndef TACWIPE_IO_CHECKPOINT_H_
#define TACWIPE_IO_CHECKPOINT_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "tacwipe/ttnpb/model.h"
#include "tacwipe/ttnpb/train.h"

namespace tacwipe {

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckpointData {
  TtnpbModel model;
  PBTable pb;
  std::string config_echo;  // free-form text describing how this was made
};

// Versioned little-endian binary: magic, layer specs, flat 64-bit parameter
// array, scaling constants, bias entries grouped per material, config echo.
// Writing is deterministic: equal data gives byte-identical files.
void WriteCheckpoint(const std::string& path, const CheckpointData& data);

// throws CheckpointError on bad magic, version, or truncation
CheckpointData ReadCheckpoint(const std::string& path);

// FNV-1a over the file bytes; ties run records to the exact checkpoint
uint64_t FileHash(const std::string& path);
std::string HashHex(uint64_t hash);

}  // namespace tacwipe

#endif  // TACWIPE_IO_CHECKPOINT_H_
