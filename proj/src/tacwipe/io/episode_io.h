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

#ifndef TACWIPE_IO_EPISODE_IO_H_
#define TACWIPE_IO_EPISODE_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "tacwipe/ttnpb/episode.h"

namespace tacwipe {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One step per line, whitespace separated:
//   t material_id trial_id f[72] x[3] u[3]
// Doubles print with full 64-bit round-trip precision, so written files read
// back bit-exact. Ids must be whitespace-free.
void WriteEpisode(const std::string& path, const Episode& episode);

// throws ParseError naming the file and 1-based line on any malformed,
// out-of-order, or inconsistent record
Episode ReadEpisode(const std::string& path);

std::vector<Episode> ReadEpisodes(const std::vector<std::string>& paths);

}  // namespace tacwipe

#endif  // TACWIPE_IO_EPISODE_IO_H_
