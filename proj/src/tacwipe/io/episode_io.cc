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

#include "tacwipe/io/episode_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tacwipe {
namespace {

void AppendDouble(std::string& line, double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), " %.17g", value);
  line += buf;
}

[[noreturn]] void Fail(const std::string& path, size_t line_no, const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

bool HasSpace(const std::string& id) {
  return id.find_first_of(" \t\r\n") != std::string::npos;
}

}  // namespace

void WriteEpisode(const std::string& path, const Episode& episode) {
  if (episode.material_id.empty() || episode.trial_id.empty() ||
      HasSpace(episode.material_id) || HasSpace(episode.trial_id)) {
    throw std::invalid_argument("episode ids must be nonempty and whitespace-free");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  std::string line;
  for (size_t t = 0; t < episode.steps.size(); ++t) {
    const EpisodeStep& step = episode.steps[t];
    line = std::to_string(t) + " " + episode.material_id + " " + episode.trial_id;
    for (int i = 0; i < 72; ++i) AppendDouble(line, step.force[i]);
    for (int i = 0; i < 3; ++i) AppendDouble(line, step.pos[i]);
    for (int i = 0; i < 3; ++i) AppendDouble(line, step.ctrl[i]);
    line += "\n";
    out << line;
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

Episode ReadEpisode(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  Episode episode;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    size_t t;
    std::string material, trial;
    if (!(fields >> t >> material >> trial)) {
      Fail(path, line_no, "malformed record head");
    }
    if (t != episode.steps.size()) {
      Fail(path, line_no, "tick " + std::to_string(t) + " out of order");
    }
    if (episode.steps.empty()) {
      episode.material_id = material;
      episode.trial_id = trial;
    } else if (material != episode.material_id || trial != episode.trial_id) {
      Fail(path, line_no, "material/trial id changed mid-file");
    }
    EpisodeStep step;
    for (int i = 0; i < 72; ++i) {
      if (!(fields >> step.force[i])) Fail(path, line_no, "short force block");
    }
    for (int i = 0; i < 3; ++i) {
      if (!(fields >> step.pos[i])) Fail(path, line_no, "short position block");
    }
    for (int i = 0; i < 3; ++i) {
      if (!(fields >> step.ctrl[i])) Fail(path, line_no, "short control block");
    }
    std::string extra;
    if (fields >> extra) Fail(path, line_no, "trailing fields");
    episode.steps.push_back(step);
  }
  return episode;
}

std::vector<Episode> ReadEpisodes(const std::vector<std::string>& paths) {
  std::vector<Episode> episodes;
  episodes.reserve(paths.size());
  for (const auto& path : paths) episodes.push_back(ReadEpisode(path));
  return episodes;
}

}  // namespace tacwipe
