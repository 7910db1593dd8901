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

#ifndef TACWIPE_HARNESS_COMMANDS_H_
#define TACWIPE_HARNESS_COMMANDS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tacwipe/harness/config.h"
#include "tacwipe/taskctl/task_loss.h"

namespace tacwipe {

// raised when an experiment produces non-finite numbers
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// deterministic per-run seed: mixes the base seed with a role label so each
// rollout gets an independent, reproducible stream
uint64_t DeriveSeed(uint64_t base, const std::string& label);

// collect: one episode file per (material, sigma setting), written under
// out_dir as episode_<material>_<trial>.txt; partial files are removed if a
// run aborts
struct CollectResult {
  std::vector<std::string> episode_paths;
  int total_steps = 0;
};
CollectResult CmdCollect(const ExperimentConfig& config, const std::string& out_dir);

// train: fits the transition model on the given episode files and writes
// model.ckpt, loss_curve.csv, pb_table.csv, run_train.yaml
struct TrainCmdResult {
  std::string checkpoint_path;
  uint64_t checkpoint_hash = 0;
  double initial_loss = 0;
  double final_loss = 0;
  int epochs = 0;
  int pb_materials = 0;
};
TrainCmdResult CmdTrain(const ExperimentConfig& config,
                        const std::vector<std::string>& episode_paths,
                        const std::string& out_dir);

// recognize: random wiping on one material with online bias adaptation;
// writes pb_trajectory.csv and run_recognize.yaml. init_pb is "zero" or the
// name of a trained material whose mean bias seeds the estimate.
struct RecognizeResult {
  std::string csv_path;
  Eigen::Vector2d final_pb = Eigen::Vector2d::Zero();
  std::string nearest_material;
  int updates = 0;
  bool too_short = false;  // fewer steps than the start threshold
};
RecognizeResult CmdRecognize(const ExperimentConfig& config,
                             const std::string& checkpoint_path,
                             const std::string& expect_hash,
                             const std::string& material, const std::string& init_pb,
                             int steps, const std::string& out_dir);

// control: gradient-through-model control against the simulator
enum class PbMode { kCorrect, kWrong, kBasic };

struct ControlOptions {
  TaskLossKind loss = TaskLossKind::kTrackNormal;
  PbMode mode = PbMode::kCorrect;
  std::string wrong_material;  // bias source for kWrong
  int steps = 600;
  bool online_pb = false;  // adapt the bias while controlling
};

struct ControlResult {
  std::string log_path;
  EvalSummary summary;
  double mean_tau_roll_cmd = 0;  // time-mean commanded roll moment target
  double mean_force_cmd = 0;     // time-mean commanded force target
  int aborted_ticks = 0;         // optimizer steps that hit non-finite values
};
ControlResult CmdControl(const ExperimentConfig& config,
                         const std::string& checkpoint_path,
                         const std::string& expect_hash, const std::string& material,
                         const ControlOptions& options, const std::string& out_dir);

// eval: teacher-forced one-step prediction error of a checkpoint on episodes
struct EvalCmdResult {
  std::string csv_path;
  double mse = 0;  // scaled space, matches the training loss convention
};
EvalCmdResult CmdEval(const ExperimentConfig& config, const std::string& checkpoint_path,
                      const std::string& expect_hash,
                      const std::vector<std::string>& episode_paths,
                      const std::string& out_dir);

// pca: principal axes of the trained bias table, projections to pca.csv
struct PcaCmdResult {
  std::string csv_path;
  Eigen::Vector2d eigenvalues = Eigen::Vector2d::Zero();
};
PcaCmdResult CmdPca(const ExperimentConfig& config, const std::string& checkpoint_path,
                    const std::string& expect_hash, const std::string& out_dir);

// names used in logs and CLI flags
std::string TaskLossName(TaskLossKind kind);
std::string PbModeName(PbMode mode);

}  // namespace tacwipe

#endif  // TACWIPE_HARNESS_COMMANDS_H_
