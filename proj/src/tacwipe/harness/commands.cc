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

#include "tacwipe/harness/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "tacwipe/io/checkpoint.h"
#include "tacwipe/io/episode_io.h"
#include "tacwipe/sim/material.h"
#include "tacwipe/sim/taxel_layout.h"
#include "tacwipe/taskctl/plan_optimizer.h"
#include "tacwipe/ttnpb/online.h"
#include "tacwipe/ttnpb/pca.h"

namespace tacwipe {
namespace {

namespace fs = std::filesystem;

std::string D(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

// deterministic plain-text run record; the config rides along as a block
// scalar so a record alone can reproduce its run
void WriteRunRecord(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    const std::string& config_text) {
  std::string text = "command: " + command + "\n";
  for (const auto& [key, value] : fields) {
    text += key + ": " + value + "\n";
  }
  text += "config: |\n";
  std::istringstream lines(config_text);
  std::string line;
  while (std::getline(lines, line)) text += "  " + line + "\n";
  WriteTextFile(path, text);
}

void VerifyHash(const std::string& checkpoint_path, const std::string& expect_hash) {
  if (expect_hash.empty()) return;
  const std::string actual = HashHex(FileHash(checkpoint_path));
  if (actual != expect_hash) {
    throw CheckpointError(checkpoint_path + ": hash " + actual +
                          " does not match expected " + expect_hash);
  }
}

Eigen::Vector2d InitialBias(const PBTable& table, const std::string& init_pb) {
  if (init_pb.empty() || init_pb == "zero") return Eigen::Vector2d::Zero();
  try {
    return table.MaterialMean(init_pb);
  } catch (const std::out_of_range&) {
    throw ConfigError("no trained bias for material '" + init_pb + "'");
  }
}

// one random-walk wiping rollout at the 5 Hz tick: observe, walk the
// targets, record, track with the proportional loop, step the simulator
Episode RollRandomWalk(const ExperimentConfig& config, const MaterialParams& material,
                       const std::string& material_id, const std::string& trial_id,
                       double sigma_tau, double sigma_force, uint64_t run_seed,
                       int steps,
                       const std::function<void(int, const EpisodeStep&)>& on_step) {
  Episode episode;
  episode.material_id = material_id;
  episode.trial_id = trial_id;
  if (steps <= 0) return episode;

  const TaxelLayout layout = MakeTaxelLayout();
  const auto traj = GenTrajectory(config.trajectory, steps);
  const double dt = config.trajectory.dt;

  HandPose start{traj[0].x(), traj[0].y(), config.hover_z, 0, 0, 0};
  SimState sim = MakeSimState(run_seed, start);
  std::mt19937_64 walk_rng(DeriveSeed(run_seed, "walk"));

  // offset capture out of contact
  const SensorFrame bias = SimStep(sim, material, config.sim, layout, start, dt);

  CtrlState ctrl_state;
  ControlInput u;
  HandPose commanded{traj[0].x(), traj[0].y(), 0.0, 0, 0, 0};
  episode.steps.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    const SensorFrame raw = SimStep(sim, material, config.sim, layout, commanded, dt);
    const SensorFrame frame = RemoveOffsets(raw, bias);
    u = RandomWalkTargets(u, sigma_tau, sigma_force, walk_rng);

    EpisodeStep step;
    step.force = frame.data;
    step.pos = Eigen::Vector3d(sim.realized.x, sim.realized.y, sim.realized.z);
    step.ctrl = u.AsVector();
    episode.steps.push_back(step);
    if (on_step) on_step(t, step);

    ProportionalStep(ctrl_state, frame, layout, u, config.gains);
    const Eigen::Vector2d& xy = traj[std::min(t + 1, steps - 1)];
    commanded = HandPose{xy.x(),       xy.y(),           -ctrl_state.press_depth,
                         ctrl_state.roll, ctrl_state.pitch, 0.0};
  }
  return episode;
}

std::string ControlTag(const ControlOptions& options) {
  std::string tag = TaskLossName(options.loss) + "_" + PbModeName(options.mode);
  if (options.mode == PbMode::kWrong) tag += "_" + options.wrong_material;
  return tag;
}

}  // namespace

uint64_t DeriveSeed(uint64_t base, const std::string& label) {
  uint64_t hash = 14695981039346656037ULL ^ (base * 0x9e3779b97f4a7c15ULL);
  for (unsigned char c : label) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string TaskLossName(TaskLossKind kind) {
  switch (kind) {
    case TaskLossKind::kTrackNormal: return "track";
    case TaskLossKind::kShearVarianceMin: return "shearvar";
    case TaskLossKind::kBiasRight: return "biasright";
  }
  return "unknown";
}

std::string PbModeName(PbMode mode) {
  switch (mode) {
    case PbMode::kCorrect: return "correct";
    case PbMode::kWrong: return "wrong";
    case PbMode::kBasic: return "basic";
  }
  return "unknown";
}

CollectResult CmdCollect(const ExperimentConfig& config, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const MaterialLibrary library = LoadMaterialLibrary(config.materials_file);

  CollectResult result;
  try {
    for (const auto& material_id : config.train_materials) {
      const MaterialParams& material = FindMaterial(library, material_id);
      for (const auto& [sigma_tau, sigma_force] : config.sigma_settings) {
        const std::string trial = SigmaTrialId(sigma_tau, sigma_force);
        const uint64_t seed =
            DeriveSeed(config.seed, "collect/" + material_id + "/" + trial);
        const Episode episode =
            RollRandomWalk(config, material, material_id, trial, sigma_tau,
                           sigma_force, seed, config.collect_steps, nullptr);
        const std::string path =
            out_dir + "/episode_" + material_id + "_" + trial + ".txt";
        WriteEpisode(path, episode);
        result.episode_paths.push_back(path);
        result.total_steps += static_cast<int>(episode.steps.size());
      }
    }
  } catch (...) {
    // never leave a partial dataset behind
    for (const auto& path : result.episode_paths) {
      std::error_code ec;
      fs::remove(path, ec);
    }
    throw;
  }

  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("seed", std::to_string(config.seed));
  fields.emplace_back("episodes", std::to_string(result.episode_paths.size()));
  fields.emplace_back("total_steps", std::to_string(result.total_steps));
  for (size_t i = 0; i < result.episode_paths.size(); ++i) {
    fields.emplace_back("episode_" + std::to_string(i), result.episode_paths[i]);
  }
  WriteRunRecord(out_dir + "/run_collect.yaml", "collect", fields, config.raw_text);
  return result;
}

TrainCmdResult CmdTrain(const ExperimentConfig& config,
                        const std::vector<std::string>& episode_paths,
                        const std::string& out_dir) {
  fs::create_directories(out_dir);
  const std::vector<Episode> episodes = ReadEpisodes(episode_paths);

  TrainConfig train_config = config.train;
  train_config.seed = DeriveSeed(config.seed, "train");
  const TrainResult trained = Train(episodes, train_config);
  if (!std::isfinite(trained.final_loss)) {
    throw NumericFailure("training diverged: non-finite final loss");
  }

  TrainCmdResult result;
  result.checkpoint_path = out_dir + "/model.ckpt";
  WriteCheckpoint(result.checkpoint_path,
                  {trained.model, trained.pb, config.raw_text});
  result.checkpoint_hash = FileHash(result.checkpoint_path);
  result.initial_loss = trained.initial_loss;
  result.final_loss = trained.final_loss;
  result.epochs = trained.epochs_run;
  result.pb_materials = static_cast<int>(trained.pb.Materials().size());

  std::string curve = "epoch,mse\n";
  for (size_t i = 0; i < trained.loss_curve.size(); ++i) {
    curve += std::to_string(i + 1) + "," + D(trained.loss_curve[i]) + "\n";
  }
  WriteTextFile(out_dir + "/loss_curve.csv", curve);

  std::string table = "material,trial,p1,p2\n";
  for (const auto& entry : trained.pb.entries) {
    table += entry.material_id + "," + entry.trial_id + "," + D(entry.p[0]) + "," +
             D(entry.p[1]) + "\n";
  }
  WriteTextFile(out_dir + "/pb_table.csv", table);

  WriteRunRecord(out_dir + "/run_train.yaml", "train",
                 {{"seed", std::to_string(config.seed)},
                  {"episodes", std::to_string(episodes.size())},
                  {"initial_loss", D(result.initial_loss)},
                  {"final_loss", D(result.final_loss)},
                  {"epochs", std::to_string(result.epochs)},
                  {"pb_materials", std::to_string(result.pb_materials)},
                  {"checkpoint", result.checkpoint_path},
                  {"checkpoint_hash", HashHex(result.checkpoint_hash)}},
                 config.raw_text);
  return result;
}

RecognizeResult CmdRecognize(const ExperimentConfig& config,
                             const std::string& checkpoint_path,
                             const std::string& expect_hash,
                             const std::string& material, const std::string& init_pb,
                             int steps, const std::string& out_dir) {
  fs::create_directories(out_dir);
  VerifyHash(checkpoint_path, expect_hash);
  const CheckpointData data = ReadCheckpoint(checkpoint_path);
  const MaterialLibrary library = LoadMaterialLibrary(config.materials_file);
  const MaterialParams& params = FindMaterial(library, material);

  const auto sigma = config.sigma_settings.empty() ? std::make_pair(10.0, 30.0)
                                                   : config.sigma_settings.front();

  RecognizeResult result;
  Eigen::Vector2d p = InitialBias(data.pb, init_pb);
  OnlineBuffer buffer(config.online_capacity);
  std::string csv = "tick,p1,p2\n";

  const auto on_step = [&](int t, const EpisodeStep& step) {
    buffer.Push(step);
    if (buffer.size() >= config.online.start_threshold) {
      // fresh velocity each tick: the window contents just changed, and
      // carrying momentum across windows compounds correlated gradients
      // far past the configured step size
      MomentumState mstate(2);
      p = OnlineUpdatePb(data.model, buffer, p, mstate, config.online);
      ++result.updates;
      csv += std::to_string(t) + "," + D(p[0]) + "," + D(p[1]) + "\n";
    }
  };
  const uint64_t seed =
      DeriveSeed(config.seed, "recognize/" + material + "/" + init_pb);
  RollRandomWalk(config, params, material, "recognize", sigma.first, sigma.second,
                 seed, steps, on_step);

  result.csv_path = out_dir + "/pb_trajectory.csv";
  WriteTextFile(result.csv_path, csv);
  result.final_pb = p;
  result.nearest_material = data.pb.NearestMaterial(p);
  result.too_short = result.updates == 0;

  std::vector<std::pair<std::string, std::string>> fields = {
      {"seed", std::to_string(config.seed)},
      {"material", material},
      {"init_pb", init_pb.empty() ? "zero" : init_pb},
      {"steps", std::to_string(steps)},
      {"updates", std::to_string(result.updates)},
      {"final_p1", D(p[0])},
      {"final_p2", D(p[1])},
      {"nearest_material", result.nearest_material},
      {"checkpoint", checkpoint_path},
      {"checkpoint_hash", HashHex(FileHash(checkpoint_path))},
      {"output", result.csv_path}};
  if (result.too_short) {
    fields.emplace_back("notice", "fewer steps than the online start threshold; "
                                  "no updates ran");
  }
  WriteRunRecord(out_dir + "/run_recognize.yaml", "recognize", fields,
                 config.raw_text);
  return result;
}

ControlResult CmdControl(const ExperimentConfig& config,
                         const std::string& checkpoint_path,
                         const std::string& expect_hash, const std::string& material,
                         const ControlOptions& options, const std::string& out_dir) {
  fs::create_directories(out_dir);
  VerifyHash(checkpoint_path, expect_hash);
  const CheckpointData data = ReadCheckpoint(checkpoint_path);
  const MaterialLibrary library = LoadMaterialLibrary(config.materials_file);
  const MaterialParams& params = FindMaterial(library, material);
  const TaxelLayout layout = MakeTaxelLayout();
  const std::vector<int> right = RightColumnIndices(layout);

  TaskLossConfig loss_config;
  loss_config.kind = options.loss;
  loss_config.force_ref = config.force_ref;
  loss_config.smoothness_weight = config.loss_smoothness;
  loss_config.right_taxels = right;
  loss_config.scaling = data.model.scaling;

  Eigen::Vector2d pb = Eigen::Vector2d::Zero();
  if (options.mode == PbMode::kCorrect) {
    pb = InitialBias(data.pb, material);
  } else if (options.mode == PbMode::kWrong) {
    pb = InitialBias(data.pb, options.wrong_material);
  }

  const int steps = options.steps;
  const std::string tag = ControlTag(options);
  const uint64_t seed =
      DeriveSeed(config.seed, "control/" + material + "/" + tag);

  const auto traj = GenTrajectory(config.trajectory, std::max(steps, 1));
  const double dt = config.trajectory.dt;
  HandPose start{traj[0].x(), traj[0].y(), config.hover_z, 0, 0, 0};
  SimState sim = MakeSimState(seed, start);
  const SensorFrame bias = SimStep(sim, params, config.sim, layout, start, dt);

  CtrlState ctrl_state;
  RecurrentState live_state = data.model.net.MakeState(1);
  Eigen::MatrixXd plan = ColdStartPlan(config.opt.horizon);
  OnlineBuffer buffer(config.online_capacity);
  

  ControlResult result;
  std::vector<Eigen::Matrix<double, 72, 1>> history;
  history.reserve(steps);
  std::string csv = "tick,tau_roll_cmd,tau_pitch_cmd,force_cmd,mean_fz,e1,e2,e3,aborted\n";
  HandPose commanded{traj[0].x(), traj[0].y(), 0.0, 0, 0, 0};

  for (int t = 0; t < steps; ++t) {
    const SensorFrame raw = SimStep(sim, params, config.sim, layout, commanded, dt);
    const SensorFrame frame = RemoveOffsets(raw, bias);
    const Eigen::Vector3d pos(sim.realized.x, sim.realized.y, sim.realized.z);

    ControlInput u;
    bool aborted = false;
    if (options.mode == PbMode::kBasic) {
      u = ControlInput{};  // constant neutral reference, no planning
    } else {
      // the wipe path is scripted, so the hand's horizon track is known up
      // front; future waypoints are shifted by the currently observed
      // plant-lag offset, and depth is held at its present value
      Eigen::Matrix3Xd track(3, config.opt.horizon);
      const Eigen::Vector2d lag_offset(pos.x() - traj[t].x(),
                                       pos.y() - traj[t].y());
      for (int k = 0; k < config.opt.horizon; ++k) {
        const Eigen::Vector2d& wp = traj[std::min(t + k, steps - 1)];
        track.col(k) = Eigen::Vector3d(wp.x() + lag_offset.x(),
                                       wp.y() + lag_offset.y(), pos.z());
      }
      const TtnpbHorizon dynamics(data.model, frame.data, track, pb, live_state,
                                  config.opt.horizon);
      const Eigen::MatrixXd init = t == 0 ? plan : WarmStart(plan);
      const PlanResult opt = OptimizePlan(dynamics, loss_config, config.opt, init);
      plan = opt.plan;
      u = opt.first;
      aborted = opt.aborted_nonfinite;
      if (aborted) ++result.aborted_ticks;
      // keep the live recurrent state in step with what actually ran
      RecurrentState& live = live_state;
      Predict(data.model, frame.data, pos, u.AsVector(), pb, live);
    }

    if (options.online_pb && options.mode != PbMode::kBasic) {
      EpisodeStep step;
      step.force = frame.data;
      step.pos = pos;
      step.ctrl = u.AsVector();
      buffer.Push(step);
      if (buffer.size() >= config.online.start_threshold) {
        MomentumState mstate(2);  // fresh velocity per tick, as in recognition
        pb = OnlineUpdatePb(data.model, buffer, pb, mstate, config.online);
      }
    }

    history.push_back(frame.data);
    const EvalSummary tick = EvalMetrics({frame.data}, config.force_ref, right);
    csv += std::to_string(t) + "," + D(u.tau_roll) + "," + D(u.tau_pitch) + "," +
           D(u.force) + "," + D(frame.MeanNormal()) + "," + D(tick.e1) + "," +
           D(tick.e2) + "," + D(tick.e3) + "," + (aborted ? "1" : "0") + "\n";
    result.mean_tau_roll_cmd += u.tau_roll;
    result.mean_force_cmd += u.force;

    ProportionalStep(ctrl_state, frame, layout, u, config.gains);
    const Eigen::Vector2d& xy = traj[std::min(t + 1, std::max(steps - 1, 0))];
    commanded = HandPose{xy.x(),          xy.y(),           -ctrl_state.press_depth,
                         ctrl_state.roll, ctrl_state.pitch, 0.0};
  }

  if (steps > 0) {
    result.mean_tau_roll_cmd /= steps;
    result.mean_force_cmd /= steps;
  }
  result.summary = EvalMetrics(history, config.force_ref, right);
  result.log_path = out_dir + "/control_" + tag + ".csv";
  WriteTextFile(result.log_path, csv);

  std::vector<std::pair<std::string, std::string>> fields = {
      {"seed", std::to_string(config.seed)},
      {"material", material},
      {"loss", TaskLossName(options.loss)},
      {"pb_mode", PbModeName(options.mode)},
      {"steps", std::to_string(steps)},
      {"e1_ave", D(result.summary.e1)},
      {"e2_ave", D(result.summary.e2)},
      {"e3_ave", D(result.summary.e3)},
      {"e2_excluded", std::to_string(result.summary.e2_excluded)},
      {"mean_tau_roll_cmd", D(result.mean_tau_roll_cmd)},
      {"mean_force_cmd", D(result.mean_force_cmd)},
      {"aborted_ticks", std::to_string(result.aborted_ticks)},
      {"checkpoint", checkpoint_path},
      {"checkpoint_hash", HashHex(FileHash(checkpoint_path))},
      {"output", result.log_path}};
  if (options.mode == PbMode::kWrong) {
    fields.emplace_back("wrong_material", options.wrong_material);
  }
  if (steps == 0) fields.emplace_back("e_undefined", "true");
  WriteRunRecord(out_dir + "/run_control_" + tag + ".yaml", "control", fields,
                 config.raw_text);
  return result;
}

EvalCmdResult CmdEval(const ExperimentConfig& config, const std::string& checkpoint_path,
                      const std::string& expect_hash,
                      const std::vector<std::string>& episode_paths,
                      const std::string& out_dir) {
  fs::create_directories(out_dir);
  VerifyHash(checkpoint_path, expect_hash);
  const CheckpointData data = ReadCheckpoint(checkpoint_path);
  const std::vector<Episode> episodes = ReadEpisodes(episode_paths);

  std::string csv = "episode,material,trial,transitions,mse\n";
  double total_sqerr = 0;
  long total_elements = 0;
  for (size_t i = 0; i < episodes.size(); ++i) {
    const Episode& episode = episodes[i];
    Eigen::Vector2d pb = Eigen::Vector2d::Zero();
    const int entry = data.pb.Find(episode.material_id, episode.trial_id);
    if (entry >= 0) {
      pb = data.pb.entries[entry].p;
    } else {
      try {
        pb = data.pb.MaterialMean(episode.material_id);
      } catch (const std::out_of_range&) {
        pb.setZero();  // unseen material: neutral bias
      }
    }

    RecurrentState rstate = data.model.net.MakeState(1);
    double sqerr = 0;
    const int transitions = std::max<int>(0, static_cast<int>(episode.steps.size()) - 1);
    for (int t = 0; t < transitions; ++t) {
      const EpisodeStep& step = episode.steps[t];
      const auto pred =
          Predict(data.model, step.force, step.pos, step.ctrl, pb, rstate);
      sqerr += ((pred - episode.steps[t + 1].force) / data.model.scaling.force_scale)
                   .squaredNorm();
    }
    const long elements = 72L * transitions;
    const double mse = elements > 0 ? sqerr / elements : 0.0;
    total_sqerr += sqerr;
    total_elements += elements;
    csv += episode_paths[i] + "," + episode.material_id + "," + episode.trial_id +
           "," + std::to_string(transitions) + "," + D(mse) + "\n";
  }

  EvalCmdResult result;
  result.mse = total_elements > 0 ? total_sqerr / total_elements : 0.0;
  result.csv_path = out_dir + "/eval.csv";
  WriteTextFile(result.csv_path, csv);
  WriteRunRecord(out_dir + "/run_eval.yaml", "eval",
                 {{"episodes", std::to_string(episodes.size())},
                  {"mse", D(result.mse)},
                  {"checkpoint", checkpoint_path},
                  {"checkpoint_hash", HashHex(FileHash(checkpoint_path))},
                  {"output", result.csv_path}},
                 config.raw_text);
  return result;
}

PcaCmdResult CmdPca(const ExperimentConfig& config, const std::string& checkpoint_path,
                    const std::string& expect_hash, const std::string& out_dir) {
  fs::create_directories(out_dir);
  VerifyHash(checkpoint_path, expect_hash);
  const CheckpointData data = ReadCheckpoint(checkpoint_path);

  std::vector<Eigen::Vector2d> points;
  points.reserve(data.pb.entries.size());
  for (const auto& entry : data.pb.entries) points.push_back(entry.p);
  const PcaResult pca = PbPca(points);

  std::string csv = "material,trial,p1,p2,pc1,pc2\n";
  for (size_t i = 0; i < data.pb.entries.size(); ++i) {
    const auto& entry = data.pb.entries[i];
    csv += entry.material_id + "," + entry.trial_id + "," + D(entry.p[0]) + "," +
           D(entry.p[1]) + "," + D(pca.projected(static_cast<int>(i), 0)) + "," +
           D(pca.projected(static_cast<int>(i), 1)) + "\n";
  }

  PcaCmdResult result;
  result.csv_path = out_dir + "/pca.csv";
  result.eigenvalues = pca.eigenvalues;
  WriteTextFile(result.csv_path, csv);
  WriteRunRecord(out_dir + "/run_pca.yaml", "pca",
                 {{"points", std::to_string(points.size())},
                  {"eigenvalue_1", D(pca.eigenvalues[0])},
                  {"eigenvalue_2", D(pca.eigenvalues[1])},
                  {"pc1_x", D(pca.components(0, 0))},
                  {"pc1_y", D(pca.components(0, 1))},
                  {"checkpoint", checkpoint_path},
                  {"checkpoint_hash", HashHex(FileHash(checkpoint_path))},
                  {"output", result.csv_path}},
                 config.raw_text);
  return result;
}

}  // namespace tacwipe
