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

// wiping-experiment driver: collect data, train the transition model,
// recognize surfaces online, run gradient-based control, evaluate, project

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tacwipe/harness/commands.h"
#include "tacwipe/io/checkpoint.h"
#include "tacwipe/io/episode_io.h"
#include "tacwipe/net/network.h"
#include "tacwipe/sim/contact_sim.h"
#include "tacwipe/sim/material.h"
#include "tacwipe/ttnpb/online.h"
#include "tacwipe/ttnpb/pca.h"
#include "tacwipe/ttnpb/train.h"

namespace {

// exit codes: 0 success, 2 bad configuration or arguments, 3 bad or
// inconsistent data, 4 numeric failure
constexpr int kOkExit = 0;
constexpr int kGenericExit = 1;
constexpr int kConfigExit = 2;
constexpr int kDataExit = 3;
constexpr int kNumericExit = 4;

tacwipe::TaskLossKind ParseLoss(const std::string& name) {
  if (name == "track") return tacwipe::TaskLossKind::kTrackNormal;
  if (name == "shearvar") return tacwipe::TaskLossKind::kShearVarianceMin;
  if (name == "biasright") return tacwipe::TaskLossKind::kBiasRight;
  throw tacwipe::ConfigError("unknown loss '" + name +
                             "' (expected track, shearvar, or biasright)");
}

void ParsePbMode(const std::string& spec, tacwipe::ControlOptions& options) {
  if (spec == "correct") {
    options.mode = tacwipe::PbMode::kCorrect;
  } else if (spec == "basic") {
    options.mode = tacwipe::PbMode::kBasic;
  } else if (spec.rfind("wrong:", 0) == 0 && spec.size() > 6) {
    options.mode = tacwipe::PbMode::kWrong;
    options.wrong_material = spec.substr(6);
  } else {
    throw tacwipe::ConfigError("unknown bias mode '" + spec +
                               "' (expected correct, wrong:<material>, or basic)");
  }
}

struct CliArgs {
  std::string command;
  std::string config_path = "configs/default.yaml";
  std::string out_dir = "out";
  std::string checkpoint;
  std::string expect_hash;
  std::string material;
  std::string init_pb = "zero";
  std::string loss = "track";
  std::string pb = "correct";
  std::vector<std::string> episodes;
  uint64_t seed = 0;
  bool seed_set = false;
  int steps = -1;
  bool online_pb = false;
};

int Dispatch(const CliArgs& args) {
  tacwipe::ExperimentConfig config = tacwipe::LoadExperimentConfig(args.config_path);
  if (args.seed_set) config.seed = args.seed;

  if (args.command == "collect") {
    const auto result = tacwipe::CmdCollect(config, args.out_dir);
    std::cout << "wrote " << result.episode_paths.size() << " episodes ("
              << result.total_steps << " steps) under " << args.out_dir << "\n";
    return kOkExit;
  }
  if (args.command == "train") {
    const auto result = tacwipe::CmdTrain(config, args.episodes, args.out_dir);
    std::cout << "trained " << result.epochs << " epochs, loss "
              << result.initial_loss << " -> " << result.final_loss << "\n"
              << "checkpoint " << result.checkpoint_path << " hash "
              << tacwipe::HashHex(result.checkpoint_hash) << "\n";
    return kOkExit;
  }
  if (args.command == "recognize") {
    const int steps = args.steps > 0 ? args.steps : config.control_steps;
    const auto result =
        tacwipe::CmdRecognize(config, args.checkpoint, args.expect_hash,
                              args.material, args.init_pb, steps, args.out_dir);
    if (result.too_short) {
      std::cout << "notice: run shorter than the online start threshold, "
                   "no updates ran\n";
    }
    std::cout << "final bias (" << result.final_pb[0] << ", " << result.final_pb[1]
              << "), nearest material " << result.nearest_material << " after "
              << result.updates << " updates\n";
    return kOkExit;
  }
  if (args.command == "control") {
    tacwipe::ControlOptions options;
    options.loss = ParseLoss(args.loss);
    ParsePbMode(args.pb, options);
    options.steps = args.steps > 0 ? args.steps : config.control_steps;
    options.online_pb = args.online_pb;
    const auto result = tacwipe::CmdControl(config, args.checkpoint,
                                            args.expect_hash, args.material,
                                            options, args.out_dir);
    std::cout << "e1 " << result.summary.e1 << " e2 " << result.summary.e2 << " e3 "
              << result.summary.e3 << " (mean tau_roll "
              << result.mean_tau_roll_cmd << ", mean force " << result.mean_force_cmd
              << ", aborted ticks " << result.aborted_ticks << ")\n"
              << "log " << result.log_path << "\n";
    return kOkExit;
  }
  if (args.command == "eval") {
    const auto result = tacwipe::CmdEval(config, args.checkpoint, args.expect_hash,
                                         args.episodes, args.out_dir);
    std::cout << "prediction mse " << result.mse << ", table " << result.csv_path
              << "\n";
    return kOkExit;
  }
  if (args.command == "pca") {
    const auto result =
        tacwipe::CmdPca(config, args.checkpoint, args.expect_hash, args.out_dir);
    std::cout << "eigenvalues " << result.eigenvalues[0] << ", "
              << result.eigenvalues[1] << ", table " << result.csv_path << "\n";
    return kOkExit;
  }
  throw tacwipe::ConfigError("unknown command '" + args.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulated tactile wiping experiments"};
  app.require_subcommand(1);
  CliArgs args;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "experiment config file");
    sub->add_option("--seed", args.seed, "override the config seed")
        ->each([&](const std::string&) { args.seed_set = true; });
    sub->add_option("--out", args.out_dir, "output directory");
  };
  const auto add_checkpoint = [&](CLI::App* sub) {
    sub->add_option("--checkpoint", args.checkpoint, "trained model file")
        ->required();
    sub->add_option("--expect-hash", args.expect_hash,
                    "fail unless the checkpoint hashes to this value");
  };

  CLI::App* collect = app.add_subcommand("collect", "record wiping episodes");
  add_common(collect);

  CLI::App* train = app.add_subcommand("train", "fit the transition model");
  add_common(train);
  train->add_option("--episodes", args.episodes, "episode files")->required();

  CLI::App* recognize =
      app.add_subcommand("recognize", "adapt the bias online on one material");
  add_common(recognize);
  add_checkpoint(recognize);
  recognize->add_option("--material", args.material, "material to wipe")->required();
  recognize->add_option("--init-pb", args.init_pb,
                        "zero or a trained material name");
  recognize->add_option("--steps", args.steps, "rollout length in ticks");

  CLI::App* control =
      app.add_subcommand("control", "closed-loop control with a task loss");
  add_common(control);
  add_checkpoint(control);
  control->add_option("--material", args.material, "material to wipe")->required();
  control->add_option("--loss", args.loss, "track, shearvar, or biasright");
  control->add_option("--pb", args.pb, "correct, wrong:<material>, or basic");
  control->add_option("--steps", args.steps, "rollout length in ticks");
  control->add_flag("--online-pb", args.online_pb, "adapt the bias while running");

  CLI::App* eval = app.add_subcommand("eval", "score a checkpoint on episodes");
  add_common(eval);
  add_checkpoint(eval);
  eval->add_option("--episodes", args.episodes, "episode files")->required();

  CLI::App* pca = app.add_subcommand("pca", "project the trained bias table");
  add_common(pca);
  add_checkpoint(pca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOkExit : kConfigExit;
  }
  args.command = app.get_subcommands().front()->get_name();

  try {
    return Dispatch(args);
  } catch (const tacwipe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const tacwipe::InvalidMaterial& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const tacwipe::BadNetworkSpec& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const tacwipe::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::CheckpointError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::InsufficientData& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::DegenerateData& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::BufferTooSmall& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::DimensionMismatch& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const std::out_of_range& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataExit;
  } catch (const tacwipe::NonFiniteCommand& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumericExit;
  } catch (const tacwipe::NumericFailure& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumericExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGenericExit;
  }
}
