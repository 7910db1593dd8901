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

#include "tacwipe/ttnpb/train.h"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace tacwipe {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Window {
  int episode;
  int start;
  int len;  // transitions predicted: steps start..start+len-1 -> start+1..
  int pb;
};

// step-major scaled input/target blocks for a batch of equal-length windows
struct SeqBatch {
  std::vector<MatrixXd> inputs;   // len of (80 x batch)
  std::vector<MatrixXd> targets;  // len of (72 x batch)
  std::vector<int> pb_index;      // batch
};

SeqBatch GatherBatch(const std::vector<Episode>& episodes, const PBTable& table,
                     const ScalingConstants& scaling,
                     const std::vector<Window>& windows,
                     const std::vector<int>& picked) {
  const int b = static_cast<int>(picked.size());
  const int len = windows[picked[0]].len;
  SeqBatch batch;
  batch.inputs.reserve(len);
  batch.targets.reserve(len);
  batch.pb_index.resize(b);

  MatrixXd force(72, b), pos(3, b), ctrl(3, b), pb(2, b);
  for (int t = 0; t < len; ++t) {
    for (int j = 0; j < b; ++j) {
      const Window& w = windows[picked[j]];
      const EpisodeStep& step = episodes[w.episode].steps[w.start + t];
      force.col(j) = step.force;
      pos.col(j) = step.pos;
      ctrl.col(j) = step.ctrl;
      pb.col(j) = table.entries[w.pb].p;
      if (t == 0) batch.pb_index[j] = w.pb;
    }
    batch.inputs.push_back(AssembleScaledInput(scaling, force, pos, ctrl, pb));
    MatrixXd target(72, b);
    for (int j = 0; j < b; ++j) {
      const Window& w = windows[picked[j]];
      target.col(j) =
          episodes[w.episode].steps[w.start + t + 1].force / scaling.force_scale;
    }
    batch.targets.push_back(std::move(target));
  }
  return batch;
}

// forward a batch; returns summed squared error and element count, recording
// tapes and predictions when training
double ForwardBatch(const Network& net, const SeqBatch& batch,
                    std::vector<StepTape>* tapes, std::vector<MatrixXd>* preds) {
  const int len = static_cast<int>(batch.inputs.size());
  RecurrentState rstate = net.MakeState(static_cast<int>(batch.inputs[0].cols()));
  double sqerr = 0;
  for (int t = 0; t < len; ++t) {
    StepTape* tape = tapes ? &(*tapes)[t] : nullptr;
    MatrixXd out = net.Forward(batch.inputs[t], rstate, tape);
    sqerr += (out - batch.targets[t]).squaredNorm();
    if (preds) (*preds)[t] = std::move(out);
  }
  return sqerr;
}

// deterministic batching: fixed-length groups in descending length order,
// window order within a group as given
std::vector<std::vector<int>> MakeBatches(const std::vector<Window>& windows,
                                          const std::vector<int>& order, int batch_size) {
  std::map<int, std::vector<int>, std::greater<int>> by_len;
  for (int idx : order) by_len[windows[idx].len].push_back(idx);
  std::vector<std::vector<int>> batches;
  for (auto& [len, group] : by_len) {
    for (size_t at = 0; at < group.size(); at += batch_size) {
      const size_t end = std::min(group.size(), at + batch_size);
      batches.emplace_back(group.begin() + at, group.begin() + end);
    }
  }
  return batches;
}

double EvalLoss(const std::vector<Episode>& episodes, const PBTable& table,
                const ScalingConstants& scaling, const Network& net,
                const std::vector<Window>& windows,
                const std::vector<std::vector<int>>& batches) {
  double sqerr = 0;
  long elements = 0;
  for (const auto& picked : batches) {
    SeqBatch batch = GatherBatch(episodes, table, scaling, windows, picked);
    sqerr += ForwardBatch(net, batch, nullptr, nullptr);
    elements += 72L * batch.inputs.size() * picked.size();
  }
  return elements > 0 ? sqerr / static_cast<double>(elements) : 0.0;
}

}  // namespace

int PBTable::Find(const std::string& material_id, const std::string& trial_id) const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].material_id == material_id && entries[i].trial_id == trial_id) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::vector<std::string> PBTable::Materials() const {
  std::vector<std::string> out;
  for (const auto& entry : entries) {
    if (std::find(out.begin(), out.end(), entry.material_id) == out.end()) {
      out.push_back(entry.material_id);
    }
  }
  return out;
}

Eigen::Vector2d PBTable::MaterialMean(const std::string& material_id) const {
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  int n = 0;
  for (const auto& entry : entries) {
    if (entry.material_id == material_id) {
      sum += entry.p;
      ++n;
    }
  }
  if (n == 0) throw std::out_of_range("no bias entries for material " + material_id);
  return sum / n;
}

std::string PBTable::NearestMaterial(const Eigen::Vector2d& p) const {
  std::string best;
  double best_dist = 0;
  for (const auto& material : Materials()) {
    const double dist = (MaterialMean(material) - p).norm();
    if (best.empty() || dist < best_dist) {
      best = material;
      best_dist = dist;
    }
  }
  return best;
}

TrainResult Train(const std::vector<Episode>& episodes, const TrainConfig& config) {
  TrainResult result;
  result.model.net = Network::Random(config.layer_spec, config.seed);
  result.model.scaling = config.scaling;
  if (result.model.net.input_size() != TtnpbModel::kInputDim ||
      result.model.net.output_size() != TtnpbModel::kForceDim) {
    throw BadNetworkSpec("train: layer spec must map 80 inputs to 72 outputs");
  }

  // biases start at zero, one entry per (material, trial)
  for (const auto& episode : episodes) {
    if (result.pb.Find(episode.material_id, episode.trial_id) < 0) {
      result.pb.entries.push_back({episode.material_id, episode.trial_id,
                                   Eigen::Vector2d::Zero()});
    }
  }

  std::vector<Window> windows;
  for (size_t e = 0; e < episodes.size(); ++e) {
    const Episode& episode = episodes[e];
    const int transitions = static_cast<int>(episode.steps.size()) - 1;
    const int pb = result.pb.Find(episode.material_id, episode.trial_id);
    if (transitions >= config.window) {
      for (int start = 0; start + config.window <= transitions; start += config.stride) {
        windows.push_back({static_cast<int>(e), start, config.window, pb});
      }
    } else if (transitions >= 1) {
      windows.push_back({static_cast<int>(e), 0, transitions, pb});
    }
  }
  for (const auto& entry : result.pb.entries) {
    const int pb = result.pb.Find(entry.material_id, entry.trial_id);
    const bool covered = std::any_of(windows.begin(), windows.end(),
                                     [pb](const Window& w) { return w.pb == pb; });
    if (!covered) {
      throw InsufficientData("no training window for material " + entry.material_id +
                             " trial " + entry.trial_id);
    }
  }
  if (windows.empty()) throw InsufficientData("no training windows");

  std::vector<int> eval_order(windows.size());
  for (size_t i = 0; i < eval_order.size(); ++i) eval_order[i] = static_cast<int>(i);
  const auto eval_batches = MakeBatches(windows, eval_order, config.batch);

  Network& net = result.model.net;
  const ScalingConstants& scaling = result.model.scaling;
  result.initial_loss = EvalLoss(episodes, result.pb, scaling, net, windows, eval_batches);

  AdamState w_state(net.param_count());
  std::vector<AdamState> pb_states(result.pb.entries.size(), AdamState(2));
  VectorXd param_grad(net.param_count());
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);

  double best = result.initial_loss;
  int stall = 0;
  std::vector<int> order = eval_order;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto batches = MakeBatches(windows, order, config.batch);

    double sqerr = 0;
    long elements = 0;
    for (const auto& picked : batches) {
      SeqBatch batch = GatherBatch(episodes, result.pb, scaling, windows, picked);
      const int len = static_cast<int>(batch.inputs.size());
      const int b = static_cast<int>(picked.size());
      std::vector<StepTape> tapes(len);
      std::vector<MatrixXd> preds(len);
      sqerr += ForwardBatch(net, batch, &tapes, &preds);
      elements += 72L * len * b;

      const double norm = 1.0 / (72.0 * len * b);
      param_grad.setZero();
      MatrixXd pb_grad_cols = MatrixXd::Zero(2, b);
      RecurrentGrad rgrad = net.MakeGrad(b);
      for (int t = len - 1; t >= 0; --t) {
        const MatrixXd dout = 2.0 * norm * (preds[t] - batch.targets[t]);
        const MatrixXd dinput = net.Backward(tapes[t], dout, rgrad, param_grad);
        pb_grad_cols += dinput.bottomRows(2);
      }

      AdamStep(net.params(), param_grad, w_state, config.weight_adam);

      // step only the biases whose windows are in this batch
      std::map<int, Eigen::Vector2d> pb_grads;
      for (int j = 0; j < b; ++j) {
        auto [it, fresh] = pb_grads.try_emplace(batch.pb_index[j], pb_grad_cols.col(j));
        if (!fresh) it->second += pb_grad_cols.col(j);
      }
      for (auto& [k, grad] : pb_grads) {
        VectorXd g = grad;
        AdamStep(result.pb.entries[k].p, g, pb_states[k], config.pb_adam);
      }
    }

    const double loss = elements > 0 ? sqerr / static_cast<double>(elements) : 0.0;
    result.loss_curve.push_back(loss);
    result.epochs_run = epoch + 1;
    if (loss < best * (1.0 - config.plateau_rel_improvement)) {
      best = loss;
      stall = 0;
    } else if (++stall >= config.plateau_epochs) {
      break;
    }
  }

  result.final_loss = EvalLoss(episodes, result.pb, scaling, net, windows, eval_batches);
  return result;
}

}  // namespace tacwipe
