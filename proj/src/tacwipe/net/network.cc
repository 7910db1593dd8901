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

#include "tacwipe/net/network.h"

#include <cmath>
#include <random>
#include <utility>

namespace tacwipe {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

using ConstMap = Eigen::Map<const MatrixXd>;
using MutMap = Eigen::Map<MatrixXd>;

inline MatrixXd Sigmoid(const MatrixXd& z) {
  return ((-z.array()).exp() + 1.0).inverse().matrix();
}

}  // namespace

int LayerParamCount(const LayerSpec& layer) {
  if (layer.kind == LayerKind::kFullyConnected) {
    return layer.out_dim * layer.in_dim + layer.out_dim;
  }
  const int h = layer.out_dim;
  return 4 * h * layer.in_dim + 4 * h * h + 4 * h;
}

int TotalParamCount(const std::vector<LayerSpec>& spec) {
  int total = 0;
  for (const auto& layer : spec) total += LayerParamCount(layer);
  return total;
}

void ValidateSpec(const std::vector<LayerSpec>& spec) {
  if (spec.empty()) throw BadNetworkSpec("network spec: no layers");
  for (size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].in_dim <= 0 || spec[i].out_dim <= 0) {
      throw BadNetworkSpec("network spec: non-positive dimension at layer " +
                           std::to_string(i));
    }
    if (i > 0 && spec[i].in_dim != spec[i - 1].out_dim) {
      throw BadNetworkSpec("network spec: dimension break between layers " +
                           std::to_string(i - 1) + " and " + std::to_string(i));
    }
  }
}

void RecurrentState::SetZero() {
  for (auto& m : h) m.setZero();
  for (auto& m : c) m.setZero();
}

void RecurrentGrad::SetZero() {
  for (auto& m : dh) m.setZero();
  for (auto& m : dc) m.setZero();
}

Network::Network(std::vector<LayerSpec> spec) : spec_(std::move(spec)) {
  ValidateSpec(spec_);
  offsets_.reserve(spec_.size());
  int total = 0;
  for (const auto& layer : spec_) {
    offsets_.push_back(total);
    total += LayerParamCount(layer);
    if (layer.kind == LayerKind::kLstm) ++lstm_count_;
  }
  params_ = VectorXd::Zero(total);
}

Network Network::Random(std::vector<LayerSpec> spec, uint64_t seed) {
  Network net(std::move(spec));
  std::mt19937_64 rng(seed);
  for (size_t li = 0; li < net.spec_.size(); ++li) {
    const LayerSpec& layer = net.spec_[li];
    double* base = net.params_.data() + net.offsets_[li];
    if (layer.kind == LayerKind::kFullyConnected) {
      const int n_w = layer.out_dim * layer.in_dim;
      std::uniform_real_distribution<double> dist(-1.0 / std::sqrt(layer.in_dim),
                                                  1.0 / std::sqrt(layer.in_dim));
      for (int k = 0; k < n_w; ++k) base[k] = dist(rng);
      // biases stay zero
    } else {
      const int h = layer.out_dim;
      const int n_wx = 4 * h * layer.in_dim;
      const int n_wh = 4 * h * h;
      std::uniform_real_distribution<double> dx(-1.0 / std::sqrt(layer.in_dim),
                                                1.0 / std::sqrt(layer.in_dim));
      std::uniform_real_distribution<double> dh(-1.0 / std::sqrt(h), 1.0 / std::sqrt(h));
      for (int k = 0; k < n_wx; ++k) base[k] = dx(rng);
      for (int k = 0; k < n_wh; ++k) base[n_wx + k] = dh(rng);
      // zero biases except forget gate at +1 for stable early training
      double* bias = base + n_wx + n_wh;
      for (int k = h; k < 2 * h; ++k) bias[k] = 1.0;
    }
  }
  return net;
}

RecurrentState Network::MakeState(int batch) const {
  RecurrentState state;
  state.h.reserve(lstm_count_);
  state.c.reserve(lstm_count_);
  for (const auto& layer : spec_) {
    if (layer.kind != LayerKind::kLstm) continue;
    state.h.push_back(MatrixXd::Zero(layer.out_dim, batch));
    state.c.push_back(MatrixXd::Zero(layer.out_dim, batch));
  }
  return state;
}

RecurrentGrad Network::MakeGrad(int batch) const {
  RecurrentGrad grad;
  grad.dh.reserve(lstm_count_);
  grad.dc.reserve(lstm_count_);
  for (const auto& layer : spec_) {
    if (layer.kind != LayerKind::kLstm) continue;
    grad.dh.push_back(MatrixXd::Zero(layer.out_dim, batch));
    grad.dc.push_back(MatrixXd::Zero(layer.out_dim, batch));
  }
  return grad;
}

MatrixXd Network::Forward(const MatrixXd& input, RecurrentState& rstate,
                          StepTape* tape) const {
  if (input.rows() != input_size()) {
    throw DimensionMismatch("forward: input has " + std::to_string(input.rows()) +
                            " rows, spec expects " + std::to_string(input_size()));
  }
  if (static_cast<int>(rstate.h.size()) != lstm_count_ ||
      (lstm_count_ > 0 && rstate.batch() != input.cols())) {
    throw DimensionMismatch("forward: recurrent state does not match spec/batch");
  }
  if (tape) {
    tape->fc.clear();
    tape->lstm.clear();
  }

  MatrixXd act = input;
  int lstm_index = 0;
  for (size_t li = 0; li < spec_.size(); ++li) {
    const LayerSpec& layer = spec_[li];
    const double* base = params_.data() + offsets_[li];
    if (layer.kind == LayerKind::kFullyConnected) {
      ConstMap w(base, layer.out_dim, layer.in_dim);
      ConstMap b(base + layer.out_dim * layer.in_dim, layer.out_dim, 1);
      MatrixXd z = (w * act).colwise() + b.col(0);
      MatrixXd y = layer.activation == Activation::kTanh
                       ? MatrixXd(z.array().tanh().matrix())
                       : std::move(z);
      if (tape) tape->fc.push_back({act, y});
      act = std::move(y);
    } else {
      const int h = layer.out_dim;
      ConstMap wx(base, 4 * h, layer.in_dim);
      ConstMap wh(base + 4 * h * layer.in_dim, 4 * h, h);
      ConstMap b(base + 4 * h * layer.in_dim + 4 * h * h, 4 * h, 1);
      MatrixXd& h_prev = rstate.h[lstm_index];
      MatrixXd& c_prev = rstate.c[lstm_index];

      MatrixXd z = (wx * act + wh * h_prev).colwise() + b.col(0);
      MatrixXd gi = Sigmoid(z.topRows(h));
      MatrixXd gf = Sigmoid(z.middleRows(h, h));
      MatrixXd gg = z.middleRows(2 * h, h).array().tanh().matrix();
      MatrixXd go = Sigmoid(z.bottomRows(h));
      MatrixXd c_new = gf.cwiseProduct(c_prev) + gi.cwiseProduct(gg);
      MatrixXd tanh_c = c_new.array().tanh().matrix();
      MatrixXd h_new = go.cwiseProduct(tanh_c);

      if (tape) {
        tape->lstm.push_back({act, h_prev, c_prev, gi, gf, gg, go, c_new, tanh_c});
      }
      h_prev = h_new;
      c_prev = std::move(c_new);
      act = std::move(h_new);
      ++lstm_index;
    }
  }
  return act;
}

MatrixXd Network::Backward(const StepTape& tape, const MatrixXd& output_grad,
                           RecurrentGrad& rgrad, VectorXd& param_grad) const {
  if (output_grad.rows() != output_size()) {
    throw DimensionMismatch("backward: output grad rows do not match spec");
  }
  if (param_grad.size() != params_.size()) {
    throw DimensionMismatch("backward: param grad size does not match network");
  }
  if (static_cast<int>(rgrad.dh.size()) != lstm_count_) {
    throw DimensionMismatch("backward: recurrent grad does not match spec");
  }

  MatrixXd grad = output_grad;
  int fc_index = static_cast<int>(tape.fc.size());
  int lstm_index = static_cast<int>(tape.lstm.size());
  for (int li = static_cast<int>(spec_.size()) - 1; li >= 0; --li) {
    const LayerSpec& layer = spec_[li];
    const double* base = params_.data() + offsets_[li];
    double* gbase = param_grad.data() + offsets_[li];
    if (layer.kind == LayerKind::kFullyConnected) {
      const StepTape::FcRecord& rec = tape.fc[--fc_index];
      ConstMap w(base, layer.out_dim, layer.in_dim);
      MutMap dw(gbase, layer.out_dim, layer.in_dim);
      MutMap db(gbase + layer.out_dim * layer.in_dim, layer.out_dim, 1);

      MatrixXd dz =
          layer.activation == Activation::kTanh
              ? MatrixXd((grad.array() * (1.0 - rec.output.array().square())).matrix())
              : std::move(grad);
      dw.noalias() += dz * rec.input.transpose();
      db.col(0).noalias() += dz.rowwise().sum();
      grad = w.transpose() * dz;
    } else {
      const StepTape::LstmRecord& rec = tape.lstm[--lstm_index];
      const int h = layer.out_dim;
      ConstMap wx(base, 4 * h, layer.in_dim);
      ConstMap wh(base + 4 * h * layer.in_dim, 4 * h, h);
      MutMap dwx(gbase, 4 * h, layer.in_dim);
      MutMap dwh(gbase + 4 * h * layer.in_dim, 4 * h, h);
      MutMap db(gbase + 4 * h * layer.in_dim + 4 * h * h, 4 * h, 1);

      const MatrixXd dh = grad + rgrad.dh[lstm_index];
      MatrixXd dc =
          (rgrad.dc[lstm_index].array() +
           dh.array() * rec.o.array() * (1.0 - rec.tanh_c.array().square())).matrix();

      MatrixXd dz(4 * h, dh.cols());
      // gate preactivation grads, rows ordered i, f, g, o
      dz.topRows(h) =
          (dc.array() * rec.g.array() * rec.i.array() * (1.0 - rec.i.array())).matrix();
      dz.middleRows(h, h) =
          (dc.array() * rec.c_prev.array() * rec.f.array() * (1.0 - rec.f.array())).matrix();
      dz.middleRows(2 * h, h) =
          (dc.array() * rec.i.array() * (1.0 - rec.g.array().square())).matrix();
      dz.bottomRows(h) =
          (dh.array() * rec.tanh_c.array() * rec.o.array() * (1.0 - rec.o.array())).matrix();

      dwx.noalias() += dz * rec.input.transpose();
      dwh.noalias() += dz * rec.h_prev.transpose();
      db.col(0).noalias() += dz.rowwise().sum();

      rgrad.dh[lstm_index] = wh.transpose() * dz;
      rgrad.dc[lstm_index] = dc.cwiseProduct(rec.f);
      grad = wx.transpose() * dz;
    }
  }
  return grad;
}

}  // namespace tacwipe
