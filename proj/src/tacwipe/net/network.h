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

#ifndef TACWIPE_NET_NETWORK_H_
#define TACWIPE_NET_NETWORK_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tacwipe {

struct BadNetworkSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LayerKind { kFullyConnected, kLstm };
enum class Activation { kTanh, kLinear };

struct LayerSpec {
  LayerKind kind = LayerKind::kFullyConnected;
  int in_dim = 0;
  int out_dim = 0;
  Activation activation = Activation::kTanh;  // FC only; LSTM uses its gates
};

// number of scalars a layer owns. FC: W(out x in) + b(out). LSTM:
// Wx(4H x in) + Wh(4H x H) + b(4H), gate row blocks ordered i, f, g, o.
int LayerParamCount(const LayerSpec& layer);
int TotalParamCount(const std::vector<LayerSpec>& spec);

// throws BadNetworkSpec unless dims are positive and consecutive layers chain
void ValidateSpec(const std::vector<LayerSpec>& spec);

// hidden and cell activations of every LSTM layer, one column per batch item
struct RecurrentState {
  std::vector<Eigen::MatrixXd> h;
  std::vector<Eigen::MatrixXd> c;

  void SetZero();
  int batch() const { return h.empty() ? 0 : static_cast<int>(h[0].cols()); }
};

// gradients flowing into the previous time step's recurrent state
struct RecurrentGrad {
  std::vector<Eigen::MatrixXd> dh;
  std::vector<Eigen::MatrixXd> dc;

  void SetZero();
};

// one time step's activations, enough for an exact reverse pass
struct StepTape {
  struct FcRecord {
    Eigen::MatrixXd input;
    Eigen::MatrixXd output;  // post-activation
  };
  struct LstmRecord {
    Eigen::MatrixXd input, h_prev, c_prev;
    Eigen::MatrixXd i, f, g, o;  // post-gate-activation
    Eigen::MatrixXd c, tanh_c;
  };
  std::vector<FcRecord> fc;
  std::vector<LstmRecord> lstm;
};

// A feed-forward stack of FC and LSTM layers over one flat 64-bit parameter
// vector. Forward/backward operate on batches (one column per item) so a
// whole batch of windows runs as dense matrix products.
class Network {
 public:
  Network() = default;
  explicit Network(std::vector<LayerSpec> spec);  // zero-initialized weights

  // uniform +-1/sqrt(fan_in) weights, zero biases, LSTM forget bias +1
  static Network Random(std::vector<LayerSpec> spec, uint64_t seed);

  const std::vector<LayerSpec>& spec() const { return spec_; }
  int input_size() const { return spec_.front().in_dim; }
  int output_size() const { return spec_.back().out_dim; }
  int param_count() const { return static_cast<int>(params_.size()); }
  int lstm_layer_count() const { return lstm_count_; }

  Eigen::VectorXd& params() { return params_; }
  const Eigen::VectorXd& params() const { return params_; }

  // offset of a layer's parameter block within params()
  int layer_offset(int layer) const { return offsets_[layer]; }

  RecurrentState MakeState(int batch) const;
  RecurrentGrad MakeGrad(int batch) const;

  // one time step over a batch; advances rstate in place and records the
  // activations on tape when one is supplied
  Eigen::MatrixXd Forward(const Eigen::MatrixXd& input, RecurrentState& rstate,
                          StepTape* tape) const;

  // exact reverse pass of one recorded step. output_grad is dL/d(output);
  // rgrad carries dL/d(h, c) from the following step in and leaves the
  // gradients for the preceding step behind; parameter gradients accumulate
  // into param_grad (caller zeroes it at sequence start). Returns dL/d(input).
  Eigen::MatrixXd Backward(const StepTape& tape, const Eigen::MatrixXd& output_grad,
                           RecurrentGrad& rgrad, Eigen::VectorXd& param_grad) const;

 private:
  std::vector<LayerSpec> spec_;
  std::vector<int> offsets_;
  Eigen::VectorXd params_;
  int lstm_count_ = 0;
};

}  // namespace tacwipe

#endif  // TACWIPE_NET_NETWORK_H_
