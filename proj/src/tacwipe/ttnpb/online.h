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

#ifndef TACWIPE_TTNPB_ONLINE_H_
#define TACWIPE_TTNPB_ONLINE_H_

#include <deque>
#include <stdexcept>

#include "tacwipe/net/optim.h"
#include "tacwipe/ttnpb/episode.h"
#include "tacwipe/ttnpb/model.h"

namespace tacwipe {

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sliding window of the most recent ticks; once full, pushing evicts the
// oldest entry
class OnlineBuffer {
 public:
  explicit OnlineBuffer(int capacity = 30) : capacity_(capacity) {}

  void Push(const EpisodeStep& step);
  int size() const { return static_cast<int>(steps_.size()); }
  int capacity() const { return capacity_; }
  const EpisodeStep& at(int i) const { return steps_[i]; }  // 0 = oldest

 private:
  int capacity_;
  std::deque<EpisodeStep> steps_;
};

struct OnlineConfig {
  int start_threshold = 10;  // minimum buffered ticks before updates run
  int epochs = 3;            // momentum steps per call
  MomentumConfig momentum{0.01, 0.9};
};

// Adapts only the parametric bias to the buffered window: the recurrent
// state is rebuilt from the window start, the window-mean squared prediction
// error (summed over force components, so step sizes stay effective at the
// configured learning rate) is backpropagated to the bias rows, and `epochs`
// momentum steps are applied. Network weights are read, never written. The
// caller owns `mstate` and decides whether velocity persists across calls;
// when the buffer contents change between calls, a fresh state per call
// avoids compounding correlated gradients far beyond the configured step.
// Throws BufferTooSmall below the start threshold.
Eigen::Vector2d OnlineUpdatePb(const TtnpbModel& model, const OnlineBuffer& buffer,
                               const Eigen::Vector2d& p, MomentumState& mstate,
                               const OnlineConfig& config);

}  // namespace tacwipe

#endif  // TACWIPE_TTNPB_ONLINE_H_
