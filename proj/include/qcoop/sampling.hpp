// Copyright 2026 The qcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOOP_SAMPLING_HPP_
#define QCOOP_SAMPLING_HPP_

#include <random>

#include "qcoop/channel.hpp"
#include "qcoop/game.hpp"

namespace qcoop {

// Haar-like random pure state: independent complex gaussian amplitudes,
// normalized.
ThreeQubitState sample_state(std::mt19937_64& rng);

// Random state with support only on |111>, |122>, |211>, |222>, so that
// w3 = w4 = 0 exactly.
ThreeQubitState sample_admissible_state(std::mt19937_64& rng);

StrategyProfile sample_profile(std::mt19937_64& rng);

// Random (w1, 1 - w1, 0, 0).
StateWeights sample_admissible_weights(std::mt19937_64& rng);

}  // namespace qcoop

#endif  // QCOOP_SAMPLING_HPP_
