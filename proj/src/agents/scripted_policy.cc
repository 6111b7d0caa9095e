// Copyright 2026 The Werewolf Arena Strategy Authors
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

#include "werewolf/agents/scripted_policy.h"

#include <algorithm>
#include <stdexcept>

namespace werewolf {

namespace {

// Lowest alive other seat passing `keep`, or the lowest alive other.
template <typename Pred>
int LowestAliveOther(const Observation& obs, Pred keep) {
  const std::vector<int> others = obs.AliveOthers();
  if (others.empty()) throw std::logic_error("no alive player to target");
  for (int seat : others) {
    if (keep(seat)) return seat;
  }
  return others.front();
}

}  // namespace

int ScriptedNightTarget(const Observation& obs, std::span<const int> legal) {
  if (legal.empty()) throw std::logic_error("no legal night target");
  if (obs.role == Role::kDoctor &&
      std::find(legal.begin(), legal.end(), obs.seat) != legal.end()) {
    return obs.seat;
  }
  if (obs.role == Role::kSeer) {
    for (int seat : legal) {
      if (!obs.KnownRole(seat)) return seat;
    }
  }
  return *std::min_element(legal.begin(), legal.end());
}

int ScriptedBid(const Observation& obs) {
  switch (obs.role) {
    case Role::kSeer:
      return 2;
    case Role::kWerewolf:
      return 1;
    case Role::kVillager:
    case Role::kDoctor:
      return 0;
  }
  return 0;
}

std::string ScriptedUtterance(const Observation& obs) {
  if (obs.role == Role::kSeer) {
    for (const auto& [seat, role] : obs.known_roles) {
      if (role == Role::kWerewolf && obs.IsAlive(seat)) {
        return "I am the Seer and " + obs.NameOf(seat) + " is a Werewolf.";
      }
    }
  }
  if (obs.role == Role::kWerewolf) {
    return "I think " + obs.NameOf(ScriptedVote(obs)) + " is suspicious.";
  }
  return "I have nothing to add yet.";
}

int ScriptedVote(const Observation& obs) {
  if (obs.role == Role::kSeer) {
    return LowestAliveOther(obs, [&](int seat) {
      return obs.KnownRole(seat) == Role::kWerewolf;
    });
  }
  if (obs.role == Role::kWerewolf) {
    return LowestAliveOther(obs, [&](int seat) {
      return obs.KnownRole(seat) != Role::kWerewolf;
    });
  }
  return LowestAliveOther(obs, [](int) { return true; });
}

}  // namespace werewolf
