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

#ifndef WEREWOLF_TOURNAMENT_VALIDATE_H_
#define WEREWOLF_TOURNAMENT_VALIDATE_H_

#include <string>
#include <vector>

#include "werewolf/tournament/transcript.h"

namespace werewolf {

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation found
};

// Invariant names, in report order.
inline constexpr const char* kCheckSequence = "sequence";
inline constexpr const char* kCheckPhase = "phase_legality";
inline constexpr const char* kCheckLiveness = "liveness";
inline constexpr const char* kCheckConservation = "conservation";
inline constexpr const char* kCheckSingleElimination = "single_elimination";
inline constexpr const char* kCheckWin = "win_soundness";
inline constexpr const char* kCheckTermination = "termination";

struct ValidationReport {
  std::vector<InvariantCheck> checks;
  bool ok() const;
  const InvariantCheck& Get(const std::string& name) const;
};

// Re-derives the game from the transcript alone (roster and roles from the
// header, deaths and votes from the events) and checks it against the rules.
// Independent of the engine, so it can catch engine bugs.
ValidationReport ValidateTranscript(const Transcript& transcript);

}  // namespace werewolf

#endif  // WEREWOLF_TOURNAMENT_VALIDATE_H_
