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

#ifndef WEREWOLF_GAME_ERRORS_H_
#define WEREWOLF_GAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace werewolf {

// Invalid GameConfig (role counts, turn counts, name lists).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rule violations raised by the engine. The state is left untouched when one
// of these is thrown, so the caller can re-decide and retry.
class GameError : public std::runtime_error {
 public:
  enum class Kind {
    kIllegalActor,
    kIllegalAction,
    kWrongPhase,
    kUnknownPlayer,
    kGameOver,
  };

  GameError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace werewolf

#endif  // WEREWOLF_GAME_ERRORS_H_
