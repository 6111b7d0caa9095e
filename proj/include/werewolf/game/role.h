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

#ifndef WEREWOLF_GAME_ROLE_H_
#define WEREWOLF_GAME_ROLE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace werewolf {

enum class Role { kVillager = 0, kSeer = 1, kDoctor = 2, kWerewolf = 3 };
inline constexpr int kNumRoles = 4;
inline constexpr std::array<Role, kNumRoles> kAllRoles = {
    Role::kVillager, Role::kSeer, Role::kDoctor, Role::kWerewolf};

enum class Side { kVillagers, kWerewolves };

constexpr Side SideOf(Role role) {
  return role == Role::kWerewolf ? Side::kWerewolves : Side::kVillagers;
}

constexpr int RoleIndex(Role role) { return static_cast<int>(role); }

// Lowercase wire names ("villager", "seer", ...).
std::string_view RoleName(Role role);
// Capitalized names used inside prompts ("Villager", "Seer", ...).
std::string_view RoleDisplayName(Role role);
std::optional<Role> ParseRole(std::string_view name);

std::string_view SideName(Side side);
std::optional<Side> ParseSide(std::string_view name);

}  // namespace werewolf

#endif  // WEREWOLF_GAME_ROLE_H_
