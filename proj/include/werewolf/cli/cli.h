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

#ifndef WEREWOLF_CLI_CLI_H_
#define WEREWOLF_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "werewolf/tournament/tournament.h"

namespace werewolf {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMissingCredential = 3;

// Builds a per-match backend from a --backend value:
//   scripted        deterministic offline stand-in for a language model
//   http            OpenAI-compatible endpoint (WEREWOLF_API_KEY, _BASE)
//   cassette:PATH   replay; PATH is a cassette file or a directory holding
//                   <game_id>.cassette.jsonl files
// With a non-empty `record_dir`, every match's traffic is also recorded to
// record_dir/<game_id>.cassette.jsonl. Throws BackendConfigError for a bad
// spec or a missing credential.
BackendFactory MakeBackendFactory(const std::string& spec, std::uint64_t seed,
                                  const std::filesystem::path& record_dir);

// Runs one command line (argv without the program name). Progress goes to
// `err`; short machine-readable results to `out`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace werewolf

#endif  // WEREWOLF_CLI_CLI_H_
