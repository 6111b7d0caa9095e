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

#ifndef WEREWOLF_GAME_RNG_H_
#define WEREWOLF_GAME_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace werewolf {

// Seeded match RNG. std::mt19937_64 has a fully specified output sequence;
// the distributions on top of it are written out here (rejection sampling and
// Fisher-Yates) instead of using the std:: distributions, whose outputs are
// implementation defined. Same seed, same draws, on every standard library.
class MatchRng {
 public:
  explicit MatchRng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t UniformIndex(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(UniformIndex(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <typename T>
  const T& Pick(std::span<const T> items) {
    return items[static_cast<std::size_t>(UniformIndex(items.size()))];
  }

  bool operator==(const MatchRng&) const = default;

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent per-seat seeds.
constexpr std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace werewolf

#endif  // WEREWOLF_GAME_RNG_H_
