// Copyright 2026 The Kinforge Authors
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

#ifndef KINFORGE_RANDOM_H_
#define KINFORGE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace kinforge {

// Seed splitting scheme.
//
// Every random stream in the generator is keyed by a master seed and a path
// of integer tags (subset k, graph index, purpose, ...). A child seed is
//
//   seed' = SplitMix64(seed ^ SplitMix64(tag + 0x9e3779b97f4a7c15))
//
// applied once per tag, left to right. Streams with different tag paths are
// statistically independent, and the mapping is stable across platforms.
uint64_t SplitMix64(uint64_t x);
uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> tags);

// Portable random source. std::mt19937_64 output is fully specified by the
// standard; the distribution helpers below are implemented here because the
// std:: distributions are not reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t Below(uint64_t bound);

  // Uniform integer in [lo, hi].
  int64_t Between(int64_t lo, int64_t hi);

  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    Shuffle(std::span<T>(items));
  }

  // Moves a uniform sample of `count` elements (without replacement) to the
  // front of `items`, in sampled order.
  template <typename T>
  void PartialShuffle(std::vector<T>& items, size_t count) {
    const size_t n = items.size();
    for (size_t i = 0; i < count && i < n; ++i) {
      std::swap(items[i], items[i + Below(n - i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kinforge

#endif  // KINFORGE_RANDOM_H_
