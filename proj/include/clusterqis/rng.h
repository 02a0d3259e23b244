// Copyright 2026 The clusterqis Authors
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

#ifndef CLUSTERQIS_RNG_H
#define CLUSTERQIS_RNG_H

#include <cstdint>

namespace clusterqis {

// Sampling is driven by explicit 64-bit seeds. Every sampling call consumes
// exactly one seed; callers that need several draws derive independent
// streams with derive_seed(seed, counter). No platform-dependent
// distributions are involved, so transcripts replay bit-exactly everywhere.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed ^ splitmix64(counter + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double uniform01(std::uint64_t seed) {
  return static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53;
}

/// Hands out derive_seed(base, 0), derive_seed(base, 1), ...
class SeedStream {
 public:
  explicit constexpr SeedStream(std::uint64_t base) : base_(base) {}

  constexpr std::uint64_t next() { return derive_seed(base_, counter_++); }
  constexpr std::uint64_t base() const { return base_; }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace clusterqis

#endif  // CLUSTERQIS_RNG_H
