// Copyright 2026 The qss Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace qss {

// Reproducible randomness for dealing shares and drawing test states.
//
// The stream is frozen because share files are golden-tested:
//  * engine: std::mt19937_64 seeded with the 64-bit seed (its output sequence
//    is fixed by the C++ standard);
//  * below(n): rejection sampling on raw 64-bit outputs, no modulo bias;
//  * uniform01(): top 53 bits of one output, scaled to [0, 1);
//  * gaussian(): Box-Muller, cosine branch only, two uniforms per draw.
// std::uniform_int_distribution and std::normal_distribution are not used;
// their algorithms are implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  double uniform01();
  double gaussian();

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace qss
