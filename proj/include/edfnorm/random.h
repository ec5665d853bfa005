// Copyright 2026 The edfnorm Authors
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

// Seeded random streams.
//
// Every random quantity derives from one user seed. Stream `index` of seed s
// is an mt19937_64 seeded with splitmix64(s ^ splitmix64(index + 1)), so a
// replicate's draws depend only on (seed, replicate index) and never on
// worker count or scheduling. Normals use the inverse transform through
// norm_quantile, so draws are identical across standard libraries.

#ifndef EDFNORM_RANDOM_H_
#define EDFNORM_RANDOM_H_

#include <cstdint>
#include <random>

namespace edfnorm {

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t seed, std::uint64_t index)
      : engine_(derive_seed(seed, index)) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace edfnorm

#endif  // EDFNORM_RANDOM_H_
