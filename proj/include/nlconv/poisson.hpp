// Copyright 2026 The nlconv Authors
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

#ifndef NLCONV_POISSON_HPP
#define NLCONV_POISSON_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace nlconv {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Sub-seed for a named purpose: mix64(root ^ fnv1a64(purpose)).
std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose);

/// Sub-seed for the index-th independent replica (Monte Carlo samples).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

/// Deterministic Poisson sampler on top of mt19937_64. Means below 30 use
/// sequential inversion; larger means use Hormann's PTRS transformed
/// rejection. Output is reproducible across platforms for a given seed.
class PoissonSampler {
   public:
    static constexpr std::string_view kDescription = "mt19937_64; poisson: inversion (mean<30), PTRS rejection (mean>=30)";

    explicit PoissonSampler(std::uint64_t seed) : engine_(seed) {}

    std::int64_t operator()(double mean);

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

   private:
    std::int64_t inversion(double mean);
    std::int64_t ptrs(double mean);

    std::mt19937_64 engine_;
};

}  // namespace nlconv

#endif
