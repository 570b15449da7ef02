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

#ifndef NLCONV_KERNELS_HPP
#define NLCONV_KERNELS_HPP

// Data-parallel loops shared by the optimizers and the Monte Carlo driver.
// Each kernel has a plain serial reference and an OpenMP version. Both write
// result i into slot i, so reductions done afterwards by the caller are
// bit-identical regardless of thread count.

#include <cstddef>
#include <functional>
#include <vector>

namespace nlconv {

enum class Execution { Serial, Parallel };

namespace kernels {

using IndexValue = std::function<double(std::size_t)>;
using IndexBody = std::function<void(std::size_t)>;

std::vector<double> evaluate_serial(std::size_t n, const IndexValue &f);
std::vector<double> evaluate_parallel(std::size_t n, const IndexValue &f);
std::vector<double> evaluate(std::size_t n, const IndexValue &f, Execution exec);

void for_each_serial(std::size_t n, const IndexBody &body);
void for_each_parallel(std::size_t n, const IndexBody &body);
void for_each(std::size_t n, const IndexBody &body, Execution exec);

/// Index of the first maximum; NaN entries are skipped.
std::size_t argmax_first(const std::vector<double> &values);

/// Threads an OpenMP region would use (1 without OpenMP).
int available_threads();

}  // namespace kernels
}  // namespace nlconv

#endif
