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

#include "nlconv/kernels.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nlconv::kernels {

std::vector<double> evaluate_serial(std::size_t n, const IndexValue &f) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f(i);
    }
    return out;
}

std::vector<double> evaluate_parallel(std::size_t n, const IndexValue &f) {
    std::vector<double> out(n);
    for_each_parallel(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

std::vector<double> evaluate(std::size_t n, const IndexValue &f, Execution exec) {
    return exec == Execution::Parallel ? evaluate_parallel(n, f) : evaluate_serial(n, f);
}

void for_each_serial(std::size_t n, const IndexBody &body) {
    for (std::size_t i = 0; i < n; ++i) {
        body(i);
    }
}

void for_each_parallel(std::size_t n, const IndexBody &body) {
#if defined(_OPENMP)
    // Exceptions must not escape an OpenMP region; keep the first and rethrow.
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
#else
    for_each_serial(n, body);
#endif
}

void for_each(std::size_t n, const IndexBody &body, Execution exec) {
    if (exec == Execution::Parallel) {
        for_each_parallel(n, body);
    } else {
        for_each_serial(n, body);
    }
}

std::size_t argmax_first(const std::vector<double> &values) {
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::isnan(values[i])) {
            continue;
        }
        if (!found || values[i] > values[best]) {
            best = i;
            found = true;
        }
    }
    return best;
}

int available_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace nlconv::kernels
