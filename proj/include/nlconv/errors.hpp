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

#ifndef NLCONV_ERRORS_HPP
#define NLCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nlconv {

/// Bad caller input: malformed settings, out-of-range indices, unknown names.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical precondition failed, e.g. a matrix that should be PSD is not.
class NumericalDomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Post-selection never succeeds for the given input.
class DegenerateOutcome : public std::runtime_error {
   public:
    DegenerateOutcome(const std::string &what, double probability)
        : std::runtime_error(what), probability_(probability) {}
    double probability() const noexcept { return probability_; }

   private:
    double probability_;
};

/// A calibration target cannot be reached inside the requested model family.
class NoSolution : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace nlconv

#endif
