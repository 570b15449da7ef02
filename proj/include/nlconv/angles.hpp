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

#ifndef NLCONV_ANGLES_HPP
#define NLCONV_ANGLES_HPP

#include <string>
#include <string_view>

namespace nlconv {

/// Parses decimal radians ("0.25", "-1e-3") or rational multiples of pi
/// ("pi", "-pi/2", "3pi/8", "3*pi/8"). Throws InvalidArgument otherwise.
double parse_angle(std::string_view text);

/// "Npi/M" when the angle is a small-denominator multiple of pi that parses
/// back to the same double, decimal with 17 significant digits otherwise.
std::string format_angle(double radians);

}  // namespace nlconv

#endif
