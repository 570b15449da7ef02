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

#include "nlconv/angles.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <regex>

#include "nlconv/errors.hpp"

namespace nlconv {

namespace {

double pi_fraction(long long numerator, long long denominator) {
    return static_cast<double>(numerator) * std::numbers::pi / static_cast<double>(denominator);
}

}  // namespace

double parse_angle(std::string_view text) {
    static const std::regex rational(R"(^\s*([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
    std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, rational)) {
        long long numerator = m[2].length() > 0 ? std::stoll(m[2].str()) : 1;
        long long denominator = m[3].matched ? std::stoll(m[3].str()) : 1;
        if (denominator == 0) {
            throw InvalidArgument("angle '" + s + "' divides by zero");
        }
        if (m[1].str() == "-") {
            numerator = -numerator;
        }
        return pi_fraction(numerator, denominator);
    }
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos) {
        throw InvalidArgument("empty angle");
    }
    std::string trimmed = s.substr(begin, end - begin + 1);
    if (!trimmed.empty() && trimmed[0] == '+') {
        trimmed.erase(0, 1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (ec != std::errc() || ptr != trimmed.data() + trimmed.size() || !std::isfinite(value)) {
        throw InvalidArgument("cannot parse angle '" + s + "' (use radians or Npi/M)");
    }
    return value;
}

std::string format_angle(double radians) {
    if (radians == 0.0) {
        return "0";
    }
    for (long long den = 1; den <= 1000; ++den) {
        double num_real = radians / std::numbers::pi * static_cast<double>(den);
        long long num = std::llround(num_real);
        if (num == 0 || std::abs(num_real - static_cast<double>(num)) > 1e-9 || std::gcd(num, den) != 1) {
            continue;
        }
        if (pi_fraction(num, den) != radians) {
            continue;
        }
        std::string out = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
        out += "pi";
        if (den != 1) {
            out += "/" + std::to_string(den);
        }
        return out;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

}  // namespace nlconv
