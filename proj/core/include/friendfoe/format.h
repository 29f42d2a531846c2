// Copyright 2026 The Friendfoe Authors
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

#ifndef FRIENDFOE_FORMAT_H_
#define FRIENDFOE_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace friendfoe {

// Shortest round-trip decimal representation; "inf", "-inf" and "nan" for
// non-finite values. Locale independent.
std::string FormatNumber(double value);
std::string FormatNumber(const std::optional<double>& value);

// Parses a comma-separated list of numbers, e.g. "0,1,-1,-2".
std::vector<double> ParseNumberList(std::string_view text);

// Evenly spaced values lo, lo + step, ..., up to hi inclusive (within
// step / 2).
std::vector<double> Arange(double lo, double hi, double step);

}  // namespace friendfoe

#endif  // FRIENDFOE_FORMAT_H_
