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

#include "friendfoe/format.h"

#include <array>
#include <charconv>
#include <cmath>

#include "friendfoe/error.h"

namespace friendfoe {

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Avoid "-0" in outputs.
  if (value == 0.0) value = 0.0;
  std::array<char, 64> buffer;
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buffer.data(), end);
}

std::string FormatNumber(const std::optional<double>& value) {
  return value.has_value() ? FormatNumber(*value) : std::string();
}

std::vector<double> ParseNumberList(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    if (item.empty()) {
      if (comma == text.size() && values.empty() && start == 0) break;
      throw Error("empty entry in number list '" + std::string(text) + "'");
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error("cannot parse number '" + std::string(item) + "'");
    }
    values.push_back(v);
    start = comma + 1;
  }
  return values;
}

std::vector<double> Arange(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw Error("invalid range");
  std::vector<double> values;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5));
  values.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double v = lo + static_cast<double>(i) * step;
    // Snap accumulated rounding error, e.g. -3 + 33 * 0.1 -> 0.3.
    v = std::round(v * 1e12) / 1e12;
    values.push_back(v);
  }
  return values;
}

}  // namespace friendfoe
