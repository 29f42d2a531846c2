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


#ifndef FRIENDFOE_TOOLS_SVG_H_
#define FRIENDFOE_TOOLS_SVG_H_

// Static SVG plots with no timestamps or other run-dependent metadata, so
// identical data gives identical bytes.

#include <string>
#include <vector>

namespace friendfoe::cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Panels stacked vertically, one line chart each.
std::string LineChart(const std::vector<Panel>& panels);

// Stacked areas; layers[k][i] is the height of layer k at x[i].
std::string StackChart(const std::string& title, const std::string& x_label,
                       const std::vector<double>& x,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& layers);

// Grid of cells shaded from 0 (white) to 1 (dark). values are row-major with
// the first row drawn at the top.
std::string HeatGrid(const std::string& title, std::size_t rows,
                     std::size_t cols, const std::vector<double>& values,
                     const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels);

}  // namespace friendfoe::cli

#endif  // FRIENDFOE_TOOLS_SVG_H_
