// Copyright 2026 The dqpt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqpt::cli::svg {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Line chart with linear axes, tick labels and a legend. Non-finite points
/// break the line.
[[nodiscard]] std::string line_plot(const std::string &title, const std::string &x_label,
                                    const std::string &y_label, const std::vector<Series> &series);

/// Colour map of values(i, j) = values[i * y.size() + j] with x[i] horizontal
/// and y[j] vertical. Non-finite cells are drawn grey. An optional marker is
/// drawn at `mark` = (x, y).
[[nodiscard]] std::string heatmap(const std::string &title, const std::string &x_label,
                                  const std::string &y_label, const std::vector<double> &x,
                                  const std::vector<double> &y, const std::vector<double> &values,
                                  std::optional<std::pair<double, double>> mark = std::nullopt);

} // namespace dqpt::cli::svg
