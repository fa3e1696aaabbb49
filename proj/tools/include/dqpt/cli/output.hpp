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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqpt::cli {

/// Unreadable inputs or outputs that fail validation. Maps to exit code 3.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SeriesRow {
    double t = 0.0;
    double echo = 0.0;
    double overlap_e = 0.0;
    double overlap_ebar = 0.0;
    double overlap_gbar = 0.0;
    double phase = 0.0; // NaN for mixed-state runs
    double rate = 0.0;
};

inline constexpr std::string_view kSeriesHeader =
    "t,echo,overlap_e,overlap_ebar,overlap_gbar,phase,rate";
inline constexpr std::string_view kSurfaceHeader = "axis1,axis2,value";

[[nodiscard]] std::string series_to_csv(const std::vector<SeriesRow> &rows);

/// Throws DataError unless the header matches, every row has seven numeric
/// fields, t is strictly increasing, probabilities lie in [0, 1], the phase
/// is NaN or in [-pi, pi] and the rate is finite and non-negative.
void validate_series_csv(std::string_view csv, std::size_t expected_rows);
/// Throws DataError unless the header matches, the row count is
/// expected_rows and every value lies in [0, 1].
void validate_surface_csv(std::string_view csv, std::size_t expected_rows);

/// File name (relative to the output directory) and contents.
using OutputFile = std::pair<std::string, std::string>;

/// Creates `dir` and writes every file. Throws DataError on I/O failure.
void write_files(const std::filesystem::path &dir, const std::vector<OutputFile> &files);
/// Throws DataError if the file cannot be read.
[[nodiscard]] std::string read_file(const std::filesystem::path &path);

} // namespace dqpt::cli
