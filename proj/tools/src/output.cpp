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

#include "dqpt/cli/output.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "dqpt/fit/io.hpp"

namespace dqpt::cli {

namespace {

constexpr double kSlack = 1e-9;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? s.size() - start : p - start));
        if (p == std::string_view::npos) {
            return out;
        }
        start = p + 1;
    }
}

std::vector<std::string_view> lines_of(std::string_view csv) {
    if (csv.empty() || csv.back() != '\n') {
        throw DataError("csv must end with a newline");
    }
    auto lines = split(csv.substr(0, csv.size() - 1), '\n');
    return lines;
}

double parse_field(std::string_view field, std::size_t row) {
    const std::string s(field);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw DataError(fmt::format("csv row {}: '{}' is not a number", row, s));
    }
    return v;
}

void require_probability(double v, std::string_view column, std::size_t row) {
    if (!(v >= -kSlack && v <= 1.0 + kSlack)) {
        throw DataError(fmt::format("csv row {}: {} = {} outside [0, 1]", row, column, v));
    }
}

} // namespace

std::string series_to_csv(const std::vector<SeriesRow> &rows) {
    using fit::format_g12;
    std::string out(kSeriesHeader);
    out += '\n';
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", format_g12(r.t), format_g12(r.echo),
                           format_g12(r.overlap_e), format_g12(r.overlap_ebar),
                           format_g12(r.overlap_gbar), format_g12(r.phase), format_g12(r.rate));
    }
    return out;
}

void validate_series_csv(std::string_view csv, std::size_t expected_rows) {
    const auto lines = lines_of(csv);
    if (lines.front() != kSeriesHeader) {
        throw DataError("series csv: unexpected header");
    }
    if (lines.size() - 1 != expected_rows) {
        throw DataError(fmt::format("series csv: {} rows, expected {}", lines.size() - 1,
                                    expected_rows));
    }
    double prev_t = -INFINITY;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto f = split(lines[r], ',');
        if (f.size() != 7) {
            throw DataError(fmt::format("csv row {}: expected 7 fields", r));
        }
        std::array<double, 7> v{};
        for (std::size_t c = 0; c < 7; ++c) {
            v[c] = parse_field(f[c], r);
        }
        if (!(v[0] > prev_t)) {
            throw DataError(fmt::format("csv row {}: t is not strictly increasing", r));
        }
        prev_t = v[0];
        require_probability(v[1], "echo", r);
        require_probability(v[2], "overlap_e", r);
        require_probability(v[3], "overlap_ebar", r);
        require_probability(v[4], "overlap_gbar", r);
        if (!std::isnan(v[5]) && std::abs(v[5]) > std::numbers::pi + kSlack) {
            throw DataError(fmt::format("csv row {}: phase outside [-pi, pi]", r));
        }
        if (!std::isfinite(v[6]) || v[6] < 0.0) {
            throw DataError(fmt::format("csv row {}: rate must be finite and >= 0", r));
        }
    }
}

void validate_surface_csv(std::string_view csv, std::size_t expected_rows) {
    const auto lines = lines_of(csv);
    if (lines.front() != kSurfaceHeader) {
        throw DataError("surface csv: unexpected header");
    }
    if (lines.size() - 1 != expected_rows) {
        throw DataError(fmt::format("surface csv: {} rows, expected {}", lines.size() - 1,
                                    expected_rows));
    }
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto f = split(lines[r], ',');
        if (f.size() != 3) {
            throw DataError(fmt::format("csv row {}: expected 3 fields", r));
        }
        (void)parse_field(f[0], r);
        (void)parse_field(f[1], r);
        require_probability(parse_field(f[2], r), "value", r);
    }
}

void write_files(const std::filesystem::path &dir, const std::vector<OutputFile> &files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw DataError(fmt::format("cannot create {}: {}", dir.string(), ec.message()));
    }
    for (const auto &[name, contents] : files) {
        const auto path = dir / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << contents;
        if (!f) {
            throw DataError("cannot write " + path.string());
        }
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw DataError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace dqpt::cli
