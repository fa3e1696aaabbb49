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

#include "dqpt/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace dqpt::cli::svg {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char *, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                  "#9467bd", "#ff7f0e", "#17becf"};

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finish() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    [[nodiscard]] double frac(double v) const { return (v - lo) / (hi - lo); }
};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string header(const std::string &title) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
        kWidth, kHeight, kLeft + (kWidth - kLeft - kRight) / 2, escape(title));
}

std::string axes(const Range &xr, const Range &yr, const std::string &x_label,
                 const std::string &y_label) {
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    std::string out = fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        kLeft, kTop, pw, ph);
    for (int k = 0; k <= 5; ++k) {
        const double fx = k / 5.0;
        const double x = kLeft + fx * pw;
        const double y = kTop + ph - fx * ph;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" "
                           "stroke=\"black\"/>\n",
                           x, kTop + ph, kTop + ph + 5);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n",
                           x, kTop + ph + 18, xr.lo + fx * (xr.hi - xr.lo));
        out += fmt::format("<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" "
                           "stroke=\"black\"/>\n",
                           kLeft - 5, y, kLeft);
        out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n",
                           kLeft - 8, y + 4, yr.lo + fx * (yr.hi - yr.lo));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2, kHeight - 15, escape(x_label));
    out += fmt::format("<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 18 {0})\">{1}</text>\n",
                       kTop + ph / 2, escape(y_label));
    return out;
}

std::string colour(double f) {
    f = std::clamp(f, 0.0, 1.0);
    // Blue to yellow through teal.
    const auto r = static_cast<int>(std::lround(68 + f * (253 - 68)));
    const auto g = static_cast<int>(std::lround(1 + f * (231 - 1)));
    const auto b = static_cast<int>(std::lround(84 + f * (37 - 84) + 80 * std::sin(f * 3.14159)));
    return fmt::format("#{:02x}{:02x}{:02x}", r, g, std::clamp(b, 0, 255));
}

} // namespace

std::string line_plot(const std::string &title, const std::string &x_label,
                      const std::string &y_label, const std::vector<Series> &series) {
    Range xr;
    Range yr;
    for (const auto &s : series) {
        for (double v : s.x) {
            xr.add(v);
        }
        for (double v : s.y) {
            yr.add(v);
        }
    }
    xr.finish();
    yr.finish();
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    std::string out = header(title) + axes(xr, yr, x_label, y_label);
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto &s = series[k];
        const char *c = kPalette[k % kPalette.size()];
        std::string path;
        bool pen_down = false;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                pen_down = false;
                continue;
            }
            path += fmt::format("{}{:.2f},{:.2f} ", pen_down ? "L" : "M",
                                kLeft + xr.frac(s.x[i]) * pw, kTop + ph - yr.frac(s.y[i]) * ph);
            pen_down = true;
        }
        if (!path.empty()) {
            out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                               path, c);
        }
        const double ly = kTop + 16 + 18 * static_cast<double>(k);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" "
                           "stroke-width=\"2\"/>\n",
                           kWidth - kRight + 12, ly, kWidth - kRight + 36, c);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kWidth - kRight + 42, ly + 4,
                           escape(s.name));
    }
    return out + "</svg>\n";
}

std::string heatmap(const std::string &title, const std::string &x_label,
                    const std::string &y_label, const std::vector<double> &x,
                    const std::vector<double> &y, const std::vector<double> &values,
                    std::optional<std::pair<double, double>> mark) {
    Range xr;
    Range yr;
    Range vr;
    for (double v : x) {
        xr.add(v);
    }
    for (double v : y) {
        yr.add(v);
    }
    for (double v : values) {
        vr.add(v);
    }
    xr.finish();
    yr.finish();
    vr.finish();
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const double cw = pw / static_cast<double>(std::max<std::size_t>(x.size(), 1));
    const double ch = ph / static_cast<double>(std::max<std::size_t>(y.size(), 1));
    // Cells are centred on their sample, so the axes span half a cell beyond the data.
    Range xa = xr;
    Range ya = yr;
    if (x.size() > 1) {
        const double h = (xr.hi - xr.lo) / static_cast<double>(x.size() - 1) / 2;
        xa.lo -= h;
        xa.hi += h;
    }
    if (y.size() > 1) {
        const double h = (yr.hi - yr.lo) / static_cast<double>(y.size() - 1) / 2;
        ya.lo -= h;
        ya.hi += h;
    }
    std::string out = header(title);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double v = values[i * y.size() + j];
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                               "fill=\"{}\"/>\n",
                               kLeft + static_cast<double>(i) * cw,
                               kTop + ph - static_cast<double>(j + 1) * ch, cw + 0.3, ch + 0.3,
                               std::isfinite(v) ? colour(vr.frac(v)) : std::string("#bbbbbb"));
        }
    }
    out += axes(xa, ya, x_label, y_label);
    if (mark) {
        out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"none\" "
                           "stroke=\"red\" stroke-width=\"2\"/>\n",
                           kLeft + xa.frac(mark->first) * pw, kTop + ph - ya.frac(mark->second) * ph);
    }
    for (int k = 0; k <= 10; ++k) {
        const double f = k / 10.0;
        out += fmt::format("<rect x=\"{}\" y=\"{:.2f}\" width=\"20\" height=\"{:.2f}\" "
                           "fill=\"{}\"/>\n",
                           kWidth - kRight + 20, kTop + ph - (f + 0.1) * ph / 1.1, ph / 11 + 0.3,
                           colour(f));
    }
    out += fmt::format("<text x=\"{}\" y=\"{:.2f}\">{:.4g}</text>\n", kWidth - kRight + 46,
                       kTop + ph, vr.lo);
    out += fmt::format("<text x=\"{}\" y=\"{:.2f}\">{:.4g}</text>\n", kWidth - kRight + 46,
                       kTop + 12, vr.hi);
    return out + "</svg>\n";
}

} // namespace dqpt::cli::svg
