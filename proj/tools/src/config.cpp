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

#include "dqpt/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include <fmt/format.h>

#include "dqpt/qcore/error.hpp"

namespace dqpt::cli {

namespace {

constexpr std::array<std::pair<EvolveMode, std::string_view>, 4> kModes = {{
    {EvolveMode::Analytic, "analytic"},
    {EvolveMode::TrotterNoiseless, "trotter-noiseless"},
    {EvolveMode::TrotterNoisy, "trotter-noisy"},
    {EvolveMode::TrotterSampled, "trotter-sampled"},
}};

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out + '"';
}

enum class ValueKind { Number, Bool, String };

struct Value {
    ValueKind kind = ValueKind::Number;
    std::string text; // number literal with underscores removed, or decoded string
    bool flag = false;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Parses one value and checks that only whitespace or a comment follows.
Value parse_value(std::string_view raw, const std::string &where) {
    const auto s = trim(raw);
    if (s.empty()) {
        throw UsageError(where + ": missing value");
    }
    Value v;
    std::size_t pos = 0;
    if (s[0] == '"' || s[0] == '\'') {
        const char q = s[0];
        v.kind = ValueKind::String;
        pos = 1;
        bool closed = false;
        while (pos < s.size()) {
            const char c = s[pos++];
            if (c == q) {
                closed = true;
                break;
            }
            if (c == '\\' && q == '"') {
                if (pos >= s.size()) {
                    break;
                }
                const char e = s[pos++];
                switch (e) {
                case '"': v.text += '"'; break;
                case '\\': v.text += '\\'; break;
                case 'n': v.text += '\n'; break;
                case 't': v.text += '\t'; break;
                default: throw UsageError(where + ": unsupported escape \\" + std::string(1, e));
                }
            } else {
                v.text += c;
            }
        }
        if (!closed) {
            throw UsageError(where + ": unterminated string");
        }
    } else {
        const auto end = s.find_first_of(" \t#");
        const auto token = s.substr(0, end);
        pos = token.size();
        if (token == "true" || token == "false") {
            v.kind = ValueKind::Bool;
            v.flag = token == "true";
        } else {
            v.kind = ValueKind::Number;
            for (char c : token) {
                if (c != '_') {
                    v.text += c;
                }
            }
        }
    }
    const auto rest = trim(s.substr(pos));
    if (!rest.empty() && rest[0] != '#') {
        throw UsageError(where + ": unexpected text after value: " + std::string(rest));
    }
    return v;
}

double to_double(const Value &v, const std::string &where) {
    if (v.kind != ValueKind::Number) {
        throw UsageError(where + ": expected a number");
    }
    const std::string &t = v.text;
    if (t == "inf" || t == "+inf" || t == "-inf" || t == "nan" || t == "+nan" || t == "-nan") {
        throw UsageError(where + ": value must be finite");
    }
    const char *first = t.data() + (t.starts_with('+') ? 1 : 0);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError(where + ": not a number: " + t);
    }
    return out;
}

template <typename Int> Int to_integer(const Value &v, const std::string &where) {
    if (v.kind != ValueKind::Number) {
        throw UsageError(where + ": expected an integer");
    }
    const std::string &t = v.text;
    const char *first = t.data() + (t.starts_with('+') ? 1 : 0);
    Int out{};
    auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError(where + ": not an integer in range: " + t);
    }
    return out;
}

bool to_bool(const Value &v, const std::string &where) {
    if (v.kind != ValueKind::Bool) {
        throw UsageError(where + ": expected true or false");
    }
    return v.flag;
}

std::string to_text(const Value &v, const std::string &where) {
    if (v.kind != ValueKind::String) {
        throw UsageError(where + ": expected a quoted string");
    }
    return v.text;
}

struct Field {
    std::string_view key;
    std::function<std::optional<std::string>(const RunConfig &)> write;
    std::function<void(RunConfig &, const Value &, const std::string &)> read;
};

template <typename T> Field number_field(std::string_view key, T RunConfig::*member) {
    return {key,
            [member](const RunConfig &c) -> std::optional<std::string> {
                if constexpr (std::is_floating_point_v<T>) {
                    return format_double(c.*member);
                } else {
                    return std::to_string(c.*member);
                }
            },
            [member](RunConfig &c, const Value &v, const std::string &where) {
                if constexpr (std::is_floating_point_v<T>) {
                    c.*member = to_double(v, where);
                } else {
                    c.*member = to_integer<T>(v, where);
                }
            }};
}

Field bool_field(std::string_view key, bool RunConfig::*member) {
    return {key,
            [member](const RunConfig &c) -> std::optional<std::string> {
                return c.*member ? "true" : "false";
            },
            [member](RunConfig &c, const Value &v, const std::string &where) {
                c.*member = to_bool(v, where);
            }};
}

Field string_field(std::string_view key, std::string RunConfig::*member) {
    return {key,
            [member](const RunConfig &c) -> std::optional<std::string> { return quote(c.*member); },
            [member](RunConfig &c, const Value &v, const std::string &where) {
                c.*member = to_text(v, where);
            }};
}

const std::vector<Field> &fields() {
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back(number_field("m", &RunConfig::m));
        f.push_back(number_field("J", &RunConfig::J));
        f.push_back(number_field("dt", &RunConfig::dt));
        f.push_back(number_field("steps", &RunConfig::steps));
        f.push_back({"mode",
                     [](const RunConfig &c) -> std::optional<std::string> {
                         return quote(to_string(c.mode));
                     },
                     [](RunConfig &c, const Value &v, const std::string &where) {
                         c.mode = evolve_mode_from_string(to_text(v, where));
                     }});
        f.push_back({"preset",
                     [](const RunConfig &c) -> std::optional<std::string> {
                         return quote(noise::to_string(c.preset));
                     },
                     [](RunConfig &c, const Value &v, const std::string &where) {
                         try {
                             c.preset = noise::preset_from_string(to_text(v, where));
                         } catch (const InvalidParams &e) {
                             throw UsageError(where + ": " + e.what());
                         }
                     }});
        f.push_back(number_field("p1", &RunConfig::p1));
        f.push_back(number_field("p2", &RunConfig::p2));
        f.push_back(number_field("py", &RunConfig::py));
        f.push_back({"readout_flip",
                     [](const RunConfig &c) -> std::optional<std::string> {
                         if (!c.readout_flip) {
                             return std::nullopt;
                         }
                         return format_double(*c.readout_flip);
                     },
                     [](RunConfig &c, const Value &v, const std::string &where) {
                         c.readout_flip = to_double(v, where);
                     }});
        f.push_back(bool_field("reset_flips", &RunConfig::reset_flips));
        f.push_back(number_field("noise_scale", &RunConfig::noise_scale));
        f.push_back(number_field("realizations", &RunConfig::realizations));
        f.push_back(number_field("shots", &RunConfig::shots));
        f.push_back(number_field("seed", &RunConfig::seed));
        f.push_back(number_field("workers", &RunConfig::workers));
        f.push_back(string_field("out", &RunConfig::out));
        f.push_back(bool_field("plots", &RunConfig::plots));
        f.push_back(string_field("target", &RunConfig::target));
        f.push_back({"fit_method",
                     [](const RunConfig &c) -> std::optional<std::string> {
                         return quote(c.fit_method == fit::SweepMethod::Exact ? "exact" : "sampled");
                     },
                     [](RunConfig &c, const Value &v, const std::string &where) {
                         const auto s = to_text(v, where);
                         if (s == "exact") {
                             c.fit_method = fit::SweepMethod::Exact;
                         } else if (s == "sampled") {
                             c.fit_method = fit::SweepMethod::Sampled;
                         } else {
                             throw UsageError(where + ": fit_method must be exact or sampled");
                         }
                     }});
        f.push_back(number_field("k", &RunConfig::k));
        f.push_back(number_field("grid_start1", &RunConfig::grid_start1));
        f.push_back(number_field("grid_start2", &RunConfig::grid_start2));
        f.push_back(number_field("grid_step", &RunConfig::grid_step));
        f.push_back(number_field("grid_count", &RunConfig::grid_count));
        f.push_back(number_field("J_min", &RunConfig::J_min));
        f.push_back(number_field("J_max", &RunConfig::J_max));
        f.push_back(number_field("J_count", &RunConfig::J_count));
        f.push_back(number_field("t_min", &RunConfig::t_min));
        f.push_back(number_field("t_max", &RunConfig::t_max));
        f.push_back(number_field("t_step", &RunConfig::t_step));
        f.push_back(bool_field("moments", &RunConfig::moments));
        return f;
    }();
    return table;
}

bool valid_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

} // namespace

std::string_view to_string(EvolveMode m) noexcept {
    for (const auto &[mode, name] : kModes) {
        if (mode == m) {
            return name;
        }
    }
    return "analytic";
}

EvolveMode evolve_mode_from_string(std::string_view s) {
    for (const auto &[mode, name] : kModes) {
        if (name == s) {
            return mode;
        }
    }
    throw UsageError(fmt::format(
        "unknown mode '{}' (expected analytic, trotter-noiseless, trotter-noisy, trotter-sampled)",
        s));
}

schwinger::ModelParams RunConfig::params() const {
    schwinger::ModelParams p;
    p.m = m;
    p.J = J;
    return p;
}

noise::NoiseModelSpec RunConfig::noise_model() const {
    auto nm = noise::NoiseModelSpec::from_axes(preset, p1, p2, py);
    if (readout_flip) {
        nm.readout_flip = *readout_flip;
    }
    nm.reset_flips = reset_flips;
    return nm.scaled(noise_scale);
}

void RunConfig::validate() const {
    auto require = [](bool ok, std::string_view msg) {
        if (!ok) {
            throw UsageError(std::string(msg));
        }
    };
    require(std::isfinite(m) && std::isfinite(J) && J >= 0.0, "J must be finite and >= 0");
    require(m > 0.0, "m must be > 0");
    require(dt > 0.0 && std::isfinite(dt), "dt must be > 0");
    require(steps >= 0, "steps must be >= 0");
    require(noise_scale >= 0.0, "noise_scale must be >= 0");
    require(realizations >= 1, "realizations must be >= 1");
    require(shots >= 1, "shots must be >= 1");
    require(k >= 1, "k must be >= 1");
    require(grid_step > 0.0, "grid_step must be > 0");
    require(grid_count >= 1, "grid_count must be >= 1");
    require(J_count >= 2 && J_max > J_min, "J window needs J_max > J_min and J_count >= 2");
    require(t_step > 0.0 && t_max > t_min && t_min >= 0.0,
            "t window needs 0 <= t_min < t_max and t_step > 0");
    require(!out.empty(), "out must not be empty");
    try {
        noise_model().validate();
    } catch (const InvalidProbability &e) {
        throw UsageError(std::string("noise model: ") + e.what());
    }
}

std::string RunConfig::to_toml() const {
    std::string out;
    for (const auto &f : fields()) {
        if (const auto v = f.write(*this)) {
            out += fmt::format("{} = {}\n", f.key, *v);
        }
    }
    return out;
}

RunConfig RunConfig::from_toml(std::string_view text, const RunConfig &base) {
    RunConfig c = base;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto line = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                          : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::string where = fmt::format("config line {}", line_no);
        const auto s = trim(line);
        if (s.empty() || s[0] == '#') {
            continue;
        }
        if (s[0] == '[') {
            throw UsageError(where + ": tables are not supported, keys must be flat");
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError(where + ": expected key = value");
        }
        const auto key = trim(s.substr(0, eq));
        if (key.empty() || !std::all_of(key.begin(), key.end(), valid_key_char)) {
            throw UsageError(where + ": invalid key '" + std::string(key) + "'");
        }
        const auto it = std::find_if(fields().begin(), fields().end(),
                                     [&](const Field &f) { return f.key == key; });
        if (it == fields().end()) {
            throw UsageError(where + ": unknown key '" + std::string(key) + "'");
        }
        if (!seen.emplace(key).second) {
            throw UsageError(where + ": duplicate key '" + std::string(key) + "'");
        }
        it->read(c, parse_value(s.substr(eq + 1), where + " (" + std::string(key) + ")"),
                 where + " (" + std::string(key) + ")");
    }
    return c;
}

RunConfig RunConfig::from_toml(std::string_view text) { return from_toml(text, RunConfig{}); }

} // namespace dqpt::cli
