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

#include "dqpt/circuits/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "dqpt/qcore/error.hpp"

namespace dqpt::circuits {

namespace {

std::string format_angle(double a) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), a);
    return std::string(buf, res.ptr);
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
    throw ParseError("qasm line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Recursive-descent evaluator for angle expressions.
class AngleParser {
  public:
    AngleParser(std::string_view src, std::size_t line) : s_(src), line_(line) {}

    double parse() {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail(line_, "unexpected '" + std::string(s_.substr(pos_)) + "' in angle");
        }
        return v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return primary();
    }
    double primary() {
        skip();
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) {
                fail(line_, "missing ')' in angle");
            }
            return v;
        }
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return kPi;
        }
        double v = 0.0;
        const char *first = s_.data() + pos_;
        const auto res = std::from_chars(first, s_.data() + s_.size(), v);
        if (res.ec != std::errc{} || res.ptr == first) {
            fail(line_, "malformed angle '" + std::string(s_) + "'");
        }
        pos_ += static_cast<std::size_t>(res.ptr - first);
        return v;
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

int parse_qubit(std::string_view tok, int n_qubits, std::size_t line) {
    tok = trim(tok);
    if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
        fail(line, "expected q[k], got '" + std::string(tok) + "'");
    }
    const auto body = tok.substr(2, tok.size() - 3);
    int idx = -1;
    const auto res = std::from_chars(body.data(), body.data() + body.size(), idx);
    if (res.ec != std::errc{} || res.ptr != body.data() + body.size()) {
        fail(line, "bad qubit index '" + std::string(body) + "'");
    }
    if (idx < 0 || idx >= n_qubits) {
        fail(line, "qubit index " + std::to_string(idx) + " out of range");
    }
    return idx;
}

std::vector<std::string_view> split_args(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

std::string export_qasm(const Circuit &c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os << "qreg q[" << c.n_qubits() << "];\n";
    for (const auto &op : c.ops()) {
        if (op.is_barrier()) {
            os << "barrier q;\n";
            continue;
        }
        const auto &g = *op.gate;
        switch (g.kind()) {
        case qcore::GateKind::H:
            os << "h q[" << op.targets[0] << "];\n";
            break;
        case qcore::GateKind::X:
            os << "x q[" << op.targets[0] << "];\n";
            break;
        case qcore::GateKind::Ry:
            os << "ry(" << format_angle(*g.angle()) << ") q[" << op.targets[0] << "];\n";
            break;
        case qcore::GateKind::Rz:
            os << "rz(" << format_angle(*g.angle()) << ") q[" << op.targets[0] << "];\n";
            break;
        case qcore::GateKind::CNOT:
            os << "cx q[" << op.targets[0] << "],q[" << op.targets[1] << "];\n";
            break;
        default:
            throw ExportError("gate '" + g.name() + "' is outside the exportable set {h, x, ry, rz, cx}");
        }
    }
    return os.str();
}

Circuit import_qasm(std::string_view text) {
    std::optional<Circuit> circuit;
    bool saw_header = false;
    std::size_t line_no = 1;
    std::string statement;
    std::size_t stmt_line = 1;

    auto handle = [&](std::string_view st, std::size_t line) {
        st = trim(st);
        if (st.empty()) {
            return;
        }
        if (!saw_header) {
            if (st != "OPENQASM 2.0") {
                fail(line, "expected 'OPENQASM 2.0;' header");
            }
            saw_header = true;
            return;
        }
        if (st.substr(0, 7) == "include") {
            return;
        }
        if (st.substr(0, 4) == "qreg") {
            if (circuit) {
                fail(line, "only one quantum register is supported");
            }
            const auto decl = trim(st.substr(4));
            if (decl.size() < 4 || decl.substr(0, 2) != "q[" || decl.back() != ']') {
                fail(line, "expected 'qreg q[n]'");
            }
            int n = 0;
            const auto body = decl.substr(2, decl.size() - 3);
            const auto res = std::from_chars(body.data(), body.data() + body.size(), n);
            if (res.ec != std::errc{} || n < 1 || n > kMaxQubits) {
                fail(line, "bad register size");
            }
            circuit.emplace(n);
            return;
        }
        if (!circuit) {
            fail(line, "gate before register declaration");
        }
        std::size_t name_end = 0;
        while (name_end < st.size() &&
               (std::isalnum(static_cast<unsigned char>(st[name_end])) != 0)) {
            ++name_end;
        }
        const std::string name(st.substr(0, name_end));
        auto rest = trim(st.substr(name_end));
        std::optional<double> angle;
        if (!rest.empty() && rest.front() == '(') {
            std::size_t close = std::string_view::npos;
            for (std::size_t i = 0, depth = 0; i < rest.size(); ++i) {
                if (rest[i] == '(') {
                    ++depth;
                } else if (rest[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string_view::npos) {
                fail(line, "missing ')'");
            }
            angle = AngleParser(rest.substr(1, close - 1), line).parse();
            rest = trim(rest.substr(close + 1));
        }
        const int n = circuit->n_qubits();
        if (name == "barrier") {
            circuit->barrier();
            return;
        }
        const auto args = split_args(rest);
        auto need = [&](std::size_t n_args, bool want_angle) {
            if (args.size() != n_args) {
                fail(line, "'" + name + "' expects " + std::to_string(n_args) + " qubit(s)");
            }
            if (want_angle != angle.has_value()) {
                fail(line, want_angle ? "'" + name + "' needs an angle"
                                      : "'" + name + "' takes no angle");
            }
        };
        try {
            if (name == "h") {
                need(1, false);
                circuit->add(qcore::Gate::h(), {parse_qubit(args[0], n, line)});
            } else if (name == "x") {
                need(1, false);
                circuit->add(qcore::Gate::x(), {parse_qubit(args[0], n, line)});
            } else if (name == "ry") {
                need(1, true);
                circuit->add(qcore::Gate::ry(*angle), {parse_qubit(args[0], n, line)});
            } else if (name == "rz") {
                need(1, true);
                circuit->add(qcore::Gate::rz(*angle), {parse_qubit(args[0], n, line)});
            } else if (name == "cx") {
                need(2, false);
                circuit->add(qcore::Gate::cnot(),
                             {parse_qubit(args[0], n, line), parse_qubit(args[1], n, line)});
            } else {
                fail(line, "unsupported statement '" + name + "'");
            }
        } catch (const InvalidTarget &e) {
            fail(line, e.what());
        }
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        if (const auto cmt = line.find("//"); cmt != std::string_view::npos) {
            line = line.substr(0, cmt);
        }
        for (char ch : line) {
            if (ch == ';') {
                handle(statement, stmt_line);
                statement.clear();
                continue;
            }
            if (trim(statement).empty()) {
                stmt_line = line_no;
            }
            statement.push_back(ch);
        }
        statement.push_back(' ');
        ++line_no;
        pos = eol + 1;
    }
    if (!trim(statement).empty()) {
        fail(stmt_line, "statement missing ';'");
    }
    if (!circuit) {
        fail(line_no, saw_header ? "no qreg declaration" : "empty program");
    }
    return std::move(*circuit);
}

} // namespace dqpt::circuits
