// Copyright 2026 The mebasis Authors
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

#include "mebasis/qasm_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "mebasis/error.hpp"

namespace mebasis {

namespace {

constexpr std::string_view kHeaderVersion = "OPENQASM 2.0;";
constexpr std::string_view kHeaderInclude = "include \"qelib1.inc\";";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Minimal cursor over one statement.
class Cursor {
  public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    bool eat(std::string_view token) {
        if (text_.substr(0, token.size()) == token) {
            text_.remove_prefix(token.size());
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!eat(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }

    void skip_spaces() {
        while (!text_.empty() && text_.front() == ' ') {
            text_.remove_prefix(1);
        }
    }

    std::string_view identifier() {
        std::size_t len = 0;
        while (len < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[len])) || text_[len] == '_')) {
            ++len;
        }
        auto id = text_.substr(0, len);
        text_.remove_prefix(len);
        return id;
    }

    unsigned number() {
        unsigned value = 0;
        const auto *begin = text_.data();
        const auto *end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            fail("expected an unsigned integer");
        }
        text_.remove_prefix(static_cast<std::size_t>(ptr - begin));
        return value;
    }

    bool done() const { return text_.empty(); }
    std::string_view rest() const { return text_; }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(ErrorCode::SyntaxError, line_, what + " near '" + std::string(text_) + "'");
    }

  private:
    std::string_view text_;
    std::size_t line_;
};

// Parses `q[<i>]` against the declared register.
unsigned qubit_operand(Cursor &cur, std::size_t line, unsigned width) {
    auto reg = cur.identifier();
    if (reg.empty()) {
        cur.fail("expected a qubit operand");
    }
    if (reg != "q") {
        throw ParseError(ErrorCode::RegisterMismatch, line, "unknown register '" + std::string(reg) + "'");
    }
    cur.expect("[");
    const unsigned q = cur.number();
    cur.expect("]");
    if (q >= width) {
        throw ParseError(ErrorCode::RegisterMismatch, line,
                         "index " + std::to_string(q) + " outside q[" + std::to_string(width) + "]");
    }
    return q;
}

}  // namespace

std::string export_qasm(const Circuit &circuit, const std::optional<QasmProvenance> &provenance) {
    const auto lowered = lower_inverted_controls(circuit);
    std::string out;
    out += kHeaderVersion;
    out += '\n';
    out += kHeaderInclude;
    out += '\n';
    if (provenance) {
        out += "// pattern=" + provenance->index.pattern().to_string() + " sign=" + sign_char(provenance->index.sign()) +
               " seed=" + (provenance->seed ? std::to_string(*provenance->seed) : std::string("none")) + "\n";
    }
    out += "qreg q[" + std::to_string(lowered.n_qubits()) + "];\n";
    for (const auto &gate : lowered.gates()) {
        const std::string target = "q[" + std::to_string(gate.target) + "]";
        switch (gate.kind) {
            case GateKind::H: out += "h " + target + ";\n"; break;
            case GateKind::Z: out += "z " + target + ";\n"; break;
            case GateKind::X: out += "x " + target + ";\n"; break;
            case GateKind::CNOT: out += "cx q[" + std::to_string(*gate.control) + "]," + target + ";\n"; break;
        }
    }
    return out;
}

Circuit parse_qasm(std::string_view text) {
    enum class Stage { Version, Include, Register, Body };
    Stage stage = Stage::Version;
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto raw = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.starts_with("//")) {
            continue;
        }
        switch (stage) {
            case Stage::Version:
                if (line != kHeaderVersion) {
                    throw ParseError(ErrorCode::SyntaxError, line_no, "expected 'OPENQASM 2.0;'");
                }
                stage = Stage::Include;
                continue;
            case Stage::Include:
                if (line != kHeaderInclude) {
                    throw ParseError(ErrorCode::SyntaxError, line_no, "expected 'include \"qelib1.inc\";'");
                }
                stage = Stage::Register;
                continue;
            case Stage::Register: {
                Cursor cur(line, line_no);
                if (cur.identifier() != "qreg") {
                    cur.fail("expected a 'qreg' declaration");
                }
                cur.skip_spaces();
                if (cur.identifier() != "q") {
                    throw ParseError(ErrorCode::RegisterMismatch, line_no, "the register must be named 'q'");
                }
                cur.expect("[");
                const unsigned width = cur.number();
                cur.expect("];");
                if (!cur.done()) {
                    cur.fail("trailing text");
                }
                if (width == 0) {
                    throw ParseError(ErrorCode::RegisterMismatch, line_no, "register width must be positive");
                }
                circuit.emplace(width);
                stage = Stage::Body;
                continue;
            }
            case Stage::Body: break;
        }

        Cursor cur(line, line_no);
        const auto name = cur.identifier();
        if (name.empty()) {
            cur.fail("expected a statement");
        }
        if (name == "qreg") {
            throw ParseError(ErrorCode::RegisterMismatch, line_no, "only one quantum register is allowed");
        }
        if (name != "h" && name != "z" && name != "x" && name != "cx") {
            throw ParseError(ErrorCode::UnsupportedGate, line_no, "unsupported statement '" + std::string(name) + "'");
        }
        cur.skip_spaces();
        const unsigned first = qubit_operand(cur, line_no, circuit->n_qubits());
        try {
            if (name == "cx") {
                cur.expect(",");
                cur.skip_spaces();
                const unsigned second = qubit_operand(cur, line_no, circuit->n_qubits());
                cur.expect(";");
                if (!cur.done()) {
                    cur.fail("trailing text");
                }
                circuit->append(Gate::cnot(first, second));
            } else {
                cur.expect(";");
                if (!cur.done()) {
                    cur.fail("trailing text");
                }
                circuit->append(name == "h" ? Gate::h(first) : name == "z" ? Gate::z(first) : Gate::x(first));
            }
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            throw ParseError(ErrorCode::SyntaxError, line_no, e.what());
        }
    }

    if (stage != Stage::Body) {
        const char *missing = stage == Stage::Version   ? "missing 'OPENQASM 2.0;' header"
                              : stage == Stage::Include ? "missing 'include \"qelib1.inc\";' header"
                                                        : "missing 'qreg' declaration";
        throw ParseError(ErrorCode::SyntaxError, line_no, missing);
    }
    return std::move(*circuit);
}

}  // namespace mebasis
