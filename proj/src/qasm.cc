// Copyright 2026 The quditsim Authors
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

#include "quditsim/qasm.h"

#include <cctype>
#include <map>
#include <optional>

namespace quditsim::qasm {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<Mnemonic> lookup_mnemonic(std::string_view s) {
    if (s == "X") return Mnemonic::X;
    if (s == "H") return Mnemonic::H;
    if (s == "Z") return Mnemonic::Z;
    if (s == "CX") return Mnemonic::CX;
    if (s == "TOF") return Mnemonic::TOF;
    return std::nullopt;
}

std::size_t arity(Mnemonic m) {
    switch (m) {
        case Mnemonic::CX:
            return 2;
        case Mnemonic::TOF:
            return 3;
        default:
            return 1;
    }
}

bool takes_shift(Mnemonic m) { return m != Mnemonic::H && m != Mnemonic::Z; }

using Line = std::span<const Token>;

std::vector<Line> split_lines(std::span<const Token> tokens) {
    std::vector<Line> lines;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= tokens.size(); i++) {
        if (i == tokens.size() || tokens[i].line != tokens[start].line) {
            lines.push_back(tokens.subspan(start, i - start));
            start = i;
        }
    }
    return lines;
}

bool is_directive(const Line &line, std::string_view name) {
    return !line.empty() && line[0].kind == TokenKind::Directive && line[0].text == name;
}

std::string describe(const Token &t) {
    switch (t.kind) {
        case TokenKind::Directive:
            return "'." + t.text + "'";
        case TokenKind::LParen:
            return "'('";
        case TokenKind::RParen:
            return "')'";
        default:
            return "'" + t.text + "'";
    }
}

}  // namespace

QasmError::QasmError(std::size_t line, const std::string &message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string_view mnemonic_name(Mnemonic m) {
    switch (m) {
        case Mnemonic::X:
            return "X";
        case Mnemonic::H:
            return "H";
        case Mnemonic::Z:
            return "Z";
        case Mnemonic::CX:
            return "CX";
        case Mnemonic::TOF:
            return "TOF";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t line_start = 0;
    std::size_t i = 0;
    while (i < source.size()) {
        char c = source[i];
        std::size_t column = i - line_start + 1;
        if (c == '\n') {
            line++;
            line_start = ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            i++;
        } else if (c == '#') {
            while (i < source.size() && source[i] != '\n') {
                i++;
            }
        } else if (c == '(' || c == ')') {
            out.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen, std::string(1, c), 0, line, column});
            i++;
        } else if (c == '.') {
            std::size_t j = i + 1;
            while (j < source.size() && ident_char(source[j])) {
                j++;
            }
            if (j == i + 1) {
                throw QasmError(line, "column " + std::to_string(column) + ": '.' must start a directive");
            }
            out.push_back({TokenKind::Directive, std::string(source.substr(i + 1, j - i - 1)), 0, line, column});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            Index value = 0;
            while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) {
                Index digit = static_cast<Index>(source[j] - '0');
                if (value > (kMaxIndex - digit) / 10) {
                    throw QasmError(line, "column " + std::to_string(column) + ": integer literal too large");
                }
                value = value * 10 + digit;
                j++;
            }
            if (j < source.size() && ident_start(source[j])) {
                throw QasmError(line, "column " + std::to_string(j - line_start + 1) +
                                          ": illegal character '" + std::string(1, source[j]) + "'");
            }
            out.push_back({TokenKind::Int, std::string(source.substr(i, j - i)), value, line, column});
            i = j;
        } else if (ident_start(c)) {
            std::size_t j = i;
            while (j < source.size() && ident_char(source[j])) {
                j++;
            }
            std::string text(source.substr(i, j - i));
            TokenKind kind = text == "qudit" ? TokenKind::Keyword : TokenKind::Ident;
            out.push_back({kind, std::move(text), 0, line, column});
            i = j;
        } else {
            throw QasmError(line, "column " + std::to_string(column) + ": illegal character '" +
                                      std::string(1, c) + "'");
        }
    }
    return out;
}

QasmProgram parse(std::span<const Token> tokens) {
    std::vector<Line> lines = split_lines(tokens);
    QasmProgram program;
    std::size_t next = 0;

    if (lines.empty()) {
        throw QasmError(1, "missing '.qudit N' header");
    }
    const Line &header = lines[next++];
    if (!is_directive(header, "qudit") || header.size() != 2 || header[1].kind != TokenKind::Int) {
        throw QasmError(header[0].line, "expected '.qudit N' header");
    }
    program.declared_count = header[1].value;

    std::map<std::string, Index, std::less<>> dims;
    while (next < lines.size() && lines[next][0].kind == TokenKind::Keyword) {
        const Line &decl = lines[next++];
        std::size_t ln = decl[0].line;
        if (decl.size() != 5 || decl[1].kind != TokenKind::Ident || decl[2].kind != TokenKind::LParen ||
            decl[3].kind != TokenKind::Int || decl[4].kind != TokenKind::RParen) {
            throw QasmError(ln, "expected 'qudit <name> (<dimension>)'");
        }
        if (decl[3].value < 2) {
            throw QasmError(ln, "qudit '" + decl[1].text + "' needs dimension >= 2");
        }
        if (!dims.emplace(decl[1].text, decl[3].value).second) {
            throw QasmError(ln, "qudit '" + decl[1].text + "' declared twice");
        }
        program.declarations.push_back({decl[1].text, decl[3].value, ln});
    }
    if (program.declarations.size() != program.declared_count) {
        throw QasmError(header[0].line, "header declares " + std::to_string(program.declared_count) +
                                            " qudits but " + std::to_string(program.declarations.size()) +
                                            " are declared");
    }

    if (next == lines.size() || !is_directive(lines[next], "begin") || lines[next].size() != 1) {
        std::size_t ln = next < lines.size() ? lines[next][0].line : tokens.back().line + 1;
        throw QasmError(ln, "missing '.begin'");
    }
    next++;

    bool ended = false;
    while (next < lines.size()) {
        const Line &stmt = lines[next++];
        std::size_t ln = stmt[0].line;
        if (is_directive(stmt, "end")) {
            if (stmt.size() != 1) {
                throw QasmError(ln, "unexpected tokens after '.end'");
            }
            ended = true;
            break;
        }
        if (stmt[0].kind != TokenKind::Ident) {
            throw QasmError(ln, "expected a gate mnemonic, got " + describe(stmt[0]));
        }
        auto mnemonic = lookup_mnemonic(stmt[0].text);
        if (!mnemonic) {
            throw QasmError(ln, "unknown gate '" + stmt[0].text + "'");
        }
        GateStmt g;
        g.mnemonic = *mnemonic;
        g.line = ln;
        std::size_t i = 1;
        for (; i < stmt.size() && stmt[i].kind == TokenKind::Ident; i++) {
            g.operands.push_back(stmt[i].text);
        }
        std::optional<Index> shift;
        if (i < stmt.size() && stmt[i].kind == TokenKind::Int) {
            shift = stmt[i++].value;
        }
        if (i < stmt.size()) {
            throw QasmError(ln, "unexpected " + describe(stmt[i]));
        }
        if (g.operands.size() != arity(g.mnemonic)) {
            throw QasmError(ln, std::string(mnemonic_name(g.mnemonic)) + " takes " +
                                    std::to_string(arity(g.mnemonic)) + " operand(s), got " +
                                    std::to_string(g.operands.size()));
        }
        for (std::size_t a = 0; a < g.operands.size(); a++) {
            if (!dims.contains(g.operands[a])) {
                throw QasmError(ln, "undeclared qudit '" + g.operands[a] + "'");
            }
            for (std::size_t b = 0; b < a; b++) {
                if (g.operands[a] == g.operands[b]) {
                    throw QasmError(ln, "qudit '" + g.operands[a] + "' used twice in one gate");
                }
            }
        }
        if (shift) {
            if (!takes_shift(g.mnemonic)) {
                throw QasmError(ln, std::string(mnemonic_name(g.mnemonic)) + " takes no shift");
            }
            Index dim = dims.find(g.operands.back())->second;
            if (*shift < 1 || *shift >= dim) {
                throw QasmError(ln, "shift " + std::to_string(*shift) + " out of range [1, " +
                                        std::to_string(dim - 1) + "] for qudit '" + g.operands.back() + "'");
            }
            g.shift = *shift;
        }
        program.statements.push_back(std::move(g));
    }
    if (!ended) {
        throw QasmError(tokens.back().line + 1, "missing '.end'");
    }
    if (next < lines.size()) {
        throw QasmError(lines[next][0].line, "content after '.end'");
    }
    return program;
}

QasmProgram parse_source(std::string_view source) { return parse(tokenize(source)); }

bool same_structure(const QasmProgram &a, const QasmProgram &b) {
    if (a.declared_count != b.declared_count || a.declarations.size() != b.declarations.size() ||
        a.statements.size() != b.statements.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.declarations.size(); i++) {
        if (a.declarations[i].name != b.declarations[i].name || a.declarations[i].dim != b.declarations[i].dim) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.statements.size(); i++) {
        const auto &x = a.statements[i];
        const auto &y = b.statements[i];
        if (x.mnemonic != y.mnemonic || x.operands != y.operands || x.shift != y.shift) {
            return false;
        }
    }
    return true;
}

std::string emit(const QasmProgram &program) {
    std::string out = ".qudit " + std::to_string(program.declared_count) + "\n";
    for (const auto &d : program.declarations) {
        out += "qudit " + d.name + " (" + std::to_string(d.dim) + ")\n";
    }
    out += ".begin\n";
    for (const auto &s : program.statements) {
        out += mnemonic_name(s.mnemonic);
        for (const auto &op : s.operands) {
            out += " " + op;
        }
        if (takes_shift(s.mnemonic) && s.shift != 1) {
            out += " " + std::to_string(s.shift);
        }
        out += "\n";
    }
    out += ".end\n";
    return out;
}

QuantumCircuit build_circuit(const QasmProgram &program, BackendKind backend) {
    std::vector<Index> dims;
    std::map<std::string, std::size_t, std::less<>> wire;
    for (const auto &d : program.declarations) {
        wire.emplace(d.name, dims.size());
        dims.push_back(d.dim);
    }
    if (dims.empty()) {
        throw QasmError(1, "program declares no qudits");
    }
    QuantumCircuit circuit(dims, {}, backend);
    for (const auto &s : program.statements) {
        std::vector<std::size_t> w;
        for (const auto &op : s.operands) {
            auto it = wire.find(op);
            if (it == wire.end()) {
                throw QasmError(s.line, "undeclared qudit '" + op + "'");
            }
            w.push_back(it->second);
        }
        try {
            switch (s.mnemonic) {
                case Mnemonic::X:
                    circuit.x(w[0], s.shift);
                    break;
                case Mnemonic::H:
                    circuit.h(w[0]);
                    break;
                case Mnemonic::Z:
                    circuit.z(w[0]);
                    break;
                case Mnemonic::CX:
                    circuit.cx({w[0], w[1]}, s.shift);
                    break;
                case Mnemonic::TOF:
                    circuit.toffoli({w[0], w[1], w[2]}, s.shift);
                    break;
            }
        } catch (const QasmError &) {
            throw;
        } catch (const Error &e) {
            throw QasmError(s.line, e.what());
        }
    }
    circuit.measure_all();
    return circuit;
}

}  // namespace quditsim::qasm
