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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quditsim/backend.h"
#include "quditsim/circuit.h"
#include "quditsim/errors.h"

// Reader for the line-oriented qudit assembly dialect:
//
//   .qudit 3
//   qudit x0 (2)
//   qudit x1 (3)
//   qudit x2 (3)
//   .begin
//   H x0
//   CX x0 x1 2
//   .end
//
// '#' starts a comment. Shifts default to 1.

namespace quditsim::qasm {

/// Lexing, parsing or build failure tied to a source line.
class QasmError : public Error {
   public:
    QasmError(std::size_t line, const std::string &message);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

enum class TokenKind { Directive, Keyword, Ident, Int, LParen, RParen };

struct Token {
    TokenKind kind;
    /// Directive name without the dot, identifier or keyword text, digits.
    std::string text;
    Index value = 0;
    std::size_t line = 0;
    std::size_t column = 0;

    bool operator==(const Token &) const = default;
};

std::vector<Token> tokenize(std::string_view source);

enum class Mnemonic { X, H, Z, CX, TOF };

std::string_view mnemonic_name(Mnemonic m);

struct Declaration {
    std::string name;
    Index dim = 0;
    std::size_t line = 0;
};

struct GateStmt {
    Mnemonic mnemonic = Mnemonic::X;
    std::vector<std::string> operands;
    Index shift = 1;
    std::size_t line = 0;
};

struct QasmProgram {
    Index declared_count = 0;
    std::vector<Declaration> declarations;
    std::vector<GateStmt> statements;
};

/// Equal up to source line numbers.
bool same_structure(const QasmProgram &a, const QasmProgram &b);

QasmProgram parse(std::span<const Token> tokens);
QasmProgram parse_source(std::string_view source);

/// Canonical text: one item per line, default shifts omitted.
std::string emit(const QasmProgram &program);

/// Wires follow declaration order and start in |0>; the flow is sealed.
QuantumCircuit build_circuit(const QasmProgram &program, BackendKind backend = BackendKind::Sparse);

}  // namespace quditsim::qasm
