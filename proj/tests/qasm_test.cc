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

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace quditsim;
using namespace quditsim::qasm;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sample_source() { return read_file(std::string(QUDITSIM_SOURCE_DIR) + "/circuits/sample.qasm"); }

/// Parses and builds; returns the QasmError raised, failing the test if none.
QasmError expect_error(const std::string &source) {
    try {
        build_circuit(parse_source(source));
    } catch (const QasmError &e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << source;
    return QasmError(0, "none");
}

const char *kHeader = ".qudit 2\nqudit a (2)\nqudit b (3)\n.begin\n";

}  // namespace

TEST(qasm, tokenize_examples) {
    auto t = tokenize(".qudit 3");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].kind, TokenKind::Directive);
    EXPECT_EQ(t[0].text, "qudit");
    EXPECT_EQ(t[1].kind, TokenKind::Int);
    EXPECT_EQ(t[1].value, 3u);

    auto d = tokenize("qudit x0 (2)");
    std::vector<TokenKind> kinds;
    for (const auto &tok : d) {
        kinds.push_back(tok.kind);
    }
    EXPECT_EQ(kinds, (std::vector<TokenKind>{TokenKind::Keyword, TokenKind::Ident, TokenKind::LParen, TokenKind::Int,
                                             TokenKind::RParen}));
    EXPECT_EQ(d[1].text, "x0");
    EXPECT_EQ(d[3].value, 2u);

    EXPECT_TRUE(tokenize("").empty());
    EXPECT_TRUE(tokenize("\n\n   # only a comment\n").empty());
}

TEST(qasm, tokenize_positions_and_errors) {
    auto t = tokenize("# c\n\nX  q0 # trailing\n");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].line, 3u);
    EXPECT_EQ(t[1].column, 4u);
    try {
        tokenize("X q0\nX q$1\n");
        FAIL();
    } catch (const QasmError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("column 4"), std::string::npos) << e.what();
    }
}

TEST(qasm, crlf_and_lf_tokenize_identically) {
    std::string lf = sample_source();
    std::string crlf;
    for (char c : lf) {
        if (c == '\n') {
            crlf += '\r';
        }
        crlf += c;
    }
    EXPECT_EQ(tokenize(lf), tokenize(crlf));
}

TEST(qasm, sample_parses) {
    QasmProgram p = parse_source(sample_source());
    EXPECT_EQ(p.declared_count, 3u);
    ASSERT_EQ(p.declarations.size(), 3u);
    std::vector<Index> dims;
    for (const auto &d : p.declarations) {
        dims.push_back(d.dim);
    }
    EXPECT_EQ(dims, (std::vector<Index>{2, 3, 3}));
    ASSERT_EQ(p.statements.size(), 7u);
    std::vector<Index> shifts;
    for (const auto &s : p.statements) {
        shifts.push_back(s.shift);
    }
    EXPECT_EQ(shifts, (std::vector<Index>{1, 1, 1, 1, 2, 1, 2}));
    EXPECT_EQ(p.statements[6].mnemonic, Mnemonic::CX);
    EXPECT_EQ(p.statements[6].operands, (std::vector<std::string>{"x1", "x2"}));

    QuantumCircuit qc = build_circuit(p);
    EXPECT_EQ(qc.width(), 3u);
    EXPECT_EQ(qc.qregs(), (std::vector<Index>{2, 3, 3}));
    EXPECT_TRUE(qc.sealed());
}

TEST(qasm, sample_runs_deterministically) {
    std::string src = sample_source();
    ResultSet a = build_circuit(parse_source(src)).run();
    ResultSet b = build_circuit(parse_source(src)).run();
    ResultSet c = build_circuit(parse_source(src), BackendKind::Dense).run();
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); i++) {
        EXPECT_EQ(a.entries[i].ket, b.entries[i].ket);
        EXPECT_EQ(a.entries[i].value, b.entries[i].value);
    }
    EXPECT_LT(quditsim::testing::max_diff(a.state.to_dense(), c.state.to_dense()), 1e-12);
    EXPECT_EQ(render_print(a, false), render_print(b, false));
}

TEST(qasm, sample_matches_oracle) {
    QuantumCircuit qc = build_circuit(parse_source(sample_source()));
    ResultSet r = qc.run();
    EXPECT_LT(quditsim::testing::max_diff(r.state.to_dense(), quditsim::testing::oracle_state(qc)), 1e-12);
}

TEST(qasm, header_count_mismatch) {
    QasmError e = expect_error(".qudit 2\nqudit a (2)\nqudit b (2)\nqudit c (2)\n.begin\n.end\n");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("line 1:"), std::string::npos);
}

TEST(qasm, undeclared_operand) {
    QasmError e = expect_error(std::string(kHeader) + "X a\nCX a c\n.end\n");
    EXPECT_EQ(e.line(), 6u);
    EXPECT_NE(std::string(e.what()).find("undeclared"), std::string::npos);
}

TEST(qasm, shift_out_of_range) {
    QasmError e = expect_error(std::string(kHeader) + "CX a b 5\n.end\n");
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    EXPECT_EQ(expect_error(std::string(kHeader) + "X a 2\n.end\n").line(), 5u);
    EXPECT_EQ(expect_error(std::string(kHeader) + "X b 0\n.end\n").line(), 5u);
    EXPECT_NO_THROW(build_circuit(parse_source(std::string(kHeader) + "X b 2\n.end\n")));
}

TEST(qasm, arity_and_shape_errors) {
    EXPECT_EQ(expect_error(std::string(kHeader) + "CX a\n.end\n").line(), 5u);
    EXPECT_EQ(expect_error(std::string(kHeader) + "X a b\n.end\n").line(), 5u);
    EXPECT_EQ(expect_error(std::string(kHeader) + "H b 1\n.end\n").line(), 5u);
    EXPECT_EQ(expect_error(std::string(kHeader) + "Y a\n.end\n").line(), 5u);
    EXPECT_EQ(expect_error(".qudit 1\nqudit a (1)\n.begin\n.end\n").line(), 2u);
    EXPECT_EQ(expect_error(".qudit 2\nqudit a (2)\nqudit a (3)\n.begin\n.end\n").line(), 3u);
}

TEST(qasm, original_typo_lines_rejected) {
    std::string decl = ".qudit 3\nqudit x0 (2)\nqudit x1 (3)\nqudit x2 (3)\n.begin\n";
    QasmError upper = expect_error(decl + "X X2 2\n.end\n");
    EXPECT_EQ(upper.line(), 6u);
    EXPECT_NE(std::string(upper.what()).find("X2"), std::string::npos);
    EXPECT_EQ(expect_error(decl + "CX x1 x1 2\n.end\n").line(), 6u);
}

TEST(qasm, missing_begin_or_end) {
    EXPECT_EQ(expect_error(".qudit 1\nqudit a (2)\nX a\n.end\n").line(), 3u);
    QasmError e = expect_error(".qudit 1\nqudit a (2)\n.begin\nX a\n");
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find(".end"), std::string::npos);
    EXPECT_EQ(expect_error(".qudit 1\nqudit a (2)\n.begin\n.end\nX a\n").line(), 5u);
}

TEST(qasm, empty_body_returns_init_ket) {
    QuantumCircuit qc = build_circuit(parse_source(".qudit 2\nqudit a (2)\nqudit b (5)\n.begin\n.end\n"));
    ResultSet r = qc.run();
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].ket, "|00>");
}

TEST(qasm, toffoli_needs_wide_middle_wire) {
    std::string src = ".qudit 3\nqudit a (2)\nqudit b (2)\nqudit c (2)\n.begin\nX a\nTOF a b c\n.end\n";
    QasmError e = expect_error(src);
    EXPECT_EQ(e.line(), 7u);

    std::string ok = ".qudit 3\nqudit a (2)\nqudit b (3)\nqudit c (2)\n.begin\nX a\nX b\nTOF a b c\n.end\n";
    ResultSet r = build_circuit(parse_source(ok)).run();
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].ket, "|111>");
}

TEST(qasm, identifiers_are_case_sensitive) {
    std::string src = ".qudit 2\nqudit q (2)\nqudit Q (3)\n.begin\nX Q 2\n.end\n";
    ResultSet r = build_circuit(parse_source(src)).run();
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].ket, "|02>");
}

TEST(qasm, emit_round_trip) {
    std::mt19937_64 rng(77);
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const Mnemonic mnemonics[] = {Mnemonic::X, Mnemonic::H, Mnemonic::Z, Mnemonic::CX, Mnemonic::TOF};
    for (int trial = 0; trial < 200; trial++) {
        QasmProgram p;
        std::size_t n = pick(3, 6);
        p.declared_count = n;
        for (std::size_t i = 0; i < n; i++) {
            p.declarations.push_back({"r" + std::to_string(i), pick(3, 7), 0});
        }
        std::size_t m = pick(0, 12);
        for (std::size_t s = 0; s < m; s++) {
            GateStmt g;
            g.mnemonic = mnemonics[pick(0, 4)];
            std::size_t arity = g.mnemonic == Mnemonic::CX ? 2 : g.mnemonic == Mnemonic::TOF ? 3 : 1;
            std::vector<std::size_t> wires(n);
            std::iota(wires.begin(), wires.end(), 0);
            std::shuffle(wires.begin(), wires.end(), rng);
            for (std::size_t a = 0; a < arity; a++) {
                g.operands.push_back(p.declarations[wires[a]].name);
            }
            if (g.mnemonic != Mnemonic::H && g.mnemonic != Mnemonic::Z) {
                g.shift = pick(1, p.declarations[wires[arity - 1]].dim - 1);
            }
            p.statements.push_back(g);
        }
        std::string text = emit(p);
        QasmProgram back = parse_source(text);
        EXPECT_TRUE(same_structure(p, back)) << text;
        EXPECT_EQ(emit(back), text);
    }
}

TEST(qasm, emit_round_trips_the_sample) {
    QasmProgram p = parse_source(sample_source());
    EXPECT_TRUE(same_structure(p, parse_source(emit(p))));
}
