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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quditsim/linalg.h"

namespace quditsim {

/// Entries with |value| at or below this are not reported.
inline constexpr double kReportThreshold = 1e-10;

enum class OutputMethod { Amplitude, Probability };
enum class OutputType { Print, State };

/// Product of the wire dimensions; CapacityError on overflow.
Index state_dimension(std::span<const Index> dims);

/// Mixed-radix ket label, wire 0 leftmost and most significant: "|120>".
/// Digits are joined with '.' when any wire has more than ten levels.
std::string ket_label(Index index, std::span<const Index> dims);

/// Inverse of the label encoding; IndexError when a digit is out of range.
Index basis_index(std::span<const Index> digits, std::span<const Index> dims);

struct ResultEntry {
    Index index = 0;
    std::string ket;
    /// Amplitude, or a real probability when the set holds probabilities.
    Complex value;
};

struct ResultSet {
    std::vector<ResultEntry> entries;
    OutputMethod value_kind = OutputMethod::Amplitude;
    double load_seconds = 0;
    double execute_seconds = 0;
    /// Complete final state, before report-threshold filtering.
    SparseVector state;
    std::vector<Index> dims;

    /// Same state reported with a different value kind.
    ResultSet as(OutputMethod method) const;
    std::optional<Complex> find(std::string_view ket) const;
    /// Sum of |amplitude|^2 over the full state.
    double norm_squared() const;
};

ResultSet make_result(SparseVector state, std::vector<Index> dims, OutputMethod method = OutputMethod::Amplitude);

/// Shortest round-trip decimal text in Python's repr style ("1.0", "1e-05").
std::string format_real(double x);
/// Real part only when the imaginary part is negligible, else "(a+bj)".
std::string format_value(Complex z);

/// "Build elapsed:" / "Execution elapsed:" lines followed by the ket listing.
std::string render_print(const ResultSet &result, bool with_timings = true);
/// One "index: value" line per reported entry.
std::string render_state(const ResultSet &result);

}  // namespace quditsim
