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

#include "quditsim/result.h"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "quditsim/errors.h"

namespace quditsim {

Index state_dimension(std::span<const Index> dims) {
    Index out = 1;
    for (Index d : dims) {
        out = checked_mul(out, d);
    }
    return out;
}

std::string ket_label(Index index, std::span<const Index> dims) {
    Index total = state_dimension(dims);
    if (index >= total) {
        throw IndexError("ket index " + std::to_string(index) + " outside a " + std::to_string(total) +
                         "-dimensional space");
    }
    bool wide = false;
    for (Index d : dims) {
        wide = wide || d > 10;
    }
    std::vector<Index> digits(dims.size());
    for (std::size_t w = dims.size(); w-- > 0;) {
        digits[w] = index % dims[w];
        index /= dims[w];
    }
    std::string out = "|";
    for (std::size_t w = 0; w < digits.size(); w++) {
        if (wide && w > 0) {
            out += '.';
        }
        out += std::to_string(digits[w]);
    }
    out += '>';
    return out;
}

Index basis_index(std::span<const Index> digits, std::span<const Index> dims) {
    if (digits.size() != dims.size()) {
        throw IndexError("expected " + std::to_string(dims.size()) + " digits, got " + std::to_string(digits.size()));
    }
    Index out = 0;
    for (std::size_t w = 0; w < dims.size(); w++) {
        if (digits[w] >= dims[w]) {
            throw IndexError("level " + std::to_string(digits[w]) + " outside wire " + std::to_string(w) +
                             " of dimension " + std::to_string(dims[w]));
        }
        out = checked_mul(out, dims[w]) + digits[w];
    }
    return out;
}

ResultSet make_result(SparseVector state, std::vector<Index> dims, OutputMethod method) {
    ResultSet out;
    out.value_kind = method;
    for (const auto &e : state.entries()) {
        double mag = std::abs(e.value);
        if (mag <= kReportThreshold) {
            continue;
        }
        Complex value = method == OutputMethod::Amplitude ? e.value : Complex{std::norm(e.value), 0};
        if (method == OutputMethod::Probability && value.real() <= kReportThreshold) {
            continue;
        }
        out.entries.push_back({e.index, ket_label(e.index, dims), value});
    }
    out.state = std::move(state);
    out.dims = std::move(dims);
    return out;
}

ResultSet ResultSet::as(OutputMethod method) const {
    ResultSet out = make_result(state, dims, method);
    out.load_seconds = load_seconds;
    out.execute_seconds = execute_seconds;
    return out;
}

std::optional<Complex> ResultSet::find(std::string_view ket) const {
    for (const auto &e : entries) {
        if (e.ket == ket) {
            return e.value;
        }
    }
    return std::nullopt;
}

double ResultSet::norm_squared() const {
    double total = 0;
    for (const auto &e : state.entries()) {
        total += std::norm(e.value);
    }
    return total;
}

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0) {
        return std::signbit(x) ? "-0.0" : "0.0";
    }
    // Shortest round-trip digits, laid out the way Python's repr does.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific);
    std::string sci(buf, res.ptr);
    auto e_pos = sci.find('e');
    int exponent = std::atoi(sci.c_str() + e_pos + 1);
    std::string mantissa = sci.substr(0, e_pos);
    bool negative = mantissa[0] == '-';
    if (negative) {
        mantissa.erase(0, 1);
    }
    std::string digits;
    for (char c : mantissa) {
        if (c != '.') {
            digits += c;
        }
    }
    std::string out;
    if (exponent < -4 || exponent >= 16) {
        out = digits.substr(0, 1);
        if (digits.size() > 1) {
            out += "." + digits.substr(1);
        }
        char exp_buf[16];
        std::snprintf(exp_buf, sizeof(exp_buf), "e%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
        out += exp_buf;
    } else if (exponent < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
        auto int_len = static_cast<std::size_t>(exponent) + 1;
        if (digits.size() <= int_len) {
            out = digits + std::string(int_len - digits.size(), '0') + ".0";
        } else {
            out = digits.substr(0, int_len) + "." + digits.substr(int_len);
        }
    }
    return negative ? "-" + out : out;
}

namespace {

// Complex parts print without the trailing ".0" that real floats carry.
std::string format_part(double x) {
    std::string s = format_real(x);
    if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) {
        s.resize(s.size() - 2);
    }
    return s;
}

}  // namespace

std::string format_value(Complex z) {
    if (std::abs(z.imag()) < kPruneThreshold) {
        return format_real(z.real());
    }
    std::string im = format_part(z.imag());
    if (z.real() == 0 && !std::signbit(z.real())) {
        return im + "j";
    }
    if (im[0] != '-') {
        im = "+" + im;
    }
    return "(" + format_part(z.real()) + im + "j)";
}

std::string render_print(const ResultSet &result, bool with_timings) {
    std::string out;
    if (with_timings) {
        out += "Build elapsed: " + format_real(result.load_seconds) + "s\n";
        out += "Execution elapsed: " + format_real(result.execute_seconds) + "s\n\n";
    }
    out += "[\n";
    for (std::size_t i = 0; i < result.entries.size(); i++) {
        const auto &e = result.entries[i];
        out += "    {'" + e.ket + "': " + format_value(e.value) + "}";
        out += i + 1 < result.entries.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string render_state(const ResultSet &result) {
    std::string out;
    for (const auto &e : result.entries) {
        out += std::to_string(e.index) + ": " + format_value(e.value) + "\n";
    }
    return out;
}

}  // namespace quditsim
