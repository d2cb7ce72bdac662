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

#include "quditsim/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "quditsim/errors.h"

namespace quditsim {

namespace {

bool negligible(Complex c) { return std::abs(c) < kPruneThreshold; }

std::string shape_str(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

// Sorts by (row, col), sums duplicates and drops negligible sums.
void canonicalize(std::vector<Triplet> &ts) {
    std::sort(ts.begin(), ts.end(), [](const Triplet &a, const Triplet &b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < ts.size();) {
        Triplet acc = ts[i++];
        while (i < ts.size() && ts[i].row == acc.row && ts[i].col == acc.col) {
            acc.value += ts[i++].value;
        }
        if (!negligible(acc.value)) {
            ts[out++] = acc;
        }
    }
    ts.resize(out);
}

SparseMatrix transpose(const SparseMatrix &a) {
    std::vector<Index> counts(a.cols() + 1, 0);
    for (Index c : a.columns()) {
        counts[c + 1]++;
    }
    for (Index c = 0; c < a.cols(); c++) {
        counts[c + 1] += counts[c];
    }
    std::vector<Index> offsets = counts;
    std::vector<Index> columns(a.nnz());
    std::vector<Complex> values(a.nnz());
    auto off = a.offsets();
    for (Index r = 0; r < a.rows(); r++) {
        for (Index k = off[r]; k < off[r + 1]; k++) {
            Index pos = counts[a.columns()[k]]++;
            columns[pos] = r;
            values[pos] = a.values()[k];
        }
    }
    return SparseMatrix(a.cols(), a.rows(), std::move(offsets), std::move(columns), std::move(values));
}

}  // namespace

Index checked_mul(Index a, Index b) {
    Index out;
    if (__builtin_mul_overflow(a, b, &out) || out > kMaxIndex) {
        throw CapacityError("dimension " + std::to_string(a) + " * " + std::to_string(b) +
                            " exceeds the index range");
    }
    return out;
}

// ---------------------------------------------------------------- DenseMatrix

DenseMatrix::DenseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), data_(checked_mul(rows, cols), Complex{0, 0}) {}

DenseMatrix::DenseMatrix(Index rows, Index cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_mul(rows, cols)) {
        throw ShapeError("dense data length " + std::to_string(data_.size()) + " does not match " +
                         shape_str(rows, cols));
    }
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    Index r = rows.size();
    Index c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> data;
    data.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw ShapeError("ragged rows in matrix literal");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(data));
}

// --------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(Index rows, Index cols, std::vector<Index> offsets, std::vector<Index> columns,
                           std::vector<Complex> values)
    : rows_(rows), cols_(cols), offsets_(std::move(offsets)), columns_(std::move(columns)),
      values_(std::move(values)) {
    if (offsets_.size() != rows_ + 1 || offsets_.front() != 0 || offsets_.back() != columns_.size() ||
        columns_.size() != values_.size()) {
        throw ShapeError("malformed compressed-row offsets for " + shape_str(rows_, cols_));
    }
    for (Index r = 0; r < rows_; r++) {
        if (offsets_[r] > offsets_[r + 1]) {
            throw ShapeError("row offsets are not monotone");
        }
        for (Index k = offsets_[r]; k < offsets_[r + 1]; k++) {
            if (columns_[k] >= cols_ || (k > offsets_[r] && columns_[k] <= columns_[k - 1])) {
                throw ShapeError("column indices must be in range and strictly increasing per row");
            }
        }
    }
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
    for (const auto &t : triplets) {
        if (t.row >= rows || t.col >= cols) {
            throw IndexError("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                             ") outside " + shape_str(rows, cols));
        }
    }
    canonicalize(triplets);
    std::vector<Index> offsets(rows + 1, 0);
    std::vector<Index> columns;
    std::vector<Complex> values;
    columns.reserve(triplets.size());
    values.reserve(triplets.size());
    for (const auto &t : triplets) {
        offsets[t.row + 1]++;
        columns.push_back(t.col);
        values.push_back(t.value);
    }
    for (Index r = 0; r < rows; r++) {
        offsets[r + 1] += offsets[r];
    }
    return SparseMatrix(rows, cols, std::move(offsets), std::move(columns), std::move(values));
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix &m) {
    std::vector<Index> offsets(m.rows() + 1, 0);
    std::vector<Index> columns;
    std::vector<Complex> values;
    for (Index r = 0; r < m.rows(); r++) {
        for (Index c = 0; c < m.cols(); c++) {
            Complex v = m(r, c);
            if (!negligible(v)) {
                columns.push_back(c);
                values.push_back(v);
            }
        }
        offsets[r + 1] = columns.size();
    }
    return SparseMatrix(m.rows(), m.cols(), std::move(offsets), std::move(columns), std::move(values));
}

Complex SparseMatrix::at(Index r, Index c) const {
    if (r >= rows_ || c >= cols_) {
        throw IndexError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                         shape_str(rows_, cols_));
    }
    auto first = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[r]);
    auto last = columns_.begin() + static_cast<std::ptrdiff_t>(offsets_[r + 1]);
    auto it = std::lower_bound(first, last, c);
    if (it == last || *it != c) {
        return {0, 0};
    }
    return values_[static_cast<std::size_t>(it - columns_.begin())];
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix out(rows_, cols_);
    for (Index r = 0; r < rows_; r++) {
        for (Index k = offsets_[r]; k < offsets_[r + 1]; k++) {
            out(r, columns_[k]) = values_[k];
        }
    }
    return out;
}

// --------------------------------------------------------------- SparseVector

SparseVector::SparseVector(Index length, std::vector<SparseEntry> entries)
    : length_(length), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); i++) {
        if (entries_[i].index >= length_ || (i > 0 && entries_[i].index <= entries_[i - 1].index)) {
            throw ShapeError("sparse vector indices must be strictly increasing and below the length");
        }
    }
}

SparseVector SparseVector::from_unsorted(Index length, std::vector<SparseEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry &a, const SparseEntry &b) { return a.index < b.index; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        SparseEntry acc = entries[i++];
        while (i < entries.size() && entries[i].index == acc.index) {
            acc.value += entries[i++].value;
        }
        if (!negligible(acc.value)) {
            entries[out++] = acc;
        }
    }
    entries.resize(out);
    return SparseVector(length, std::move(entries));
}

SparseVector SparseVector::from_dense(std::span<const Complex> values) {
    std::vector<SparseEntry> entries;
    for (Index i = 0; i < values.size(); i++) {
        if (!negligible(values[i])) {
            entries.push_back({i, values[i]});
        }
    }
    return SparseVector(values.size(), std::move(entries));
}

Complex SparseVector::at(Index i) const {
    if (i >= length_) {
        throw IndexError("index " + std::to_string(i) + " outside vector of length " + std::to_string(length_));
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const SparseEntry &e, Index k) { return e.index < k; });
    return (it != entries_.end() && it->index == i) ? it->value : Complex{0, 0};
}

std::vector<Complex> SparseVector::to_dense() const {
    std::vector<Complex> out(length_, Complex{0, 0});
    for (const auto &e : entries_) {
        out[e.index] = e.value;
    }
    return out;
}

// ------------------------------------------------------------ variant helpers

Index rows(const Matrix &m) {
    return std::visit([](const auto &x) { return x.rows(); }, m);
}

Index cols(const Matrix &m) {
    return std::visit([](const auto &x) { return x.cols(); }, m);
}

Index stored_entries(const Matrix &m) {
    if (const auto *s = std::get_if<SparseMatrix>(&m)) {
        return s->nnz();
    }
    const auto &d = std::get<DenseMatrix>(m);
    return d.rows() * d.cols();
}

Index length(const Vector &v) {
    if (const auto *s = std::get_if<SparseVector>(&v)) {
        return s->length();
    }
    return std::get<DenseVector>(v).size();
}

DenseMatrix to_dense(const Matrix &m) {
    if (const auto *s = std::get_if<SparseMatrix>(&m)) {
        return s->to_dense();
    }
    return std::get<DenseMatrix>(m);
}

SparseMatrix to_sparse(const Matrix &m) {
    if (const auto *d = std::get_if<DenseMatrix>(&m)) {
        return SparseMatrix::from_dense(*d);
    }
    return std::get<SparseMatrix>(m);
}

DenseVector to_dense(const Vector &v) {
    if (const auto *s = std::get_if<SparseVector>(&v)) {
        return s->to_dense();
    }
    return std::get<DenseVector>(v);
}

SparseVector to_sparse(const Vector &v) {
    if (const auto *d = std::get_if<DenseVector>(&v)) {
        return SparseVector::from_dense(*d);
    }
    return std::get<SparseVector>(v);
}

// ----------------------------------------------------------------------- kron

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b) {
    Index rows = checked_mul(a.rows(), b.rows());
    Index cols = checked_mul(a.cols(), b.cols());
    Index nnz = checked_mul(a.nnz(), b.nnz());
    std::vector<Index> offsets(rows + 1, 0);
    std::vector<Index> columns;
    std::vector<Complex> values;
    columns.reserve(nnz);
    values.reserve(nnz);
    auto ao = a.offsets();
    auto bo = b.offsets();
    Index row = 0;
    for (Index i = 0; i < a.rows(); i++) {
        for (Index k = 0; k < b.rows(); k++, row++) {
            // Columns come out ordered: outer loop over a's columns, inner over b's.
            for (Index p = ao[i]; p < ao[i + 1]; p++) {
                Index col_base = a.columns()[p] * b.cols();
                Complex av = a.values()[p];
                for (Index q = bo[k]; q < bo[k + 1]; q++) {
                    Complex v = av * b.values()[q];
                    if (!negligible(v)) {
                        columns.push_back(col_base + b.columns()[q]);
                        values.push_back(v);
                    }
                }
            }
            offsets[row + 1] = columns.size();
        }
    }
    return SparseMatrix(rows, cols, std::move(offsets), std::move(columns), std::move(values));
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(checked_mul(a.rows(), b.rows()), checked_mul(a.cols(), b.cols()));
    for (Index i = 0; i < a.rows(); i++) {
        for (Index j = 0; j < a.cols(); j++) {
            Complex av = a(i, j);
            if (av == Complex{0, 0}) {
                continue;
            }
            for (Index k = 0; k < b.rows(); k++) {
                for (Index l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const auto *sa = std::get_if<SparseMatrix>(&a);
    const auto *sb = std::get_if<SparseMatrix>(&b);
    if (sa && sb) {
        return kron(*sa, *sb);
    }
    return kron(to_dense(a), to_dense(b));
}

// --------------------------------------------------------------------- matmul

SparseMatrix matmul(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul of " + shape_str(a.rows(), a.cols()) + " by " + shape_str(b.rows(), b.cols()));
    }
    std::vector<Index> offsets(a.rows() + 1, 0);
    std::vector<Index> columns;
    std::vector<Complex> values;
    auto ao = a.offsets();
    auto bo = b.offsets();
    std::vector<Triplet> row_acc;
    for (Index r = 0; r < a.rows(); r++) {
        row_acc.clear();
        for (Index p = ao[r]; p < ao[r + 1]; p++) {
            Index mid = a.columns()[p];
            Complex av = a.values()[p];
            for (Index q = bo[mid]; q < bo[mid + 1]; q++) {
                row_acc.push_back({r, b.columns()[q], av * b.values()[q]});
            }
        }
        canonicalize(row_acc);
        for (const auto &t : row_acc) {
            columns.push_back(t.col);
            values.push_back(t.value);
        }
        offsets[r + 1] = columns.size();
    }
    return SparseMatrix(a.rows(), b.cols(), std::move(offsets), std::move(columns), std::move(values));
}

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul of " + shape_str(a.rows(), a.cols()) + " by " + shape_str(b.rows(), b.cols()));
    }
    DenseMatrix out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); i++) {
        for (Index k = 0; k < a.cols(); k++) {
            Complex av = a(i, k);
            if (av == Complex{0, 0}) {
                continue;
            }
            for (Index j = 0; j < b.cols(); j++) {
                out(i, j) += av * b(k, j);
            }
        }
    }
    return out;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
    const auto *sa = std::get_if<SparseMatrix>(&a);
    const auto *sb = std::get_if<SparseMatrix>(&b);
    if (sa && sb) {
        return matmul(*sa, *sb);
    }
    return matmul(to_dense(a), to_dense(b));
}

// --------------------------------------------------------------------- matvec

SparseVector matvec(const SparseMatrix &a, const SparseVector &v) {
    if (a.cols() != v.length()) {
        throw ShapeError("matvec of " + shape_str(a.rows(), a.cols()) + " by vector of length " +
                         std::to_string(v.length()));
    }
    // Scatter column-wise from the nonzeros of v through the transpose.
    SparseMatrix at = transpose(a);
    std::vector<SparseEntry> out;
    for (const auto &e : v.entries()) {
        for (Index k = at.offsets()[e.index]; k < at.offsets()[e.index + 1]; k++) {
            out.push_back({at.columns()[k], at.values()[k] * e.value});
        }
    }
    return SparseVector::from_unsorted(a.rows(), std::move(out));
}

DenseVector matvec(const DenseMatrix &a, const DenseVector &v) {
    if (a.cols() != v.size()) {
        throw ShapeError("matvec of " + shape_str(a.rows(), a.cols()) + " by vector of length " +
                         std::to_string(v.size()));
    }
    DenseVector out(a.rows(), Complex{0, 0});
    for (Index i = 0; i < a.rows(); i++) {
        Complex acc{0, 0};
        for (Index j = 0; j < a.cols(); j++) {
            acc += a(i, j) * v[j];
        }
        out[i] = negligible(acc) ? Complex{0, 0} : acc;
    }
    return out;
}

DenseVector matvec(const SparseMatrix &a, const DenseVector &v) {
    if (a.cols() != v.size()) {
        throw ShapeError("matvec of " + shape_str(a.rows(), a.cols()) + " by vector of length " +
                         std::to_string(v.size()));
    }
    DenseVector out(a.rows(), Complex{0, 0});
    for (Index i = 0; i < a.rows(); i++) {
        Complex acc{0, 0};
        for (Index k = a.offsets()[i]; k < a.offsets()[i + 1]; k++) {
            acc += a.values()[k] * v[a.columns()[k]];
        }
        out[i] = negligible(acc) ? Complex{0, 0} : acc;
    }
    return out;
}

Vector matvec(const Matrix &a, const Vector &v) {
    const auto *sa = std::get_if<SparseMatrix>(&a);
    const auto *sv = std::get_if<SparseVector>(&v);
    if (sa && sv) {
        return matvec(*sa, *sv);
    }
    if (sa) {
        return matvec(*sa, std::get<DenseVector>(v));
    }
    return matvec(std::get<DenseMatrix>(a), to_dense(v));
}

// --------------------------------------------------------------------- dagger

SparseMatrix dagger(const SparseMatrix &a) {
    SparseMatrix t = transpose(a);
    std::vector<Complex> values(t.values().begin(), t.values().end());
    for (auto &v : values) {
        v = std::conj(v);
    }
    return SparseMatrix(t.rows(), t.cols(), std::vector<Index>(t.offsets().begin(), t.offsets().end()),
                        std::vector<Index>(t.columns().begin(), t.columns().end()), std::move(values));
}

DenseMatrix dagger(const DenseMatrix &a) {
    DenseMatrix out(a.cols(), a.rows());
    for (Index i = 0; i < a.rows(); i++) {
        for (Index j = 0; j < a.cols(); j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Matrix dagger(const Matrix &a) {
    return std::visit([](const auto &x) -> Matrix { return dagger(x); }, a);
}

// ---------------------------------------------------------------- apply_local

SparseVector apply_local(const SparseMatrix &u, Index left, Index right, const SparseVector &v) {
    Index block = checked_mul(u.cols(), right);
    if (u.rows() != u.cols() || checked_mul(left, block) != v.length()) {
        throw ShapeError("local operator " + shape_str(u.rows(), u.cols()) + " does not fit vector of length " +
                         std::to_string(v.length()));
    }
    SparseMatrix ut = transpose(u);
    std::vector<SparseEntry> out;
    out.reserve(v.nnz());
    for (const auto &e : v.entries()) {
        Index hi = e.index / block;
        Index rem = e.index % block;
        Index g = rem / right;
        Index lo = rem % right;
        for (Index k = ut.offsets()[g]; k < ut.offsets()[g + 1]; k++) {
            out.push_back({hi * block + ut.columns()[k] * right + lo, ut.values()[k] * e.value});
        }
    }
    return SparseVector::from_unsorted(v.length(), std::move(out));
}

DenseVector apply_local(const DenseMatrix &u, Index left, Index right, const DenseVector &v) {
    Index m = u.cols();
    Index block = checked_mul(m, right);
    if (u.rows() != m || checked_mul(left, block) != v.size()) {
        throw ShapeError("local operator " + shape_str(u.rows(), u.cols()) + " does not fit vector of length " +
                         std::to_string(v.size()));
    }
    DenseVector out(v.size(), Complex{0, 0});
    std::vector<Complex> slice(m);
    for (Index hi = 0; hi < left; hi++) {
        for (Index lo = 0; lo < right; lo++) {
            Index base = hi * block + lo;
            for (Index g = 0; g < m; g++) {
                slice[g] = v[base + g * right];
            }
            for (Index r = 0; r < m; r++) {
                Complex acc{0, 0};
                for (Index g = 0; g < m; g++) {
                    acc += u(r, g) * slice[g];
                }
                out[base + r * right] = negligible(acc) ? Complex{0, 0} : acc;
            }
        }
    }
    return out;
}

Vector apply_local(const Matrix &u, Index left, Index right, const Vector &v) {
    const auto *su = std::get_if<SparseMatrix>(&u);
    const auto *sv = std::get_if<SparseVector>(&v);
    if (su && sv) {
        return apply_local(*su, left, right, *sv);
    }
    return apply_local(to_dense(u), left, right, to_dense(v));
}

// ---------------------------------------------------------------- constructors

SparseMatrix identity(Index n) {
    if (n > kMaxIndex) {
        throw CapacityError("identity dimension exceeds the index range");
    }
    std::vector<Index> offsets(n + 1);
    std::vector<Index> columns(n);
    for (Index i = 0; i < n; i++) {
        offsets[i] = i;
        columns[i] = i;
    }
    offsets[n] = n;
    return SparseMatrix(n, n, std::move(offsets), std::move(columns), std::vector<Complex>(n, Complex{1, 0}));
}

DenseMatrix dense_identity(Index n) {
    DenseMatrix out(n, n);
    for (Index i = 0; i < n; i++) {
        out(i, i) = 1;
    }
    return out;
}

SparseVector basis_vector(Index n, Index k) {
    if (k >= n) {
        throw IndexError("basis index " + std::to_string(k) + " out of range for dimension " + std::to_string(n));
    }
    return SparseVector(n, {{k, Complex{1, 0}}});
}

// --------------------------------------------------------------- max_abs_diff

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (rows(a) != rows(b) || cols(a) != cols(b)) {
        throw ShapeError("max_abs_diff of " + shape_str(rows(a), cols(a)) + " and " + shape_str(rows(b), cols(b)));
    }
    const auto *sa = std::get_if<SparseMatrix>(&a);
    const auto *sb = std::get_if<SparseMatrix>(&b);
    double worst = 0;
    if (sa && sb) {
        for (Index r = 0; r < sa->rows(); r++) {
            Index p = sa->offsets()[r], pe = sa->offsets()[r + 1];
            Index q = sb->offsets()[r], qe = sb->offsets()[r + 1];
            while (p < pe || q < qe) {
                Complex d;
                if (q == qe || (p < pe && sa->columns()[p] < sb->columns()[q])) {
                    d = sa->values()[p++];
                } else if (p == pe || sb->columns()[q] < sa->columns()[p]) {
                    d = sb->values()[q++];
                } else {
                    d = sa->values()[p++] - sb->values()[q++];
                }
                worst = std::max(worst, std::abs(d));
            }
        }
        return worst;
    }
    DenseMatrix da = to_dense(a);
    DenseMatrix db = to_dense(b);
    for (Index i = 0; i < da.data().size(); i++) {
        worst = std::max(worst, std::abs(da.data()[i] - db.data()[i]));
    }
    return worst;
}

double max_abs_diff(const Vector &a, const Vector &b) {
    if (length(a) != length(b)) {
        throw ShapeError("max_abs_diff of vectors of length " + std::to_string(length(a)) + " and " +
                         std::to_string(length(b)));
    }
    DenseVector da = to_dense(a);
    DenseVector db = to_dense(b);
    double worst = 0;
    for (Index i = 0; i < da.size(); i++) {
        worst = std::max(worst, std::abs(da[i] - db[i]));
    }
    return worst;
}

}  // namespace quditsim
