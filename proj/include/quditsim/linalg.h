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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace quditsim {

using Complex = std::complex<double>;
using Index = std::uint64_t;

/// Sparse entries with magnitude below this are dropped after arithmetic.
inline constexpr double kPruneThreshold = 1e-15;

/// Largest dimension any matrix or vector may have (fits a signed 64-bit int).
inline constexpr Index kMaxIndex = static_cast<Index>(INT64_MAX);

/// a * b, or CapacityError if the product leaves the index range.
Index checked_mul(Index a, Index b);

/// Row-major dense complex matrix.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    /// Zero-filled rows x cols matrix.
    DenseMatrix(Index rows, Index cols);
    DenseMatrix(Index rows, Index cols, std::vector<Complex> data);

    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    Complex operator()(Index r, Index c) const { return data_[r * cols_ + c]; }
    Complex &operator()(Index r, Index c) { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const { return data_; }
    std::span<Complex> data() { return data_; }

   private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Complex> data_;
};

struct Triplet {
    Index row;
    Index col;
    Complex value;
};

/// Compressed-row sparse complex matrix.
///
/// Column indices are strictly increasing within each row and no stored entry
/// has magnitude below kPruneThreshold.
class SparseMatrix {
   public:
    SparseMatrix() : offsets_{0} {}
    /// Validates the compressed-row invariants; throws ShapeError otherwise.
    SparseMatrix(Index rows, Index cols, std::vector<Index> offsets, std::vector<Index> columns,
                 std::vector<Complex> values);

    /// Builds from unordered triplets. Duplicates are summed, then pruned.
    static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);
    static SparseMatrix from_dense(const DenseMatrix &m);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index nnz() const { return values_.size(); }

    std::span<const Index> offsets() const { return offsets_; }
    std::span<const Index> columns() const { return columns_; }
    std::span<const Complex> values() const { return values_; }

    /// Entry (r, c), zero when not stored.
    Complex at(Index r, Index c) const;
    DenseMatrix to_dense() const;

   private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Index> offsets_;
    std::vector<Index> columns_;
    std::vector<Complex> values_;
};

struct SparseEntry {
    Index index;
    Complex value;
};

/// Sorted-coordinate sparse complex vector.
class SparseVector {
   public:
    SparseVector() = default;
    /// Validates strictly increasing indices below length.
    SparseVector(Index length, std::vector<SparseEntry> entries);

    /// Sorts, merges duplicates and prunes.
    static SparseVector from_unsorted(Index length, std::vector<SparseEntry> entries);
    static SparseVector from_dense(std::span<const Complex> values);

    Index length() const { return length_; }
    Index nnz() const { return entries_.size(); }
    std::span<const SparseEntry> entries() const { return entries_; }

    Complex at(Index i) const;
    std::vector<Complex> to_dense() const;

   private:
    Index length_ = 0;
    std::vector<SparseEntry> entries_;
};

using DenseVector = std::vector<Complex>;

/// A matrix in either storage format. Operations on two sparse operands stay
/// sparse; any dense operand makes the result dense.
using Matrix = std::variant<SparseMatrix, DenseMatrix>;
using Vector = std::variant<SparseVector, DenseVector>;

Index rows(const Matrix &m);
Index cols(const Matrix &m);
/// Stored entries; rows * cols for dense.
Index stored_entries(const Matrix &m);
Index length(const Vector &v);

DenseMatrix to_dense(const Matrix &m);
SparseMatrix to_sparse(const Matrix &m);
DenseVector to_dense(const Vector &v);
SparseVector to_sparse(const Vector &v);

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b);
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
Matrix kron(const Matrix &a, const Matrix &b);

SparseMatrix matmul(const SparseMatrix &a, const SparseMatrix &b);
DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b);
Matrix matmul(const Matrix &a, const Matrix &b);

SparseVector matvec(const SparseMatrix &a, const SparseVector &v);
DenseVector matvec(const DenseMatrix &a, const DenseVector &v);
DenseVector matvec(const SparseMatrix &a, const DenseVector &v);
Vector matvec(const Matrix &a, const Vector &v);

SparseMatrix dagger(const SparseMatrix &a);
DenseMatrix dagger(const DenseMatrix &a);
Matrix dagger(const Matrix &a);

/// Computes (I_left ⊗ u ⊗ I_right) v without forming the Kronecker product.
SparseVector apply_local(const SparseMatrix &u, Index left, Index right, const SparseVector &v);
DenseVector apply_local(const DenseMatrix &u, Index left, Index right, const DenseVector &v);
Vector apply_local(const Matrix &u, Index left, Index right, const Vector &v);

SparseMatrix identity(Index n);
DenseMatrix dense_identity(Index n);
/// e_k of length n; IndexError unless k < n.
SparseVector basis_vector(Index n, Index k);

/// Largest entrywise |a - b|; ShapeError on unequal shapes.
double max_abs_diff(const Matrix &a, const Matrix &b);
double max_abs_diff(const Vector &a, const Vector &b);

}  // namespace quditsim
