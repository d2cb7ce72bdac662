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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "quditsim/errors.h"
#include "test_util.h"

using namespace quditsim;
using quditsim::testing::random_dense;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

SparseMatrix pauli_x() { return SparseMatrix::from_dense(DenseMatrix::from_rows({{0, 1}, {1, 0}})); }

SparseMatrix x3_plus1() {
    return SparseMatrix::from_dense(DenseMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
}

DenseMatrix fourier2() { return DenseMatrix::from_rows({{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}); }

DenseMatrix column(const DenseVector &v) { return DenseMatrix(v.size(), 1, v); }

}  // namespace

TEST(linalg, kron_identities) {
    EXPECT_EQ(max_abs_diff(Matrix{kron(identity(2), identity(3))}, Matrix{identity(6)}), 0);
}

TEST(linalg, kron_x_with_identity_permutes) {
    SparseMatrix p = kron(pauli_x(), identity(2));
    ASSERT_EQ(p.rows(), 4u);
    ASSERT_EQ(p.nnz(), 4u);
    // Column i carries its single one at row image[i].
    const Index image[] = {2, 3, 0, 1};
    for (Index i = 0; i < 4; i++) {
        for (Index r = 0; r < 4; r++) {
            EXPECT_EQ(p.at(r, i), Complex(r == image[i] ? 1.0 : 0.0, 0)) << r << "," << i;
        }
    }
}

TEST(linalg, kron_scalar_scales) {
    std::mt19937_64 rng(1);
    DenseMatrix b = random_dense(3, 4, rng);
    Complex c{0.5, -2};
    DenseMatrix out = kron(DenseMatrix(1, 1, {c}), b);
    ASSERT_EQ(out.rows(), 3u);
    ASSERT_EQ(out.cols(), 4u);
    for (Index i = 0; i < 3; i++) {
        for (Index j = 0; j < 4; j++) {
            EXPECT_EQ(out(i, j), c * b(i, j));
        }
    }
}

TEST(linalg, kron_mixed_formats_are_dense) {
    Matrix out = kron(Matrix{identity(2)}, Matrix{fourier2()});
    EXPECT_TRUE(std::holds_alternative<DenseMatrix>(out));
    Matrix sparse = kron(Matrix{identity(2)}, Matrix{pauli_x()});
    EXPECT_TRUE(std::holds_alternative<SparseMatrix>(sparse));
}

TEST(linalg, kron_overflow_is_capacity_error) {
    Index wide = Index{1} << 33;
    SparseMatrix a(1, wide, {0, 0}, {}, {});
    EXPECT_THROW(kron(a, a), CapacityError);
    EXPECT_THROW(checked_mul(Index{1} << 40, Index{1} << 40), CapacityError);
    EXPECT_EQ(checked_mul(3, 7), 21u);
}

TEST(linalg, matmul_examples) {
    std::mt19937_64 rng(2);
    DenseMatrix a = random_dense(4, 4, rng);
    EXPECT_EQ(max_abs_diff(Matrix{matmul(dense_identity(4), a)}, Matrix{a}), 0);
    EXPECT_EQ(max_abs_diff(Matrix{matmul(pauli_x(), pauli_x())}, Matrix{identity(2)}), 0);
    DenseMatrix f = fourier2();
    EXPECT_LT(max_abs_diff(Matrix{matmul(f, dagger(f))}, Matrix{dense_identity(2)}), 1e-12);
}

TEST(linalg, matmul_shape_error) {
    EXPECT_THROW(matmul(identity(2), identity(3)), ShapeError);
    EXPECT_THROW(matmul(dense_identity(2), dense_identity(3)), ShapeError);
    EXPECT_THROW(matvec(identity(2), basis_vector(3, 0)), ShapeError);
}

TEST(linalg, matvec_examples) {
    SparseVector e0 = basis_vector(3, 0);
    EXPECT_EQ(max_abs_diff(Vector{matvec(identity(3), e0)}, Vector{e0}), 0);
    SparseVector out = matvec(x3_plus1(), basis_vector(3, 2));
    ASSERT_EQ(out.nnz(), 1u);
    EXPECT_EQ(out.entries()[0].index, 0u);
    EXPECT_EQ(out.entries()[0].value, Complex(1, 0));
    DenseVector f0 = matvec(fourier2(), DenseVector{1, 0});
    EXPECT_NEAR(f0[0].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(f0[1].real(), kInvSqrt2, 1e-15);
}

TEST(linalg, matvec_prunes_cancellations) {
    // H applied to (1, 1)/sqrt2 cancels the second component exactly or nearly.
    SparseMatrix h = SparseMatrix::from_dense(fourier2());
    SparseVector plus(2, {{0, kInvSqrt2}, {1, kInvSqrt2}});
    SparseVector out = matvec(h, plus);
    EXPECT_EQ(out.nnz(), 1u);
}

TEST(linalg, dagger_examples) {
    EXPECT_EQ(max_abs_diff(Matrix{dagger(identity(3))}, Matrix{identity(3)}), 0);
    Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    SparseMatrix z3 = SparseMatrix::from_triplets(3, 3, {{0, 0, 1}, {1, 1, w}, {2, 2, w * w}});
    SparseMatrix expected =
        SparseMatrix::from_triplets(3, 3, {{0, 0, 1}, {1, 1, std::conj(w)}, {2, 2, std::conj(w * w)}});
    EXPECT_LT(max_abs_diff(Matrix{dagger(z3)}, Matrix{expected}), 1e-15);
    std::mt19937_64 rng(3);
    DenseMatrix a = random_dense(3, 5, rng);
    EXPECT_EQ(max_abs_diff(Matrix{dagger(dagger(a))}, Matrix{a}), 0);
    SparseMatrix sa = SparseMatrix::from_dense(a);
    EXPECT_EQ(max_abs_diff(Matrix{dagger(dagger(sa))}, Matrix{sa}), 0);
    EXPECT_EQ(max_abs_diff(Matrix{dagger(sa)}, Matrix{dagger(a)}), 0);
}

TEST(linalg, constructors) {
    SparseMatrix one = identity(1);
    EXPECT_EQ(one.rows(), 1u);
    EXPECT_EQ(one.at(0, 0), Complex(1, 0));
    SparseVector e = basis_vector(24, 0);
    EXPECT_EQ(e.length(), 24u);
    EXPECT_EQ(e.nnz(), 1u);
    EXPECT_EQ(e.at(0), Complex(1, 0));
    EXPECT_THROW(basis_vector(3, 3), IndexError);
    std::mt19937_64 rng(4);
    Matrix a{random_dense(5, 5, rng)};
    EXPECT_EQ(max_abs_diff(a, a), 0);
    EXPECT_THROW(max_abs_diff(Matrix{identity(2)}, Matrix{identity(3)}), ShapeError);
}

TEST(linalg, sparse_invariants_enforced) {
    EXPECT_THROW(SparseMatrix(2, 2, {0, 2, 2}, {1, 0}, {1, 1}), ShapeError);  // unsorted columns
    EXPECT_THROW(SparseMatrix(2, 2, {0, 1, 3}, {0, 1}, {1, 1}), ShapeError);  // last offset != nnz
    EXPECT_THROW(SparseVector(3, {{2, 1}, {1, 1}}), ShapeError);
    SparseMatrix m = SparseMatrix::from_triplets(2, 2, {{0, 1, 1e-17}, {1, 0, 1}, {1, 0, 1}});
    EXPECT_EQ(m.nnz(), 1u);
    EXPECT_EQ(m.at(1, 0), Complex(2, 0));
}

TEST(linalg, kron_is_associative) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Index> dim(1, 4);
    for (int trial = 0; trial < 40; trial++) {
        DenseMatrix a = random_dense(dim(rng), dim(rng), rng);
        DenseMatrix b = random_dense(dim(rng), dim(rng), rng);
        DenseMatrix c = random_dense(dim(rng), dim(rng), rng);
        EXPECT_LT(max_abs_diff(Matrix{kron(kron(a, b), c)}, Matrix{kron(a, kron(b, c))}), 1e-14);
        SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b),
                     sc = SparseMatrix::from_dense(c);
        EXPECT_LT(max_abs_diff(Matrix{kron(kron(sa, sb), sc)}, Matrix{kron(sa, kron(sb, sc))}), 1e-14);
    }
}

TEST(linalg, sparse_and_dense_kernels_agree) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Index> dim(1, 64);
    std::uniform_real_distribution<double> dens(0.05, 1.0);
    for (int trial = 0; trial < 30; trial++) {
        Index m = dim(rng), n = dim(rng), p = dim(rng);
        DenseMatrix a = random_dense(m, n, rng, dens(rng));
        DenseMatrix b = random_dense(n, p, rng, dens(rng));
        SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
        EXPECT_LT(max_abs_diff(Matrix{matmul(sa, sb)}, Matrix{matmul(a, b)}), 1e-13);

        DenseMatrix v = random_dense(n, 1, rng, dens(rng));
        DenseVector dv(v.data().begin(), v.data().end());
        EXPECT_LT(max_abs_diff(Vector{matvec(sa, SparseVector::from_dense(dv))}, Vector{matvec(a, dv)}), 1e-13);
        EXPECT_LT(max_abs_diff(Vector{matvec(sa, dv)}, Vector{matvec(a, dv)}), 1e-13);

        Index k1 = std::uniform_int_distribution<Index>(1, 8)(rng);
        Index k2 = std::uniform_int_distribution<Index>(1, 8)(rng);
        DenseMatrix c = random_dense(k1, k2, rng, dens(rng));
        DenseMatrix d = random_dense(k2, k1, rng, dens(rng));
        EXPECT_LT(max_abs_diff(Matrix{kron(SparseMatrix::from_dense(c), SparseMatrix::from_dense(d))},
                               Matrix{kron(c, d)}),
                  1e-13);
    }
}

TEST(linalg, factored_matvec_matches_kron) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Index> dim(2, 4);
    for (int trial = 0; trial < 30; trial++) {
        int factors = trial % 2 == 0 ? 2 : 3;
        DenseMatrix big(1, 1, {Complex{1, 0}});
        DenseMatrix vec(1, 1, {Complex{1, 0}});
        DenseMatrix expected(1, 1, {Complex{1, 0}});
        for (int f = 0; f < factors; f++) {
            Index d = dim(rng);
            DenseMatrix a = random_dense(d, d, rng);
            DenseMatrix v = random_dense(d, 1, rng);
            DenseVector dv(v.data().begin(), v.data().end());
            big = kron(big, a);
            vec = kron(vec, v);
            expected = kron(expected, column(matvec(a, dv)));
        }
        ASSERT_LE(big.rows(), 64u);
        DenseVector flat(vec.data().begin(), vec.data().end());
        DenseVector exp(expected.data().begin(), expected.data().end());
        EXPECT_LT(max_abs_diff(Vector{matvec(big, flat)}, Vector{exp}), 1e-12);
        SparseMatrix sbig = SparseMatrix::from_dense(big);
        EXPECT_LT(max_abs_diff(Vector{matvec(sbig, SparseVector::from_dense(flat))}, Vector{exp}), 1e-12);
    }
}

TEST(linalg, apply_local_matches_explicit_kron) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<Index> dim(1, 4);
    for (int trial = 0; trial < 30; trial++) {
        Index left = dim(rng), m = dim(rng) + 1, right = dim(rng);
        DenseMatrix u = random_dense(m, m, rng, 0.6);
        DenseMatrix v = random_dense(left * m * right, 1, rng, 0.5);
        DenseVector dv(v.data().begin(), v.data().end());
        DenseMatrix full = kron(kron(dense_identity(left), u), dense_identity(right));
        DenseVector expected = matvec(full, dv);
        EXPECT_LT(max_abs_diff(Vector{apply_local(u, left, right, dv)}, Vector{expected}), 1e-13);
        EXPECT_LT(max_abs_diff(Vector{apply_local(SparseMatrix::from_dense(u), left, right,
                                                  SparseVector::from_dense(dv))},
                               Vector{expected}),
                  1e-13);
    }
    EXPECT_THROW(apply_local(identity(2), 2, 2, basis_vector(7, 0)), ShapeError);
}
