/*
   Copyright 2026 The plethyverify authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace plethy {

/// Dense matrix of Scalars, row-major.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_columns(const FieldSpec& f, std::size_t rows,
                               const std::vector<std::vector<Scalar>>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw OutOfRange("Matrix::from_columns: ragged column");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> column(std::size_t j) const {
        std::vector<Scalar> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_ || a.field_ != b.field_)
            throw OutOfRange("Matrix multiply: shape or field mismatch");
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw OutOfRange("Matrix apply: size mismatch");
        std::vector<Scalar> r(rows_, Scalar::zero(field_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

namespace detail {

inline std::size_t rank_u64(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                            std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        const std::uint64_t inv = powmod_u64(a[rank * cols + c], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = a[i * cols + c];
            if (f == 0) continue;
            const std::uint64_t m = mulmod_u64(f, inv, p);
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t s = mulmod_u64(m, a[rank * cols + j], p);
                std::uint64_t& x = a[i * cols + j];
                x = x >= s ? x - s : x + (p - s);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Row-reduce in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact rank over the matrix's own field.
inline std::size_t rank(const Matrix& m) {
    if (m.field().is_prime_field()) {
        std::vector<std::uint64_t> a;
        a.reserve(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j).residue());
        return detail::rank_u64(std::move(a), m.rows(), m.cols(), m.field().prime());
    }
    Matrix c = m;
    return rref(c).size();
}

/// Rank of a matrix over Q. A reduction mod p can only lower the rank, so a
/// full-rank reduction certifies full rank over Q without rational elimination;
/// otherwise fall back to the exact rational path.
inline std::size_t rank_with_certificate(const Matrix& m) {
    if (m.field().is_prime_field()) return rank(m);
    const std::size_t full = std::min(m.rows(), m.cols());
    for (const std::uint64_t p : {2305843009213693951ull, 1152921504606846883ull}) {
        std::vector<std::uint64_t> a;
        a.reserve(m.rows() * m.cols());
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
            for (std::size_t j = 0; j < m.cols() && ok; ++j) {
                const mpq_class& v = m.at(i, j).rational_value();
                const std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
                if (den == 0) {
                    ok = false;
                    break;
                }
                const std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
                a.push_back(detail::mulmod_u64(num, detail::powmod_u64(den, p - 2, p), p));
            }
        if (!ok) continue;
        if (detail::rank_u64(std::move(a), m.rows(), m.cols(), p) == full) return full;
        break;  // deficient mod p: decide exactly below
    }
    return rank(m);
}

/// Basis of the null space; rank-nullity is checked internally.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Matrix r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    if (basis.size() + pivots.size() != m.cols())
        throw OutOfRange("kernel_basis: rank-nullity violation");
    return basis;
}

/// Column-space basis indices (pivot columns of the original matrix).
inline std::vector<std::size_t> image_basis_columns(const Matrix& m) {
    Matrix r = m;
    return rref(r);
}

/// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw OutOfRange("solve: size mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
    return x;
}

}  // namespace plethy
