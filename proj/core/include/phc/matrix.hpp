#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phc/rational.hpp"

namespace phc {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix over an exact field scalar (Rational or
// GaussRational). All elimination is plain Gaussian elimination with exact
// division; for the matrix sizes this project handles the coefficient growth
// stays modest because nearly all inputs have small integer entries.
template <typename S>
class MatrixT {
public:
    MatrixT() : rows_(0), cols_(0) {}
    MatrixT(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, S(0)) {}

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const MatrixT& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const MatrixT& o) const { return !(*this == o); }

    MatrixT transpose() const {
        MatrixT t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    MatrixT operator*(const MatrixT& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        MatrixT r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (is_zero(o(k, j))) continue;
                    r(i, j) += a * o(k, j);
                }
            }
        return r;
    }

    MatrixT operator+(const MatrixT& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
        MatrixT r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    MatrixT operator-() const {
        MatrixT r = *this;
        for (auto& v : r.e_) v = -v;
        return r;
    }

    MatrixT operator-(const MatrixT& o) const { return *this + (-o); }

    MatrixT operator*(const S& c) const {
        MatrixT r = *this;
        for (auto& v : r.e_) v = v * c;
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& v : e_)
            if (!is_zero(v)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    // In-place reduced row echelon form. Returns the pivot column of every
    // nonzero row, in order; zero rows sink to the bottom.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && is_zero((*this)(piv, col))) ++piv;
            if (piv == rows_) continue;
            swap_rows(row, piv);
            S inv = (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) / inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const S f = (*this)(i, col);
                if (is_zero(f)) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        MatrixT m = *this;
        return m.rref().size();
    }

    // Basis of the right null space {v : M v = 0}, one vector per row.
    MatrixT kernel() const {
        MatrixT m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::size_t nfree = cols_ - pivots.size();
        MatrixT k(nfree, cols_);
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_; ++col) {
            if (is_pivot[col]) continue;
            k(r, col) = S(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                k(r, pivots[i]) = -m(i, col);
            ++r;
        }
        return k;
    }

    S determinant() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
        MatrixT m = *this;
        S det(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && is_zero(m(piv, col))) ++piv;
            if (piv == rows_) return S(0);
            if (piv != col) {
                m.swap_rows(col, piv);
                det = -det;
            }
            det = det * m(col, col);
            S inv = m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                const S f = m(i, col) / inv;
                if (is_zero(f)) continue;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    MatrixT inverse() const {
        if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
        MatrixT aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = S(1);
        }
        auto pivots = aug.rref();
        if (pivots.size() != rows_ || pivots.back() >= cols_)
            throw SingularMatrix("matrix is singular");
        MatrixT inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        std::vector<S> r(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> e_;
};

using Matrix = MatrixT<Rational>;
using GaussMatrix = MatrixT<GaussRational>;

template <typename S>
std::size_t rank(const MatrixT<S>& m) { return m.rank(); }

}  // namespace phc
