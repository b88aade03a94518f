#pragma once

#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/ratfunc.hpp"

namespace heckeforge {

/// Dense matrix over the rational-function field. Everything downstream is
/// desk scale, so no sparsity games: correctness and exactness first.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, rf_zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = rf_one();
        return m;
    }

    static Matrix scalar(std::size_t n, const RatFunc& c) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RatFunc& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RatFunc& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r != c && !at(r, c).is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] + y.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] - y.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = -x.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw RankMismatch("matrix product shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const RatFunc& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const RatFunc& ykj = y.at(k, j);
                    if (ykj.is_zero()) continue;
                    r.at(i, j) += xik * ykj;
                }
            }
        }
        return r;
    }

    Matrix scaled(const RatFunc& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.data_.size(); ++i)
            if (!(x.data_[i] == y.data_[i])) return false;
        return true;
    }

    Matrix specialize(const Bindings& b) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].specialize(b);
        return r;
    }

    /// Kronecker product; the left factor carries the most significant index,
    /// matching lexicographic ordering of tensor-leg bases.
    friend Matrix kron(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) {
                const RatFunc& xij = x.at(i, j);
                if (xij.is_zero()) continue;
                for (std::size_t k = 0; k < y.rows_; ++k)
                    for (std::size_t m = 0; m < y.cols_; ++m) {
                        const RatFunc& ykm = y.at(k, m);
                        if (ykm.is_zero()) continue;
                        r.at(i * y.rows_ + k, j * y.cols_ + m) = xij * ykm;
                    }
            }
        return r;
    }

    /// Integer matrix power; negative powers require the inverse to exist on
    /// the diagonal-monomial fast path or fall back on elimination.
    Matrix power(long e) const;

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw RankMismatch("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<RatFunc> data_;
};

/// Row echelon data of an exact Gaussian elimination.
struct Echelon {
    Matrix reduced;               // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form over the function field. Pivots prefer the
/// lowest-complexity non-zero entry in the current column to limit
/// expression growth.
inline Echelon row_reduce(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_score = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            const std::size_t score = m.at(i, c).complexity();
            if (best == rows || score < best_score) {
                best = i;
                best_score = score;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        const RatFunc inv = m.at(r, c).inv();
        for (std::size_t j = c; j < cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const RatFunc f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix red(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) red.at(i, j) = m.at(i, j);
    return Echelon{std::move(red), std::move(pivots)};
}

inline std::size_t exact_rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Solves X * m = identity via elimination on [m | I].
inline Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw RankMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = rf_one();
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n) throw DivisionByZero("matrix is singular");
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivot_cols[i] != i) throw DivisionByZero("matrix is singular");
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = e.reduced.at(i, n + j);
    return r;
}

inline Matrix Matrix::power(long e) const {
    if (rows_ != cols_) throw RankMismatch("power of non-square matrix");
    if (e == 0) return identity(rows_);
    Matrix base = e > 0 ? *this : invert(*this);
    long n = e > 0 ? e : -e;
    Matrix acc = identity(rows_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

/// Commutator x y - y x.
inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

}  // namespace heckeforge
