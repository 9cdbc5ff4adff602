#pragma once

// Dense matrices over an exact field (BigRat, RatFunc, ...). Row vectors act
// on the left: the module convention throughout is v -> v * M.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twoside/error.hpp"
#include "twoside/ratfunc.hpp"

namespace twoside {

// Cost used to pick cheap pivots during elimination.
inline std::size_t pivot_cost(const BigRat& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const RatFunc& r) {
    std::size_t bits = 0;
    for (const auto& c : r.num().coeffs()) bits += pivot_cost(c);
    for (const auto& c : r.den().coeffs()) bits += pivot_cost(c);
    return static_cast<std::size_t>(r.num().degree() + r.den().degree()) * 4096 + bits;
}

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows * cols) fail(ErrorKind::Validation, "matrix entry count does not match shape");
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix scalar(std::size_t n, const F& s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail(ErrorKind::Validation, "ragged row in matrix construction");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<F>& entries() const { return e_; }

    Vec<F> row(std::size_t i) const { return Vec<F>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }
    Vec<F> col(std::size_t j) const {
        Vec<F> c(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<Vec<F>> row_list() const {
        std::vector<Vec<F>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::Validation, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::Validation, "matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = c.e_[i] + b.e_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::Validation, "matrix difference shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = c.e_[i] - b.e_[i];
        return c;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.e_) x = s * x;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero_matrix() const {
        for (const auto& x : e_)
            if (!is_zero(x)) return false;
        return true;
    }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> e_;
};

// Row vector times matrix.
template <class F>
Vec<F> operator*(const Vec<F>& v, const Matrix<F>& m) {
    if (v.size() != m.rows()) fail(ErrorKind::Validation, "vector-matrix shape mismatch");
    Vec<F> out(m.cols(), F(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) out[j] = out[j] + v[i] * m(i, j);
    }
    return out;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// Reduced row echelon form.
template <class F>
struct Echelon {
    Matrix<F> rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> echelon(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c)) && (best == m.rows() || pivot_cost(m(i, c)) < pivot_cost(m(best, c)))) best = i;
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return echelon(m).rank();
}

// Basis of {v : m * v = 0}, returned as the columns of a cols x k matrix.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
    Echelon<F> e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<F> k(m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = F(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.rref(r, free[f]);
    }
    return k;
}

// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
template <class F>
Matrix<F> row_space_basis(const Matrix<F>& m) {
    Echelon<F> e = echelon(m);
    Matrix<F> out(e.rank(), m.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = e.rref(i, j);
    return out;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) fail(ErrorKind::Validation, "vstack column mismatch");
    Matrix<F> out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

// Solves m * x = b exactly; std::nullopt when the system is inconsistent.
// With a nontrivial kernel the particular solution has zero free variables.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& b) {
    if (m.rows() != b.rows()) fail(ErrorKind::Validation, "mat_solve: shape mismatch");
    Matrix<F> aug(m.rows(), m.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
    }
    Echelon<F> e = echelon(aug);
    Matrix<F> x(m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t p = e.pivots[r];
        if (p >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.rref(r, m.cols() + j);
    }
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (!m.is_square()) fail(ErrorKind::Validation, "inverse of a non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix<F>::identity(m.rows()));
}

template <class F>
F determinant(Matrix<F> m) {
    if (!m.is_square()) fail(ErrorKind::Validation, "determinant of a non-square matrix");
    F det(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(m(i, c)) && (best == n || pivot_cost(m(i, c)) < pivot_cost(m(best, c)))) best = i;
        if (best == n) return F(0);
        if (best != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
            det = -det;
        }
        det = det * m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!is_zero(m(c, j))) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

// Row space of `sub` contained in the row space of `super`.
template <class F>
bool row_space_contains(const Matrix<F>& super, const Matrix<F>& sub) {
    if (sub.rows() == 0) return true;
    return rank(vstack(super, sub)) == rank(super);
}

using QMatrix = Matrix<BigRat>;
using KMatrix = Matrix<RatFunc>;
using KVec = Vec<RatFunc>;

std::string to_string(const KMatrix& m);

}  // namespace twoside
