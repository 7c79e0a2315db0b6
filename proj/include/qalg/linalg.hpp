#ifndef QALG_LINALG_HPP
#define QALG_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qalg {

using Rational = mpq_class;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const {
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (sgn(x) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
            }
        return out;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Basis of the right null space {x : m x = 0}, one column per free
/// variable. Column k has a 1 at free variable k and zeros at the other free
/// variables, so coordinates of a null vector in this basis are read off
/// its free entries.
struct NullSpace {
    Matrix basis;                      // cols() x dim
    std::vector<std::size_t> free_columns;

    std::size_t dim() const noexcept { return free_columns.size(); }

    std::vector<Rational> coordinates(const std::vector<Rational>& v) const {
        std::vector<Rational> out(free_columns.size());
        for (std::size_t k = 0; k < free_columns.size(); ++k) out[k] = v[free_columns[k]];
        return out;
    }
};

inline NullSpace null_space(Matrix m) {
    const std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    NullSpace ns;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) ns.free_columns.push_back(c);
    ns.basis = Matrix(n, ns.free_columns.size());
    for (std::size_t k = 0; k < ns.free_columns.size(); ++k) {
        std::size_t f = ns.free_columns[k];
        ns.basis(f, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) ns.basis(pivots[r], k) = -m(r, f);
    }
    return ns;
}

/// Columns of m (indices) forming a basis of its column space, chosen
/// greedily left to right.
inline std::vector<std::size_t> independent_columns(Matrix m) { return rref(m); }

/// Solves a x = b for one particular solution, or returns false.
inline bool solve(const Matrix& a, const std::vector<Rational>& b, std::vector<Rational>& x) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = rref(aug);
    x.assign(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return false;
        x[pivots[r]] = aug(r, a.cols());
    }
    return true;
}

}  // namespace qalg

#endif
