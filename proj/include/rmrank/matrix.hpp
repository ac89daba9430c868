#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmrank/errors.hpp"

namespace rmrank {

// Dense matrix over an exact field element type T. T must provide value
// semantics, is_zero(), zero_like()/one_like(), ==, and exact +,-,*,/.
// Works for base-field Scalars and for tower AlgebraElements alike.
template <class T>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), proto_(fill.zero_like()), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, proto.zero_like());
        T one = proto.one_like();
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& proto() const { return proto_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape");
        Matrix r(rows_, o.cols_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (T& x : r.data_) x = x * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix r(row_idx.size(), col_idx.size(), proto_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    std::vector<T> multiply_vector(const std::vector<T>& v) const {
        if (v.size() != cols_) throw ShapeMismatch("matrix-vector product shape");
        std::vector<T> r(rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[ ";
            for (std::size_t j = 0; j < cols_; ++j) s += at(i, j).to_string() + " ";
            s += "]\n";
        }
        return s;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
    }
    std::size_t rows_, cols_;
    T proto_;
    std::vector<T> data_;
};

template <class T>
std::size_t rank(Matrix<T> m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            T factor = m.at(i, col) / m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

enum class DetAlgo { Bareiss, Gauss };

// Fraction-free Bareiss: every intermediate value is a minor of the input,
// which keeps rational and function-field coefficients from exploding.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) throw ShapeMismatch("determinant of empty matrix");
    T prev = m.proto().one_like();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return m.proto();  // singular
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

template <class T>
T det_gauss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) throw ShapeMismatch("determinant of empty matrix");
    T d = m.proto().one_like();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return m.proto();
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            d = -d;
        }
        d = d * m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            T factor = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(k, j);
        }
    }
    return d;
}

template <class T>
T det(const Matrix<T>& m, DetAlgo algo = DetAlgo::Bareiss) {
    return algo == DetAlgo::Bareiss ? det_bareiss(m) : det_gauss(m);
}

// Reduced row-echelon form in place; returns pivot column list.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        T piv_inv = m.at(r, col).one_like() / m.at(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * piv_inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            T factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

// Basis of the row space as the nonzero rows of the RREF.
template <class T>
Matrix<T> row_space_basis(Matrix<T> m) {
    auto pivots = rref(m);
    Matrix<T> basis(pivots.size(), m.cols(), m.proto());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = m.at(i, j);
    return basis;
}

// Rows span {x : m x^T = 0}.
template <class T>
Matrix<T> kernel_basis(Matrix<T> m) {
    std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix<T> basis(free_cols.size(), n, m.proto());
    T one = m.proto().one_like();
    for (std::size_t bi = 0; bi < free_cols.size(); ++bi) {
        std::size_t fc = free_cols[bi];
        basis.at(bi, fc) = one;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(bi, pivots[pi]) = -m.at(pi, fc);
    }
    return basis;
}

// Solves A x = b for square nonsingular A; nullopt when singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) throw ShapeMismatch("solve shape");
    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!a.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        T piv_inv = a.at(k, k).one_like() / a.at(k, k);
        for (std::size_t j = k; j < n; ++j) a.at(k, j) = a.at(k, j) * piv_inv;
        b[k] = b[k] * piv_inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            T factor = a.at(i, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(k, j);
            b[i] = b[i] - factor * b[k];
        }
    }
    return b;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse of non-square matrix");
    std::size_t n = a.rows();
    Matrix<T> work = a;
    Matrix<T> inv = Matrix<T>::identity(n, a.proto());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!work.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return std::nullopt;
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(k, j), work.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        T piv_inv = work.at(k, k).one_like() / work.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(k, j) = work.at(k, j) * piv_inv;
            inv.at(k, j) = inv.at(k, j) * piv_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work.at(i, k).is_zero()) continue;
            T factor = work.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) = work.at(i, j) - factor * work.at(k, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

}  // namespace rmrank
