//
// pschur : dense rectangular matrix with value semantics, row-major storage.
//
#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pschur/scalar.hpp"

namespace pschur {

template <class T>
class Matrix {
public:
    using scalar_type = T;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols), T{}) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != checked_size(rows, cols))
            throw std::invalid_argument("Matrix: entry count does not match dimensions");
        for (const T& v : data_)
            if (!scalar_traits<T>::finite(v))
                throw std::invalid_argument("Matrix: non-finite entry");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows_list) {
        rows_ = rows_list.size();
        cols_ = rows_ ? rows_list.begin()->size() : 0;
        checked_size(rows_, cols_);
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows_list) {
            if (row.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            for (const T& v : row) {
                if (!scalar_traits<T>::finite(v))
                    throw std::invalid_argument("Matrix: non-finite entry");
                data_.push_back(v);
            }
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::from_int(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    const std::vector<T>& entries() const { return data_; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "+");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "-");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: inner dimensions differ in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix scaled(const T& factor) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * factor;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const T& v : data_)
            if (!(v == T{})) return false;
        return true;
    }

    T frobenius_sq() const {
        T acc{};
        for (const T& v : data_) acc += v * v;
        return acc;
    }

    double frobenius() const {
        double acc = 0.0;
        if constexpr (scalar_traits<T>::exact) {
            acc = scalar_traits<T>::to_double(frobenius_sq());
        } else {
            for (const T& v : data_) acc += v * v;
        }
        return std::sqrt(acc);
    }

    double max_abs() const {
        double best = 0.0;
        for (const T& v : data_) best = std::max(best, std::abs(scalar_traits<T>::to_double(v)));
        return best;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_)
            throw std::invalid_argument("Matrix: block exceeds bounds");
        Matrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
        return out;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& sub) {
        if (i0 + sub.rows_ > rows_ || j0 + sub.cols_ > cols_)
            throw std::invalid_argument("Matrix: block exceeds bounds");
        for (std::size_t i = 0; i < sub.rows_; ++i)
            for (std::size_t j = 0; j < sub.cols_; ++j) (*this)(i0 + i, j0 + j) = sub(i, j);
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    static std::size_t checked_size(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
        return rows * cols;
    }

    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
    }
};

template <class T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                   const Matrix<T>& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::invalid_argument("block2x2: blocks do not tile");
    Matrix<T> m(a.rows() + c.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(a.rows(), 0, c);
    m.set_block(a.rows(), a.cols(), d);
    return m;
}

template <class T>
Matrix<double> to_float(const Matrix<T>& m) {
    Matrix<double> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = scalar_traits<T>::to_double(m(i, j));
    return r;
}

template <class T>
double frobenius_distance(const Matrix<T>& a, const Matrix<T>& b) {
    return (a - b).frobenius();
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    return (a - b).max_abs();
}

// relative-Frobenius equality; exact comparison on the exact backend
template <class T>
bool matrices_match(const Matrix<T>& a, const Matrix<T>& b, double eq_tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if constexpr (scalar_traits<T>::exact) {
        (void)eq_tol;
        return a == b;
    } else {
        return frobenius_distance(a, b) <= eq_tol * (1.0 + b.frobenius());
    }
}

// column-vector helpers; the exchange API speaks std::vector
template <class T>
Matrix<T> column(const std::vector<T>& v) {
    Matrix<T> m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

template <class T>
std::vector<T> to_vector(const Matrix<T>& col) {
    std::vector<T> v(col.rows());
    for (std::size_t i = 0; i < col.rows(); ++i) v[i] = col(i, 0);
    return v;
}

template <class T>
Matrix<T> stack_columns(const Matrix<T>& top, const Matrix<T>& bottom) {
    Matrix<T> m(top.rows() + bottom.rows(), 1);
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
}

// worst relative componentwise deviation, for the exchange `verified` flags
template <class T>
double relative_inf_distance(const Matrix<T>& a, const Matrix<T>& b) {
    double num = max_abs_diff(a, b);
    return num / (1.0 + b.max_abs());
}

}  // namespace pschur
