//
// pschur : small worked instances wired into the verification suite.
//
// example1: 3x3, split (2,2). The exchange pair {incl_B_A, incl_Ct_At}
// holds but the D-side pair fails (D = 0, C != 0), so H+ != J — the
// counterexample showing the trailing-side inclusions are not removable.
//
// example2: 4x4, split (2,2). All four A-side inclusions hold, so the
// via-F formula reproduces the true pseudoinverse.
//
// carlson_violator: 3x3, split (2,2). Neither R(B) in R(A) nor
// R(Ct) in R(At); D - C X B sweeps -w12 over the {1}-inverses
// X = A+ + W - A+ A W A A+, so the generalized Schur complement is not
// invariant here.
//
#pragma once

#include "pschur/block.hpp"

namespace pschur {

namespace detail {

template <class T>
Matrix<T> from_ints(std::size_t rows, std::size_t cols,
                    std::initializer_list<long long> vals) {
    Matrix<T> m(rows, cols);
    auto it = vals.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_traits<T>::from_int(*it++);
    return m;
}

template <class T>
Matrix<T> from_tenths(std::size_t rows, std::size_t cols,
                      std::initializer_list<long long> tenths) {
    Matrix<T> m(rows, cols);
    auto it = tenths.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = scalar_traits<T>::from_fraction(*it++, 10);
    return m;
}

}  // namespace detail

template <class T>
BlockMatrix<T> example1_block() {
    return BlockMatrix<T>(
        detail::from_ints<T>(3, 3, {1, -1, 1, 2, -2, 2, -1, 1, 0}), 2, 2);
}

template <class T>
Matrix<T> example1_a_pinv() {
    return detail::from_tenths<T>(2, 2, {1, 2, -1, -2});
}

template <class T>
Matrix<T> example1_h() {
    return detail::from_tenths<T>(3, 3, {1, 2, -5, -1, -2, 5, -2, -4, 10});
}

template <class T>
Matrix<T> example1_j() {
    return detail::from_ints<T>(3, 3, {1, -1, 0, 2, -2, 0, 0, 0, 0});
}

// H above is rank one (rows are multiples of (1, 2, -5)/10), so its
// pseudoinverse is v ut / (|u|^2 |v|^2) scaled back: (1/18) * the integer
// pattern below. Certified by the four Penrose equations in the tests.
template <class T>
Matrix<T> example1_h_pinv() {
    Matrix<T> m(3, 3);
    const long long pattern[9] = {1, -1, -2, 2, -2, -4, -5, 5, 10};
    const long long* it = pattern;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = scalar_traits<T>::from_fraction(*it++, 18);
    return m;
}

template <class T>
BlockMatrix<T> example2_block() {
    return BlockMatrix<T>(
        detail::from_ints<T>(4, 4,
                             {1, -1, 1, -2, 2, -2, 2, -4, 1, -1, 1, 1, -1, 1, 0, 0}),
        2, 2);
}

template <class T>
Matrix<T> example2_pinv() {
    Matrix<T> m(4, 4);
    auto frac = [](long long p, long long q) { return scalar_traits<T>::from_fraction(p, q); };
    const T z = scalar_traits<T>::from_int(0);
    m(0, 0) = z;            m(0, 1) = z;             m(0, 2) = z;           m(0, 3) = frac(-1, 2);
    m(1, 0) = z;            m(1, 1) = z;             m(1, 2) = z;           m(1, 3) = frac(1, 2);
    m(2, 0) = frac(1, 15);  m(2, 1) = frac(2, 15);   m(2, 2) = frac(2, 3);  m(2, 3) = frac(1, 1);
    m(3, 0) = frac(-1, 15); m(3, 1) = frac(-2, 15);  m(3, 2) = frac(1, 3);  m(3, 3) = z;
    return m;
}

template <class T>
BlockMatrix<T> carlson_violator_block() {
    return BlockMatrix<T>(
        detail::from_ints<T>(3, 3, {1, 0, 0, 0, 0, 1, 1, 0, 0}), 2, 2);
}

}  // namespace pschur
