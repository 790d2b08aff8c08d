//
// pschur : Moore-Penrose inversion and friends.
//
// Float backend: one-sided Jacobi SVD, singular values below the rank
// cutoff treated as zero. Exact backend: full-rank factorization M = PQ
// from the reduced row echelon form, then  M+ = Qt (Q Qt)^-1 (Pt P)^-1 Pt.
//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "pschur/matrix.hpp"

namespace pschur {

// ---------------------------------------------------------------------------
// float path: one-sided Jacobi SVD
// ---------------------------------------------------------------------------

struct Svd {
    Matrix<double> u;           // rows x k, k = min(rows, cols)
    std::vector<double> sigma;  // descending, length k
    Matrix<double> v;           // cols x k
};

inline Svd svd_decompose(const Matrix<double>& input) {
    const bool flipped = input.rows() < input.cols();
    Matrix<double> a = flipped ? input.transpose() : input;
    const std::size_t rows = a.rows(), n = a.cols();

    Matrix<double> v = Matrix<double>::identity(n);
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor_sq = std::pow(eps * (a.frobenius() + 1e-300), 2);

    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (std::size_t i = 0; i < rows; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                if (app * aqq <= floor_sq) continue;  // negligible columns
                if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm_sq = 0;
        for (std::size_t i = 0; i < rows; ++i) norm_sq += a(i, j) * a(i, j);
        sigma[j] = std::sqrt(norm_sq);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Svd out{Matrix<double>(rows, n), std::vector<double>(n), Matrix<double>(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sigma[src];
        const double inv = sigma[src] > 0 ? 1.0 / sigma[src] : 0.0;
        for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = a(i, src) * inv;
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    }
    if (flipped) std::swap(out.u, out.v);
    return out;
}

// ---------------------------------------------------------------------------
// exact path: reduced row echelon form and Gauss-Jordan inversion
// ---------------------------------------------------------------------------

template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_cols;
};

// exact arithmetic only; pivots chosen left-to-right, first nonzero row
template <class T>
RowEchelon<T> reduced_row_echelon(Matrix<T> m) {
    static_assert(scalar_traits<T>::exact, "row reduction is an exact-backend operation");
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, col) == T{}) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) m.swap_rows(sel, lead);
        const T inv_pivot = scalar_traits<T>::from_int(1) / m(lead, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) = m(lead, j) * inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col) == T{}) continue;
            const T factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
Matrix<T> invert_nonsingular(const Matrix<T>& m) {
    static_assert(scalar_traits<T>::exact, "exact inversion backend only");
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<T>::identity(n));
    auto [red, pivots] = reduced_row_echelon(std::move(aug));
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("invert: matrix is singular");
    return red.block(0, n, n, n);
}

// ---------------------------------------------------------------------------
// rank and pinv
// ---------------------------------------------------------------------------

template <class T>
std::size_t matrix_rank(const Matrix<T>& m, const Tolerances& tol = {}) {
    if constexpr (scalar_traits<T>::exact) {
        return reduced_row_echelon(m).pivot_cols.size();
    } else {
        const Svd dec = svd_decompose(m);
        if (dec.sigma.empty() || dec.sigma[0] == 0.0) return 0;
        const double cutoff = tol.rank_cutoff(m.rows(), m.cols(), dec.sigma[0]);
        std::size_t r = 0;
        for (double s : dec.sigma)
            if (s > cutoff) ++r;
        return r;
    }
}

template <class T>
Matrix<T> pinv(const Matrix<T>& m, const Tolerances& tol = {}) {
    if constexpr (scalar_traits<T>::exact) {
        auto [red, pivots] = reduced_row_echelon(m);
        const std::size_t r = pivots.size();
        if (r == 0) return Matrix<T>(m.cols(), m.rows());
        // full-rank factorization: P = pivot columns of m, Q = nonzero rows of rref
        Matrix<T> p(m.rows(), r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < m.rows(); ++i) p(i, k) = m(i, pivots[k]);
        const Matrix<T> q = red.block(0, 0, r, m.cols());
        const Matrix<T> qt = q.transpose();
        const Matrix<T> pt = p.transpose();
        return qt * invert_nonsingular(q * qt) * invert_nonsingular(pt * p) * pt;
    } else {
        const Svd dec = svd_decompose(m);
        Matrix<double> out(m.cols(), m.rows());
        if (dec.sigma.empty() || dec.sigma[0] == 0.0) return out;
        const double cutoff = tol.rank_cutoff(m.rows(), m.cols(), dec.sigma[0]);
        for (std::size_t k = 0; k < dec.sigma.size(); ++k) {
            if (dec.sigma[k] <= cutoff) continue;
            const double inv = 1.0 / dec.sigma[k];
            for (std::size_t i = 0; i < m.cols(); ++i)
                for (std::size_t j = 0; j < m.rows(); ++j)
                    out(i, j) += dec.v(i, k) * inv * dec.u(j, k);
        }
        return out;
    }
}

// ---------------------------------------------------------------------------
// Penrose certificate
// ---------------------------------------------------------------------------

// residuals of M = MXM, X = XMX, (MX)t = MX, (XM)t = XM in the Frobenius norm
struct PinvCertificate {
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
    double tol = 0;
    bool ok = false;

    double max_residual() const { return std::max(std::max(r1, r2), std::max(r3, r4)); }
};

template <class T>
PinvCertificate certify_pinv(const Matrix<T>& m, const Matrix<T>& x,
                             const Tolerances& tol = {}) {
    if (x.rows() != m.cols() || x.cols() != m.rows())
        throw std::invalid_argument("certify_pinv: candidate has wrong shape");
    const Matrix<T> mx = m * x;
    const Matrix<T> xm = x * m;
    const Matrix<T> d1 = m - mx * m;
    const Matrix<T> d2 = x - xm * x;
    const Matrix<T> d3 = mx - mx.transpose();
    const Matrix<T> d4 = xm - xm.transpose();

    PinvCertificate cert;
    cert.r1 = d1.frobenius();
    cert.r2 = d2.frobenius();
    cert.r3 = d3.frobenius();
    cert.r4 = d4.frobenius();
    if constexpr (scalar_traits<T>::exact) {
        cert.tol = 0.0;
        cert.ok = d1.is_zero() && d2.is_zero() && d3.is_zero() && d4.is_zero();
    } else {
        cert.tol = tol.cert_tol(m.frobenius(), x.frobenius());
        cert.ok = cert.max_residual() <= cert.tol;
    }
    return cert;
}

// ---------------------------------------------------------------------------
// {1}-inverses and EP detection
// ---------------------------------------------------------------------------

// X = M+ + W - M+ M W M M+ ; satisfies M X M = M for every W
template <class T>
Matrix<T> one_inverse_sample(const Matrix<T>& m, const Matrix<T>& w,
                             const Tolerances& tol = {}) {
    if (w.rows() != m.cols() || w.cols() != m.rows())
        throw std::invalid_argument("one_inverse_sample: W must have the shape of Mt");
    const Matrix<T> mp = pinv(m, tol);
    return mp + w - mp * m * w * m * mp;
}

// EP test: M M+ == M+ M, i.e. R(Mt) == R(M)
template <class T>
bool is_range_symmetric(const Matrix<T>& m, const Tolerances& tol = {}) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_range_symmetric: matrix not square");
    const Matrix<T> mp = pinv(m, tol);
    const Matrix<T> left = m * mp;
    const Matrix<T> right = mp * m;
    if constexpr (scalar_traits<T>::exact) {
        return left == right;
    } else {
        return max_abs_diff(left, right) <= tol.eq;
    }
}

}  // namespace pschur
