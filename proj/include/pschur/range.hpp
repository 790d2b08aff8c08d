//
// pschur : range-inclusion test R(Y) subseteq R(X) by projector residual.
//
#pragma once

#include "pschur/pinv.hpp"

namespace pschur {

struct InclusionVerdict {
    bool holds = false;
    double residual = 0.0;
    // float backend only: residual within a factor 10 of the threshold,
    // flagged without changing the verdict
    bool marginal = false;
};

// residual |(I - X X+) Y|_F; zero exactly on the exact backend,
// <= incl_tol * max(1, |Y|_F) on the float backend
template <class T>
InclusionVerdict range_included_given(const Matrix<T>& y, const Matrix<T>& x,
                                      const Matrix<T>& x_pinv, const Tolerances& tol = {}) {
    if (y.rows() != x.rows())
        throw std::invalid_argument("range_included: row counts differ");
    const Matrix<T> residual_mat = y - x * (x_pinv * y);
    InclusionVerdict v;
    v.residual = residual_mat.frobenius();
    if constexpr (scalar_traits<T>::exact) {
        v.holds = residual_mat.is_zero();
    } else {
        const double threshold = tol.incl * std::max(1.0, y.frobenius());
        v.holds = v.residual <= threshold;
        v.marginal = threshold > 0 && v.residual >= threshold / 10.0 &&
                     v.residual <= threshold * 10.0;
    }
    return v;
}

template <class T>
InclusionVerdict range_included(const Matrix<T>& y, const Matrix<T>& x,
                                const Tolerances& tol = {}) {
    return range_included_given(y, x, pinv(x, tol), tol);
}

}  // namespace pschur
