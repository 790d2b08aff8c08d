//
// pschur : scalar backend traits and the tolerance bundle.
//
// Two interchangeable backends carry every matrix: float64 and exact
// rationals. Code that needs a backend-specific decision branches on
// scalar_traits<T>::exact.
//
#pragma once

#include <cmath>
#include <limits>

#include "pschur/rational.hpp"

namespace pschur {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* backend_name = "float64";
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_fraction(long long p, long long q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
    static double to_double(double v) { return v; }
    static bool finite(double v) { return std::isfinite(v); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* backend_name = "rational";
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_fraction(long long p, long long q) { return Rational(p, q); }
    static double to_double(const Rational& v) { return v.to_double(); }
    static bool finite(const Rational&) { return true; }
};

// Scale-aware tolerance defaults. The exact backend ignores all of them:
// every verdict there is an exact zero test.
struct Tolerances {
    // singular values below rank_scale * sigma_max count as zero;
    // negative means the max(rows, cols) * machine-epsilon default
    double rank_scale = -1.0;
    // Penrose residuals pass when <= cert_scale * (1+|M|_F) * (1+|X|_F)
    double cert_scale = 1e-10;
    // relative Frobenius equality threshold
    double eq = 1e-9;
    // range-inclusion residual threshold, relative to max(1, |Y|_F)
    double incl = 1e-8;

    double rank_cutoff(std::size_t rows, std::size_t cols, double sigma_max) const {
        double scale = rank_scale >= 0.0
                           ? rank_scale
                           : static_cast<double>(std::max(rows, cols)) *
                                 std::numeric_limits<double>::epsilon();
        return scale * sigma_max;
    }

    double cert_tol(double m_norm, double x_norm) const {
        return cert_scale * (1.0 + m_norm) * (1.0 + x_norm);
    }
};

}  // namespace pschur
