#include "doctest.h"

#include <cmath>

#include "pschur/matrix.hpp"

using pschur::Matrix;
using pschur::Rational;

TEST_SUITE("matrix") {
    TEST_CASE("construction guards") {
        CHECK_THROWS(Matrix<double>(0, 3));
        CHECK_THROWS(Matrix<double>(3, 0));
        CHECK_THROWS(Matrix<double>(2, 2, {1.0, 2.0, 3.0}));
        CHECK_THROWS(Matrix<double>({{1.0, 2.0}, {3.0}}));
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS(Matrix<double>({{1.0, inf}}));
        CHECK_THROWS(Matrix<double>({{std::nan("")}}));
    }

    TEST_CASE("product and transpose") {
        Matrix<double> a{{1, 2}, {3, 4}, {5, 6}};
        Matrix<double> b{{1, 0, 2}, {0, 1, 3}};
        Matrix<double> ab = a * b;
        CHECK(ab.rows() == 3);
        CHECK(ab.cols() == 3);
        CHECK(ab(2, 2) == 28);
        CHECK(a.transpose().transpose() == a);
        CHECK_THROWS(b * b);
    }

    TEST_CASE("blocks tile") {
        Matrix<Rational> a{{Rational(1)}}, b{{Rational(2)}}, c{{Rational(3)}},
            d{{Rational(4)}};
        auto m = pschur::block2x2(a, b, c, d);
        CHECK(m(0, 1) == Rational(2));
        CHECK(m.block(1, 0, 1, 2) == Matrix<Rational>{{Rational(3), Rational(4)}});
    }

    TEST_CASE("norms") {
        Matrix<double> m{{3, 4}};
        CHECK(m.frobenius() == doctest::Approx(5.0));
        Matrix<Rational> r{{Rational(3), Rational(4)}};
        CHECK(r.frobenius_sq() == Rational(25));
        CHECK(r.frobenius() == doctest::Approx(5.0));
        CHECK(r.max_abs() == doctest::Approx(4.0));
    }

    TEST_CASE("exact and approximate match") {
        Matrix<Rational> p{{Rational(1, 3)}};
        Matrix<Rational> q{{Rational(2, 6)}};
        CHECK(pschur::matrices_match(p, q, 0.0));
        Matrix<double> x{{1.0}};
        Matrix<double> y{{1.0 + 1e-12}};
        CHECK(pschur::matrices_match(x, y, 1e-9));
        CHECK_FALSE(pschur::matrices_match(x, Matrix<double>{{1.5}}, 1e-9));
    }
}
