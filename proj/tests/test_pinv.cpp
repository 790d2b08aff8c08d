#include "doctest.h"

#include "oracles.hpp"
#include "pschur/pinv.hpp"
#include "pschur/rng.hpp"

using pschur::Matrix;
using pschur::Rational;
using pschur::Rng;
using pschur::Tolerances;

namespace {

Matrix<double> random_dense(Rng& rng, std::size_t r, std::size_t c) {
    Matrix<double> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.normal();
    return m;
}

Matrix<Rational> random_dense_rational(Rng& rng, std::size_t r, std::size_t c) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rng.uniform_int(-5, 5));
    return m;
}

template <class T>
T random_entry(Rng& rng) {
    if constexpr (pschur::scalar_traits<T>::exact)
        return pschur::scalar_traits<T>::from_int(rng.uniform_int(-5, 5));
    else
        return rng.normal();
}

template <class T>
Matrix<T> random_with_rank(Rng& rng, std::size_t r, std::size_t c, std::size_t rank) {
    for (;;) {
        Matrix<T> left(r, rank), right(rank, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < rank; ++k) left(i, k) = random_entry<T>(rng);
        for (std::size_t k = 0; k < rank; ++k)
            for (std::size_t j = 0; j < c; ++j) right(k, j) = random_entry<T>(rng);
        Matrix<T> m = left * right;
        if (pschur::matrix_rank(m) == rank) return m;
    }
}

const Matrix<Rational> kExample1M{
    {Rational(1), Rational(-1), Rational(1)},
    {Rational(2), Rational(-2), Rational(2)},
    {Rational(-1), Rational(1), Rational(0)}};

}  // namespace

TEST_SUITE("pinv") {
    TEST_CASE("rank-one 2x2 fixture, both backends") {
        Matrix<Rational> a{{Rational(1), Rational(-1)}, {Rational(2), Rational(-2)}};
        Matrix<Rational> expected{{Rational(1, 10), Rational(1, 5)},
                                  {Rational(-1, 10), Rational(-1, 5)}};
        CHECK(pschur::pinv(a) == expected);

        Matrix<double> af = pschur::to_float(a);
        CHECK(pschur::max_abs_diff(pschur::pinv(af), pschur::to_float(expected)) < 1e-14);
    }

    TEST_CASE("zero and identity") {
        Matrix<Rational> z(3, 2);
        Matrix<Rational> zp = pschur::pinv(z);
        CHECK(zp.rows() == 2);
        CHECK(zp.cols() == 3);
        CHECK(zp.is_zero());

        Matrix<double> zf(4, 2);
        CHECK(pschur::pinv(zf).is_zero());

        auto id = Matrix<Rational>::identity(3);
        CHECK(pschur::pinv(id) == id);
        auto idf = Matrix<double>::identity(3);
        CHECK(pschur::max_abs_diff(pschur::pinv(idf), idf) < 1e-15);
    }

    TEST_CASE("random 5x3 rank-2 rational: exact Penrose certificate") {
        Rng rng(71);
        for (int t = 0; t < 20; ++t) {
            auto m = random_with_rank<Rational>(rng, 5, 3, 2);
            auto x = pschur::pinv(m);
            auto cert = pschur::certify_pinv(m, x);
            CHECK(cert.ok);
            CHECK(cert.max_residual() == 0.0);
        }
    }

    TEST_CASE("float certificates on random shapes") {
        Rng rng(1234);
        for (int t = 0; t < 60; ++t) {
            auto r = static_cast<std::size_t>(rng.uniform_int(1, 7));
            auto c = static_cast<std::size_t>(rng.uniform_int(1, 7));
            auto rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(std::min(r, c))));
            auto m = random_with_rank<double>(rng, r, c, rank);
            auto x = pschur::pinv(m);
            auto cert = pschur::certify_pinv(m, x);
            CAPTURE(r);
            CAPTURE(c);
            CAPTURE(rank);
            CHECK(cert.ok);
        }
    }

    TEST_CASE("involution and transpose commute with pinv") {
        Rng rng(99);
        for (int t = 0; t < 15; ++t) {
            auto m = random_with_rank<Rational>(rng, 4, 3, 2);
            auto mp = pschur::pinv(m);
            CHECK(pschur::pinv(mp) == m);
            CHECK(pschur::pinv(m.transpose()) == mp.transpose());
        }
        for (int t = 0; t < 15; ++t) {
            auto m = random_dense(rng, 5, 4);
            auto mp = pschur::pinv(m);
            CHECK(pschur::matrices_match(pschur::pinv(mp), m, 1e-9));
            CHECK(pschur::matrices_match(pschur::pinv(m.transpose()), mp.transpose(), 1e-9));
        }
    }

    TEST_CASE("nonsingular case agrees with the direct inverse") {
        Rng rng(7);
        for (int t = 0; t < 10; ++t) {
            Matrix<Rational> m = random_dense_rational(rng, 4, 4);
            if (pschur::matrix_rank(m) < 4) continue;
            CHECK(pschur::pinv(m) == pschur::testing::gj_inverse(m));
            CHECK(pschur::pinv(m) * m == Matrix<Rational>::identity(4));
        }
        for (int t = 0; t < 10; ++t) {
            Matrix<double> m = random_dense(rng, 5, 5);
            CHECK(pschur::matrices_match(pschur::pinv(m), pschur::testing::gj_inverse(m), 1e-9));
        }
    }

    TEST_CASE("rank: fixtures and oracle agreement") {
        CHECK(pschur::matrix_rank(Matrix<Rational>{{Rational(1), Rational(-1)},
                                                   {Rational(2), Rational(-2)}}) == 1);
        CHECK(pschur::matrix_rank(Matrix<double>{{1, -1}, {2, -2}}) == 1);
        CHECK(pschur::matrix_rank(Matrix<Rational>::identity(4)) == 4);
        CHECK(pschur::matrix_rank(kExample1M) == 2);
        CHECK(pschur::matrix_rank(pschur::to_float(kExample1M)) == 2);

        Rng rng(2024);
        for (int t = 0; t < 25; ++t) {
            auto r = static_cast<std::size_t>(rng.uniform_int(1, 4));
            auto c = static_cast<std::size_t>(rng.uniform_int(1, 4));
            auto m = random_dense_rational(rng, r, c);
            const std::size_t k = pschur::matrix_rank(m);
            CHECK(k == pschur::testing::rank_by_minors(m));
            CHECK(k == pschur::matrix_rank(m.transpose()));
            CHECK(k == pschur::matrix_rank(pschur::pinv(m)));
        }
    }

    TEST_CASE("one_inverse_sample") {
        Matrix<Rational> m{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
        Matrix<Rational> w{{Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
        Matrix<Rational> x = pschur::one_inverse_sample(m, w);
        CHECK(x == Matrix<Rational>{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
        CHECK(m * x * m == m);

        // W = 0 recovers the pseudoinverse
        CHECK(pschur::one_inverse_sample(kExample1M, Matrix<Rational>(3, 3)) ==
              pschur::pinv(kExample1M));

        // nonsingular m: every sample is the inverse
        Matrix<Rational> inv2{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
        Rng rng(5);
        for (int t = 0; t < 5; ++t) {
            auto wr = random_dense_rational(rng, 2, 2);
            CHECK(pschur::one_inverse_sample(inv2, wr) == pschur::testing::gj_inverse(inv2));
        }

        CHECK_THROWS(pschur::one_inverse_sample(m, Matrix<Rational>(3, 2)));
    }

    TEST_CASE("one-inverse property: M X M = M for many W") {
        Rng rng(31);
        auto m = random_with_rank<Rational>(rng, 3, 4, 2);
        for (int t = 0; t < 100; ++t) {
            auto w = random_dense_rational(rng, 4, 3);
            auto x = pschur::one_inverse_sample(m, w);
            CHECK(m * x * m == m);
        }
        auto mf = random_with_rank<double>(rng, 4, 3, 2);
        for (int t = 0; t < 100; ++t) {
            auto w = random_dense(rng, 3, 4);
            auto x = pschur::one_inverse_sample(mf, w);
            CHECK(pschur::matrices_match(mf * x * mf, mf, 1e-9));
        }
    }

    TEST_CASE("range symmetry") {
        CHECK(pschur::is_range_symmetric(Matrix<double>{{2, 1}, {1, 3}}));
        CHECK(pschur::is_range_symmetric(Matrix<Rational>{{Rational(2), Rational(1)},
                                                          {Rational(1), Rational(3)}}));
        CHECK_FALSE(pschur::is_range_symmetric(Matrix<double>{{0, 1}, {0, 0}}));
        CHECK_THROWS(pschur::is_range_symmetric(Matrix<double>(2, 3)));

        // oracle: compare the two projector products directly
        auto mp = pschur::pinv(kExample1M);
        const bool direct = (kExample1M * mp == mp * kExample1M);
        CHECK(pschur::is_range_symmetric(kExample1M) == direct);
    }

    TEST_CASE("cross-backend agreement") {
        Rng rng(404);
        for (int t = 0; t < 20; ++t) {
            auto m = random_with_rank<Rational>(rng, 4, 4, 3);
            auto exact = pschur::pinv(m);
            auto approx = pschur::pinv(pschur::to_float(m));
            CHECK(pschur::max_abs_diff(approx, pschur::to_float(exact)) < 1e-9);
        }
    }
}
