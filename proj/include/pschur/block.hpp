//
// pschur : 2x2-partitioned matrices, pseudo Schur complements, the pseudo
// principal pivot transform and its complement, and the exchange identities.
//
// Block layout, with row split m and column split n:
//
//     M = [ A  B ]    A: m x n,  B: m x p,  C: s x n,  D: s x p
//         [ C  D ]
//
// H = pppt(M, A)  = [ A+   -A+ B ]      (n+s) x (m+p)
//                   [ CA+   F    ]      F = D - C A+ B
//
// J = cpppt(M, D) = [ G     B D+ ]      (m+p) x (n+s)
//                   [ -D+ C  D+  ]      G = A - B D+ C
//
#pragma once

#include <string>
#include <vector>

#include "pschur/range.hpp"

namespace pschur {

template <class T>
class BlockMatrix {
public:
    BlockMatrix(Matrix<T> whole, std::size_t row_split, std::size_t col_split)
        : whole_(std::move(whole)), row_split_(row_split), col_split_(col_split) {
        if (row_split_ == 0 || row_split_ >= whole_.rows())
            throw std::invalid_argument("BlockMatrix: row split out of range");
        if (col_split_ == 0 || col_split_ >= whole_.cols())
            throw std::invalid_argument("BlockMatrix: column split out of range");
    }

    static BlockMatrix from_blocks(const Matrix<T>& a, const Matrix<T>& b,
                                   const Matrix<T>& c, const Matrix<T>& d) {
        return BlockMatrix(block2x2(a, b, c, d), a.rows(), a.cols());
    }

    const Matrix<T>& whole() const { return whole_; }
    std::size_t row_split() const { return row_split_; }
    std::size_t col_split() const { return col_split_; }

    std::size_t m() const { return row_split_; }
    std::size_t n() const { return col_split_; }
    std::size_t s() const { return whole_.rows() - row_split_; }
    std::size_t p() const { return whole_.cols() - col_split_; }

    Matrix<T> a() const { return whole_.block(0, 0, m(), n()); }
    Matrix<T> b() const { return whole_.block(0, n(), m(), p()); }
    Matrix<T> c() const { return whole_.block(m(), 0, s(), n()); }
    Matrix<T> d() const { return whole_.block(m(), n(), s(), p()); }

private:
    Matrix<T> whole_;
    std::size_t row_split_, col_split_;
};

enum class PivotSide { leading, trailing };

inline const char* pivot_name(PivotSide side) {
    return side == PivotSide::leading ? "a" : "d";
}

// ---------------------------------------------------------------------------
// pseudo Schur complements
// ---------------------------------------------------------------------------

template <class T>
struct PseudoSchurResult {
    Matrix<T> value;
    PivotSide relative_to;
    // the two inclusions gating Carlson invariance for this pivot;
    // computation proceeds regardless, the verdicts qualify theorem use
    InclusionVerdict hyp_range;    // leading: R(B) in R(A);   trailing: R(C) in R(D)
    InclusionVerdict hyp_corange;  // leading: R(Ct) in R(At); trailing: R(Bt) in R(Dt)
};

// F = D - C A+ B
template <class T>
PseudoSchurResult<T> pseudo_schur(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> ap = pinv(a, tol);
    PseudoSchurResult<T> r{d - c * ap * b, PivotSide::leading,
                           range_included_given(b, a, ap, tol),
                           range_included_given(c.transpose(), a.transpose(),
                                                ap.transpose(), tol)};
    return r;
}

// G = A - B D+ C
template <class T>
PseudoSchurResult<T> complementary_pseudo_schur(const BlockMatrix<T>& mb,
                                                const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> dp = pinv(d, tol);
    PseudoSchurResult<T> r{a - b * dp * c, PivotSide::trailing,
                           range_included_given(c, d, dp, tol),
                           range_included_given(b.transpose(), d.transpose(),
                                                dp.transpose(), tol)};
    return r;
}

// ---------------------------------------------------------------------------
// pivot transforms
// ---------------------------------------------------------------------------

template <class T>
Matrix<T> pppt(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> ap = pinv(a, tol);
    return block2x2(ap, -(ap * b), c * ap, d - c * ap * b);
}

template <class T>
Matrix<T> cpppt(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> dp = pinv(d, tol);
    return block2x2(a - b * dp * c, b * dp, -(dp * c), dp);
}

// ---------------------------------------------------------------------------
// exchange identities
// ---------------------------------------------------------------------------

class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::vector<std::string>& failed)
        : std::runtime_error(build_message(failed)), failed_(failed) {}

    const std::vector<std::string>& failed() const { return failed_; }

private:
    std::vector<std::string> failed_;

    static std::string build_message(const std::vector<std::string>& failed) {
        std::string msg = "hypothesis violated:";
        for (const auto& name : failed) msg += " " + name;
        return msg;
    }
};

template <class T>
struct ExchangeResult {
    std::vector<T> x1, x2, y1, y2;
    bool verified = false;
    double residual = 0.0;  // worst relative inf-norm deviation over the checks
};

namespace detail {

template <class T>
void require_exchange_hypotheses(const BlockMatrix<T>& mb, PivotSide side,
                                 const Tolerances& tol) {
    std::vector<std::string> failed;
    if (side == PivotSide::leading) {
        const Matrix<T> ap = pinv(mb.a(), tol);
        if (!range_included_given(mb.b(), mb.a(), ap, tol).holds)
            failed.push_back("incl_B_A");
        if (!range_included_given(mb.c().transpose(), mb.a().transpose(), ap.transpose(),
                                  tol)
                 .holds)
            failed.push_back("incl_Ct_At");
    } else {
        const Matrix<T> dp = pinv(mb.d(), tol);
        if (!range_included_given(mb.c(), mb.d(), dp, tol).holds)
            failed.push_back("incl_C_D");
        if (!range_included_given(mb.b().transpose(), mb.d().transpose(), dp.transpose(),
                                  tol)
                 .holds)
            failed.push_back("incl_Bt_Dt");
    }
    if (!failed.empty()) throw HypothesisError(failed);
}

template <class T>
bool vectors_match(const Matrix<T>& got, const Matrix<T>& want, double eq_tol,
                   double& worst) {
    if constexpr (scalar_traits<T>::exact) {
        worst = std::max(worst, relative_inf_distance(got, want));
        return got == want;
    } else {
        const double dist = relative_inf_distance(got, want);
        worst = std::max(worst, dist);
        return dist <= eq_tol;
    }
}

}  // namespace detail

// Forward exchange. Leading pivot: from (x1, x2) build y1 = A x1 + B x2,
// y2 = C x1 + D x2 and verify H (y1; x2) = (A+ A x1; y2). Trailing pivot:
// same data, verifying J (x1; y2) = (y1; D+ D x2).
template <class T>
ExchangeResult<T> exchange_forward(const BlockMatrix<T>& mb, const std::vector<T>& x1,
                                   const std::vector<T>& x2,
                                   PivotSide side = PivotSide::leading,
                                   const Tolerances& tol = {}) {
    if (x1.size() != mb.n() || x2.size() != mb.p())
        throw std::invalid_argument("exchange_forward: vector lengths do not match splits");
    detail::require_exchange_hypotheses(mb, side, tol);

    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> x1c = column(x1), x2c = column(x2);
    const Matrix<T> y1c = a * x1c + b * x2c;
    const Matrix<T> y2c = c * x1c + d * x2c;

    ExchangeResult<T> out;
    out.x1 = x1;
    out.x2 = x2;
    out.y1 = to_vector(y1c);
    out.y2 = to_vector(y2c);

    double worst = 0.0;
    bool ok;
    if (side == PivotSide::leading) {
        const Matrix<T> h = pppt(mb, tol);
        const Matrix<T> ap = pinv(a, tol);
        const Matrix<T> lhs = h * stack_columns(y1c, x2c);
        const Matrix<T> rhs = stack_columns(ap * (a * x1c), y2c);
        ok = detail::vectors_match(lhs, rhs, tol.eq, worst);
    } else {
        const Matrix<T> j = cpppt(mb, tol);
        const Matrix<T> dp = pinv(d, tol);
        const Matrix<T> lhs = j * stack_columns(x1c, y2c);
        const Matrix<T> rhs = stack_columns(y1c, dp * (d * x2c));
        ok = detail::vectors_match(lhs, rhs, tol.eq, worst);
    }
    out.verified = ok;
    out.residual = worst;
    return out;
}

// Backward exchange (the converse direction). Leading pivot: x_known is x2;
// x1 := A+ y1 - A+ B x2 is recovered, the y2 input is checked for
// consistency against H (y1; x2), and M (x1; x2) = (A A+ y1; y2) is
// verified. Trailing pivot: x_known is x1; x2 := D+ y2 - D+ C x1, y1 is the
// consistency input, and M (x1; x2) = (y1; D D+ y2) is verified.
template <class T>
ExchangeResult<T> exchange_backward(const BlockMatrix<T>& mb, const std::vector<T>& y1,
                                    const std::vector<T>& y2, const std::vector<T>& x_known,
                                    PivotSide side = PivotSide::leading,
                                    const Tolerances& tol = {}) {
    if (y1.size() != mb.m() || y2.size() != mb.s())
        throw std::invalid_argument("exchange_backward: vector lengths do not match splits");
    if (side == PivotSide::leading ? x_known.size() != mb.p() : x_known.size() != mb.n())
        throw std::invalid_argument("exchange_backward: known part has wrong length");
    detail::require_exchange_hypotheses(mb, side, tol);

    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> y1c = column(y1), y2c = column(y2);

    ExchangeResult<T> out;
    out.y1 = y1;
    out.y2 = y2;
    double worst = 0.0;

    if (side == PivotSide::leading) {
        const Matrix<T> x2c = column(x_known);
        const Matrix<T> ap = pinv(a, tol);
        const Matrix<T> x1c = ap * y1c - ap * (b * x2c);
        out.x1 = to_vector(x1c);
        out.x2 = x_known;
        // premise consistency: second block of H (y1; x2) must be the given y2
        const Matrix<T> h_bottom = c * (ap * y1c) + (d - c * ap * b) * x2c;
        bool consistent = detail::vectors_match(h_bottom, y2c, tol.eq, worst);
        const Matrix<T> lhs = stack_columns(a * x1c + b * x2c, c * x1c + d * x2c);
        const Matrix<T> rhs = stack_columns(a * (ap * y1c), y2c);
        out.verified = consistent && detail::vectors_match(lhs, rhs, tol.eq, worst);
    } else {
        const Matrix<T> x1c = column(x_known);
        const Matrix<T> dp = pinv(d, tol);
        const Matrix<T> x2c = dp * y2c - dp * (c * x1c);
        out.x1 = x_known;
        out.x2 = to_vector(x2c);
        // premise consistency: first block of J (x1; y2) must be the given y1
        const Matrix<T> j_top = (a - b * dp * c) * x1c + b * (dp * y2c);
        bool consistent = detail::vectors_match(j_top, y1c, tol.eq, worst);
        const Matrix<T> lhs = stack_columns(a * x1c + b * x2c, c * x1c + d * x2c);
        const Matrix<T> rhs = stack_columns(y1c, d * (dp * y2c));
        out.verified = consistent && detail::vectors_match(lhs, rhs, tol.eq, worst);
    }
    out.residual = worst;
    return out;
}

}  // namespace pschur
