//
// pschur : block Moore-Penrose inversion.
//
// Three sufficient formulas for M+, each gated by range inclusions:
//
//   via F     [ A+ + A+ B F+ C A+    -A+ B F+ ]   needs the four A-side
//             [ -F+ C A+              F+      ]   inclusions
//
//   via G     [ G+                   -G+ B D+              ]   four D-side
//             [ -D+ C G+              D+ + D+ C G+ B D+    ]
//
//   mixed     [ G+          -A+ B F+ ]   all eight
//             [ -D+ C G+     F+      ]
//
// Formulas always compute; violated hypotheses mark the result unsound
// instead of refusing, so counterexamples stay explorable. The Penrose
// certificate against the whole matrix is the machine check.
//
#pragma once

#include "pschur/conditions.hpp"

namespace pschur {

enum class BlockFormula { via_f, via_g, mixed };

inline const char* formula_name(BlockFormula f) {
    switch (f) {
        case BlockFormula::via_f: return "via-F";
        case BlockFormula::via_g: return "via-G";
        default: return "mixed";
    }
}

template <class T>
struct BlockPinvResult {
    Matrix<T> value;
    BlockFormula formula;
    InclusionReport hypotheses;
    std::vector<std::string> failed;  // gating inclusions that do not hold
    bool sound = false;
    PinvCertificate certificate;
};

namespace detail {

inline void collect_failed(std::vector<std::string>& out, const InclusionVerdict& v,
                           const char* name) {
    if (!v.holds) out.emplace_back(name);
}

}  // namespace detail

template <class T>
BlockPinvResult<T> block_pinv(const BlockMatrix<T>& mb, BlockFormula formula,
                              const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> ap = pinv(a, tol);
    const Matrix<T> dp = pinv(d, tol);
    const Matrix<T> f = d - c * ap * b;
    const Matrix<T> g = a - b * dp * c;
    const Matrix<T> fp = pinv(f, tol);
    const Matrix<T> gp = pinv(g, tol);

    InclusionReport report;
    report.incl_B_A = range_included_given(b, a, ap, tol);
    report.incl_Ct_At =
        range_included_given(c.transpose(), a.transpose(), ap.transpose(), tol);
    report.incl_CAd_F = range_included_given(c * ap, f, fp, tol);
    report.incl_AdBt_Ft =
        range_included_given((ap * b).transpose(), f.transpose(), fp.transpose(), tol);
    report.incl_C_D = range_included_given(c, d, dp, tol);
    report.incl_Bt_Dt =
        range_included_given(b.transpose(), d.transpose(), dp.transpose(), tol);
    report.incl_BDd_G = range_included_given(b * dp, g, gp, tol);
    report.incl_DdCt_Gt =
        range_included_given((dp * c).transpose(), g.transpose(), gp.transpose(), tol);

    std::vector<std::string> failed;
    switch (formula) {
        case BlockFormula::via_f:
            detail::collect_failed(failed, report.incl_B_A, "incl_B_A");
            detail::collect_failed(failed, report.incl_Ct_At, "incl_Ct_At");
            detail::collect_failed(failed, report.incl_CAd_F, "incl_CAd_F");
            detail::collect_failed(failed, report.incl_AdBt_Ft, "incl_AdBt_Ft");
            break;
        case BlockFormula::via_g:
            detail::collect_failed(failed, report.incl_C_D, "incl_C_D");
            detail::collect_failed(failed, report.incl_Bt_Dt, "incl_Bt_Dt");
            detail::collect_failed(failed, report.incl_BDd_G, "incl_BDd_G");
            detail::collect_failed(failed, report.incl_DdCt_Gt, "incl_DdCt_Gt");
            break;
        case BlockFormula::mixed:
            for (std::size_t i = 0; i < 8; ++i)
                detail::collect_failed(failed, *report.all()[i], InclusionReport::names[i]);
            break;
    }

    Matrix<T> value = [&] {
        switch (formula) {
            case BlockFormula::via_f:
                return block2x2(ap + ap * b * fp * (c * ap), -(ap * (b * fp)),
                                -(fp * (c * ap)), fp);
            case BlockFormula::via_g:
                return block2x2(gp, -(gp * (b * dp)), -(dp * (c * gp)),
                                dp + dp * c * gp * (b * dp));
            default:
                return block2x2(gp, -(ap * (b * fp)), -(dp * (c * gp)), fp);
        }
    }();

    BlockPinvResult<T> out{std::move(value), formula, report, std::move(failed), false,
                           PinvCertificate{}};
    out.sound = out.failed.empty();
    out.certificate = certify_pinv(mb.whole(), out.value, tol);
    return out;
}

template <class T>
BlockPinvResult<T> block_pinv_via_f(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    return block_pinv(mb, BlockFormula::via_f, tol);
}
template <class T>
BlockPinvResult<T> block_pinv_via_g(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    return block_pinv(mb, BlockFormula::via_g, tol);
}
template <class T>
BlockPinvResult<T> block_pinv_mixed(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    return block_pinv(mb, BlockFormula::mixed, tol);
}

// ---------------------------------------------------------------------------
// quotient identities: G+ = A+ + A+ B F+ C A+ and F+ = D+ + D+ C G+ B D+,
// valid when all eight inclusions hold
// ---------------------------------------------------------------------------

struct QuotientIdentities {
    double g_identity_residual = 0.0;
    double f_identity_residual = 0.0;
    bool ok = false;       // both residuals within eq tolerance (zero exactly)
    bool sound = false;    // all eight inclusions hold
    std::vector<std::string> failed;
};

template <class T>
QuotientIdentities quotient_identities(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> ap = pinv(a, tol);
    const Matrix<T> dp = pinv(d, tol);
    const Matrix<T> f = d - c * ap * b;
    const Matrix<T> g = a - b * dp * c;
    const Matrix<T> fp = pinv(f, tol);
    const Matrix<T> gp = pinv(g, tol);

    const Matrix<T> g_rhs = ap + ap * b * fp * (c * ap);
    const Matrix<T> f_rhs = dp + dp * c * gp * (b * dp);

    QuotientIdentities out;
    const Matrix<T> g_diff = gp - g_rhs;
    const Matrix<T> f_diff = fp - f_rhs;
    out.g_identity_residual = g_diff.frobenius();
    out.f_identity_residual = f_diff.frobenius();
    const InclusionReport report = condition_report(mb, tol);
    out.failed = report.failed_names();
    out.sound = out.failed.empty();
    if constexpr (scalar_traits<T>::exact) {
        out.ok = g_diff.is_zero() && f_diff.is_zero();
    } else {
        out.ok = out.g_identity_residual <= tol.eq * (1.0 + g_rhs.frobenius()) &&
                 out.f_identity_residual <= tol.eq * (1.0 + f_rhs.frobenius());
    }
    return out;
}

// ---------------------------------------------------------------------------
// H+ vs J: equality holds under the four exchange inclusions; JH and HJ are
// returned for the block-diagonal identities JH = diag(A A+, D+ D) and
// HJ = diag(A+ A, D D+)
// ---------------------------------------------------------------------------

template <class T>
struct PpptComparison {
    bool equal = false;
    double residual = 0.0;  // |H+ - J|_F
    Matrix<T> h, j, h_pinv, jh, hj;
    bool hypotheses_hold = false;  // the four exchange inclusions
    std::vector<std::string> failed;
};

template <class T>
PpptComparison<T> pppt_pinv_vs_cpppt(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> h = pppt(mb, tol);
    const Matrix<T> j = cpppt(mb, tol);
    const Matrix<T> hp = pinv(h, tol);

    PpptComparison<T> out{false, 0.0, h, j, hp, j * h, h * j, false, {}};
    const Matrix<T> diff = hp - j;
    out.residual = diff.frobenius();
    if constexpr (scalar_traits<T>::exact) {
        out.equal = diff.is_zero();
    } else {
        out.equal = out.residual <= tol.eq * (1.0 + j.frobenius());
    }

    const InclusionReport report = condition_report(mb, tol);
    out.hypotheses_hold = report.exchange_four_hold();
    const std::array<const char*, 4> gate = {"incl_B_A", "incl_Ct_At", "incl_C_D",
                                             "incl_Bt_Dt"};
    const std::array<const InclusionVerdict*, 4> verdicts = {
        &report.incl_B_A, &report.incl_Ct_At, &report.incl_C_D, &report.incl_Bt_Dt};
    for (std::size_t i = 0; i < 4; ++i)
        if (!verdicts[i]->holds) out.failed.emplace_back(gate[i]);
    return out;
}

}  // namespace pschur
