//
// pschur : the eight range-inclusion hypotheses of the block formulas,
// evaluated as one report.
//
#pragma once

#include <array>
#include <string>
#include <vector>

#include "pschur/block.hpp"

namespace pschur {

struct InclusionReport {
    InclusionVerdict incl_B_A;      // R(B)        in R(A)
    InclusionVerdict incl_Ct_At;    // R(Ct)       in R(At)
    InclusionVerdict incl_CAd_F;    // R(C A+)     in R(F)
    InclusionVerdict incl_AdBt_Ft;  // R((A+ B)t)  in R(Ft)
    InclusionVerdict incl_C_D;      // R(C)        in R(D)
    InclusionVerdict incl_Bt_Dt;    // R(Bt)       in R(Dt)
    InclusionVerdict incl_BDd_G;    // R(B D+)     in R(G)
    InclusionVerdict incl_DdCt_Gt;  // R((D+ C)t)  in R(Gt)

    static constexpr std::array<const char*, 8> names = {
        "incl_B_A", "incl_Ct_At", "incl_CAd_F", "incl_AdBt_Ft",
        "incl_C_D", "incl_Bt_Dt", "incl_BDd_G", "incl_DdCt_Gt"};

    std::array<const InclusionVerdict*, 8> all() const {
        return {&incl_B_A, &incl_Ct_At, &incl_CAd_F, &incl_AdBt_Ft,
                &incl_C_D, &incl_Bt_Dt, &incl_BDd_G, &incl_DdCt_Gt};
    }

    bool a_side_holds() const {
        return incl_B_A.holds && incl_Ct_At.holds && incl_CAd_F.holds &&
               incl_AdBt_Ft.holds;
    }
    bool d_side_holds() const {
        return incl_C_D.holds && incl_Bt_Dt.holds && incl_BDd_G.holds &&
               incl_DdCt_Gt.holds;
    }
    bool exchange_four_hold() const {
        return incl_B_A.holds && incl_Ct_At.holds && incl_C_D.holds && incl_Bt_Dt.holds;
    }
    bool all_hold() const { return a_side_holds() && d_side_holds(); }

    std::vector<std::string> failed_names() const {
        std::vector<std::string> out;
        auto verdicts = all();
        for (std::size_t i = 0; i < verdicts.size(); ++i)
            if (!verdicts[i]->holds) out.emplace_back(names[i]);
        return out;
    }
};

template <class T>
InclusionReport condition_report(const BlockMatrix<T>& mb, const Tolerances& tol = {}) {
    const Matrix<T> a = mb.a(), b = mb.b(), c = mb.c(), d = mb.d();
    const Matrix<T> ap = pinv(a, tol);
    const Matrix<T> dp = pinv(d, tol);
    const Matrix<T> f = d - c * ap * b;
    const Matrix<T> g = a - b * dp * c;
    const Matrix<T> fp = pinv(f, tol);
    const Matrix<T> gp = pinv(g, tol);

    InclusionReport r;
    r.incl_B_A = range_included_given(b, a, ap, tol);
    r.incl_Ct_At = range_included_given(c.transpose(), a.transpose(), ap.transpose(), tol);
    r.incl_CAd_F = range_included_given(c * ap, f, fp, tol);
    r.incl_AdBt_Ft =
        range_included_given((ap * b).transpose(), f.transpose(), fp.transpose(), tol);
    r.incl_C_D = range_included_given(c, d, dp, tol);
    r.incl_Bt_Dt = range_included_given(b.transpose(), d.transpose(), dp.transpose(), tol);
    r.incl_BDd_G = range_included_given(b * dp, g, gp, tol);
    r.incl_DdCt_Gt =
        range_included_given((dp * c).transpose(), g.transpose(), gp.transpose(), tol);
    return r;
}

}  // namespace pschur
