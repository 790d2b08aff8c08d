//
// pschur python module: numpy arrays carry the float backend, nested lists
// of "p/q" strings carry the exact rational backend.
//
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pschur/io.hpp"
#include "pschur/pschur.hpp"

namespace py = pybind11;
using namespace pschur;

namespace {

Matrix<double> matrix_from_array(const py::array_t<double, py::array::c_style |
                                                              py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw py::value_error("expected a 2-d array");
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    Matrix<double> m(rows, cols);
    auto r = arr.unchecked<2>();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r(i, j);
    return m;
}

py::array_t<double> array_from_matrix(const Matrix<double>& m) {
    py::array_t<double> arr({m.rows(), m.cols()});
    auto w = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
    return arr;
}

using StringRows = std::vector<std::vector<std::string>>;

Matrix<Rational> matrix_from_strings(const StringRows& rows) {
    if (rows.empty() || rows.front().empty())
        throw py::value_error("expected a nonempty list of rows");
    Matrix<Rational> m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw py::value_error("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = Rational::from_string(rows[i][j]);
    }
    return m;
}

StringRows strings_from_matrix(const Matrix<Rational>& m) {
    StringRows rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).to_string();
    return rows;
}

py::dict verdict_dict(const InclusionVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["residual"] = v.residual;
    d["marginal"] = v.marginal;
    return d;
}

py::dict report_dict(const InclusionReport& r) {
    py::dict d;
    const auto verdicts = r.all();
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        d[InclusionReport::names[i]] = verdict_dict(*verdicts[i]);
    d["a_side"] = r.a_side_holds();
    d["d_side"] = r.d_side_holds();
    d["all_eight"] = r.all_hold();
    return d;
}

py::dict certificate_dict(const PinvCertificate& c) {
    py::dict d;
    d["r1"] = c.r1;
    d["r2"] = c.r2;
    d["r3"] = c.r3;
    d["r4"] = c.r4;
    d["tol"] = c.tol;
    d["ok"] = c.ok;
    return d;
}

py::dict verify_dict(const VerifyReport& r) {
    py::dict d;
    d["backend"] = r.backend;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["all_passed"] = r.all_passed();
    py::list sections;
    for (const auto& s : r.sections) {
        py::dict sd;
        sd["name"] = s.name;
        sd["trials"] = s.trials;
        sd["passes"] = s.passes;
        sd["worst_residual"] = s.worst_residual;
        sd["failing_seeds"] = s.failing_seeds;
        sd["note"] = s.note;
        sections.append(sd);
    }
    d["sections"] = sections;
    return d;
}

BlockFormula parse_formula(const std::string& f) {
    if (f == "f") return BlockFormula::via_f;
    if (f == "g") return BlockFormula::via_g;
    if (f == "mixed") return BlockFormula::mixed;
    throw py::value_error("formula must be 'f', 'g' or 'mixed'");
}

unsigned parse_required(const std::string& name) {
    if (name == "none") return inclusions::none;
    if (name == "a2") return inclusions::leading_pair;
    if (name == "a4") return inclusions::leading_four;
    if (name == "d2") return inclusions::trailing_pair;
    if (name == "d4") return inclusions::trailing_four;
    if (name == "x4") return inclusions::exchange_four;
    if (name == "all8") return inclusions::all_eight;
    throw py::value_error("required must be one of none|a2|a4|d2|d4|x4|all8");
}

template <class T, class Adapter>
py::dict block_pinv_impl(const BlockMatrix<T>& mb, const std::string& formula,
                         Adapter&& to_python) {
    const auto r = block_pinv(mb, parse_formula(formula));
    py::dict d;
    d["value"] = to_python(r.value);
    d["formula"] = formula_name(r.formula);
    d["sound"] = r.sound;
    d["failed"] = r.failed;
    d["certificate"] = certificate_dict(r.certificate);
    d["hypotheses"] = report_dict(r.hypotheses);
    return d;
}

}  // namespace

PYBIND11_MODULE(pschur, mod) {
    mod.doc() =
        "Block-matrix generalized inverses: Moore-Penrose inversion with "
        "certificates, pseudo Schur complements, pseudo principal pivot "
        "transforms, range-inclusion checks, and a seeded theorem harness. "
        "2-d float arrays use the float64 backend; nested lists of 'p/q' "
        "strings use the exact rational backend.";

    using FloatArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

    mod.def(
        "pinv",
        [](const FloatArray& a) { return array_from_matrix(pinv(matrix_from_array(a))); },
        py::arg("matrix"), "Moore-Penrose inverse (float64, SVD path).");

    mod.def(
        "pinv_rational",
        [](const StringRows& rows) {
            return strings_from_matrix(pinv(matrix_from_strings(rows)));
        },
        py::arg("matrix"),
        "Exact Moore-Penrose inverse over rationals given 'p/q' entries.");

    mod.def(
        "certify_pinv",
        [](const FloatArray& m, const FloatArray& x) {
            return certificate_dict(certify_pinv(matrix_from_array(m), matrix_from_array(x)));
        },
        py::arg("matrix"), py::arg("candidate"),
        "Residuals of the four Penrose equations for a claimed pseudoinverse.");

    mod.def(
        "rank",
        [](const FloatArray& a) { return matrix_rank(matrix_from_array(a)); },
        py::arg("matrix"));

    mod.def(
        "rank_rational",
        [](const StringRows& rows) { return matrix_rank(matrix_from_strings(rows)); },
        py::arg("matrix"));

    mod.def(
        "one_inverse_sample",
        [](const FloatArray& m, const FloatArray& w) {
            return array_from_matrix(one_inverse_sample(matrix_from_array(m),
                                                        matrix_from_array(w)));
        },
        py::arg("matrix"), py::arg("w"),
        "A {1}-inverse: pinv(M) + W - pinv(M) M W M pinv(M).");

    mod.def(
        "is_range_symmetric",
        [](const FloatArray& m) { return is_range_symmetric(matrix_from_array(m)); },
        py::arg("matrix"));

    mod.def(
        "range_included",
        [](const FloatArray& y, const FloatArray& x) {
            return verdict_dict(range_included(matrix_from_array(y), matrix_from_array(x)));
        },
        py::arg("y"), py::arg("x"), "Tests R(Y) within R(X) by projector residual.");

    mod.def(
        "condition_report",
        [](const FloatArray& m, std::size_t row_split, std::size_t col_split) {
            return report_dict(
                condition_report(BlockMatrix<double>(matrix_from_array(m), row_split, col_split)));
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        "All eight range-inclusion hypotheses of the block formulas.");

    mod.def(
        "pseudo_schur",
        [](const FloatArray& m, std::size_t rs, std::size_t cs, const std::string& pivot) {
            BlockMatrix<double> mb(matrix_from_array(m), rs, cs);
            const auto r = pivot == "a" ? pseudo_schur(mb) : complementary_pseudo_schur(mb);
            py::dict d;
            d["value"] = array_from_matrix(r.value);
            d["relative_to"] = pivot;
            d["hyp_range"] = verdict_dict(r.hyp_range);
            d["hyp_corange"] = verdict_dict(r.hyp_corange);
            return d;
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        py::arg("relative_to") = "a",
        "D - C pinv(A) B (relative_to='a') or A - B pinv(D) C (relative_to='d').");

    mod.def(
        "pppt",
        [](const FloatArray& m, std::size_t rs, std::size_t cs) {
            return array_from_matrix(pppt(BlockMatrix<double>(matrix_from_array(m), rs, cs)));
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        "Pseudo principal pivot transform relative to the leading block.");

    mod.def(
        "cpppt",
        [](const FloatArray& m, std::size_t rs, std::size_t cs) {
            return array_from_matrix(cpppt(BlockMatrix<double>(matrix_from_array(m), rs, cs)));
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        "Complementary transform relative to the trailing block.");

    mod.def(
        "pppt_rational",
        [](const StringRows& rows, std::size_t rs, std::size_t cs) {
            return strings_from_matrix(
                pppt(BlockMatrix<Rational>(matrix_from_strings(rows), rs, cs)));
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"));

    mod.def(
        "cpppt_rational",
        [](const StringRows& rows, std::size_t rs, std::size_t cs) {
            return strings_from_matrix(
                cpppt(BlockMatrix<Rational>(matrix_from_strings(rows), rs, cs)));
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"));

    mod.def(
        "block_pinv",
        [](const FloatArray& m, std::size_t rs, std::size_t cs, const std::string& formula) {
            return block_pinv_impl(BlockMatrix<double>(matrix_from_array(m), rs, cs), formula,
                                   &array_from_matrix);
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        py::arg("formula") = "f",
        "Block pseudoinverse by the via-F, via-G or mixed formula, with its "
        "hypothesis report and Penrose certificate.");

    mod.def(
        "block_pinv_rational",
        [](const StringRows& rows, std::size_t rs, std::size_t cs, const std::string& formula) {
            return block_pinv_impl(BlockMatrix<Rational>(matrix_from_strings(rows), rs, cs),
                                   formula, &strings_from_matrix);
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        py::arg("formula") = "f");

    mod.def(
        "quotient_identities",
        [](const FloatArray& m, std::size_t rs, std::size_t cs) {
            const auto q =
                quotient_identities(BlockMatrix<double>(matrix_from_array(m), rs, cs));
            py::dict d;
            d["g_identity_residual"] = q.g_identity_residual;
            d["f_identity_residual"] = q.f_identity_residual;
            d["ok"] = q.ok;
            d["sound"] = q.sound;
            d["failed"] = q.failed;
            return d;
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"));

    mod.def(
        "pppt_vs_cpppt",
        [](const FloatArray& m, std::size_t rs, std::size_t cs) {
            const auto cmp =
                pppt_pinv_vs_cpppt(BlockMatrix<double>(matrix_from_array(m), rs, cs));
            py::dict d;
            d["equal"] = cmp.equal;
            d["residual"] = cmp.residual;
            d["h"] = array_from_matrix(cmp.h);
            d["j"] = array_from_matrix(cmp.j);
            d["h_pinv"] = array_from_matrix(cmp.h_pinv);
            d["jh"] = array_from_matrix(cmp.jh);
            d["hj"] = array_from_matrix(cmp.hj);
            d["hypotheses_hold"] = cmp.hypotheses_hold;
            d["failed"] = cmp.failed;
            return d;
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        "pinv(pppt) against cpppt, with the JH and HJ products.");

    mod.def(
        "exchange_forward",
        [](const FloatArray& m, std::size_t rs, std::size_t cs, const std::vector<double>& x1,
           const std::vector<double>& x2, const std::string& pivot) {
            const auto r = exchange_forward(
                BlockMatrix<double>(matrix_from_array(m), rs, cs), x1, x2,
                pivot == "a" ? PivotSide::leading : PivotSide::trailing);
            py::dict d;
            d["x1"] = r.x1;
            d["x2"] = r.x2;
            d["y1"] = r.y1;
            d["y2"] = r.y2;
            d["verified"] = r.verified;
            d["residual"] = r.residual;
            return d;
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"), py::arg("x1"),
        py::arg("x2"), py::arg("pivot") = "a");

    mod.def(
        "gen_block",
        [](std::size_t m, std::size_t n, std::size_t s, std::size_t p,
           const std::string& required, std::uint64_t seed, int rank_a, int rank_d,
           bool rectangular, const std::string& route) {
            GenSpec spec;
            spec.m = m;
            spec.n = n;
            spec.s = s;
            spec.p = p;
            spec.required = parse_required(required);
            spec.seed = seed;
            spec.rank_a = rank_a;
            spec.rank_d = rank_d;
            spec.rectangular_complement = rectangular;
            spec.route = route == "blockdiag"   ? AllEightRoute::block_diagonal
                         : route == "rejection" ? AllEightRoute::rejection
                                                : AllEightRoute::nonsingular;
            const auto mb = gen_block<double>(spec);
            py::dict d;
            d["matrix"] = array_from_matrix(mb.whole());
            d["row_split"] = mb.row_split();
            d["col_split"] = mb.col_split();
            return d;
        },
        py::arg("m") = 2, py::arg("n") = 2, py::arg("s") = 2, py::arg("p") = 2,
        py::arg("required") = "none", py::arg("seed") = 0, py::arg("rank_a") = -1,
        py::arg("rank_d") = -1, py::arg("rectangular") = false,
        py::arg("route") = "nonsingular",
        "Seeded random block instance satisfying a required inclusion subset.");

    mod.def(
        "invariance_probe",
        [](const FloatArray& m, std::size_t rs, std::size_t cs, int samples,
           std::uint64_t seed) {
            const auto probe = invariance_probe(
                BlockMatrix<double>(matrix_from_array(m), rs, cs), samples, seed);
            py::dict d;
            d["invariant"] = probe.invariant;
            d["spread"] = probe.spread;
            return d;
        },
        py::arg("matrix"), py::arg("row_split"), py::arg("col_split"),
        py::arg("samples") = 50, py::arg("seed") = 0,
        "Spread of D - C X B over sampled {1}-inverses X of A.");

    mod.def(
        "verify_all",
        [](int trials, std::uint64_t seed, const std::string& mode) {
            if (mode == "rational") return verify_dict(verify_all<Rational>(trials, seed));
            if (mode == "float") return verify_dict(verify_all<double>(trials, seed));
            throw py::value_error("mode must be 'float' or 'rational'");
        },
        py::arg("trials") = 100, py::arg("seed") = 0, py::arg("mode") = "float",
        "Run the full theorem verification suite and return the report.");

    mod.attr("__version__") = "0.1.0";
}
