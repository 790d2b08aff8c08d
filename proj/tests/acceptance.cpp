// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, in code.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pschur/pschur.hpp"

namespace {

using namespace pschur;
using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> body;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool float_close(const Matrix<double>& got, const Matrix<Rational>& want, double tol) {
    return max_abs_diff(got, to_float(want)) <= tol;
}

// --- criterion 1: worked 3x3 counterexample, exact and float, under 1 s ---
bool criterion1(std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;

    const auto mb = example1_block<Rational>();
    const auto cmp = pppt_pinv_vs_cpppt(mb);
    ok = ok && cmp.h == example1_h<Rational>();
    ok = ok && cmp.j == example1_j<Rational>();
    ok = ok && cmp.h_pinv == example1_h_pinv<Rational>();
    ok = ok && certify_pinv(cmp.h, cmp.h_pinv).ok;
    ok = ok && !cmp.equal;  // H+ != J

    const auto mbf = example1_block<double>();
    const auto cmpf = pppt_pinv_vs_cpppt(mbf);
    ok = ok && float_close(cmpf.h, example1_h<Rational>(), 1e-12);
    ok = ok && float_close(cmpf.j, example1_j<Rational>(), 1e-12);
    ok = ok && float_close(cmpf.h_pinv, example1_h_pinv<Rational>(), 1e-12);
    ok = ok && !cmpf.equal;

    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 1.0;
    detail = "H, J, H+ exact; H+ != J; " + std::to_string(elapsed) + " s";
    return ok;
}

// --- criterion 2: worked 4x4 via-F pseudoinverse, exact and float ---
bool criterion2(std::string& detail) {
    bool ok = true;
    const auto mb = example2_block<Rational>();
    const auto r = block_pinv_via_f(mb);
    ok = ok && r.sound && r.certificate.ok;
    ok = ok && r.value == example2_pinv<Rational>();
    ok = ok && r.value == pinv(mb.whole());

    const auto mbf = example2_block<double>();
    const auto rf = block_pinv_via_f(mbf);
    ok = ok && rf.sound && rf.certificate.ok;
    ok = ok && float_close(rf.value, example2_pinv<Rational>(), 1e-12);
    ok = ok && matrices_match(rf.value, pinv(mbf.whole()), 1e-12);
    detail = "via-F matches the fixed pseudoinverse and the SVD oracle";
    return ok;
}

// shared scaffold for criteria 3 and 4
bool formula_criterion(TheoremStats (*float_suite)(int, std::uint64_t, const Tolerances&),
                       TheoremStats (*exact_suite)(int, std::uint64_t, const Tolerances&),
                       std::string& detail) {
    const auto t0 = Clock::now();
    const auto sf = float_suite(1000, 20240801, Tolerances{});
    const auto sr = exact_suite(100, 20240802, Tolerances{});
    const double elapsed = seconds_since(t0);
    const bool ok = sf.ok() && sr.ok() && sr.worst_residual == 0.0 && elapsed < 60.0;
    detail = "float " + std::to_string(sf.passes) + "/1000, rational " +
             std::to_string(sr.passes) + "/100 exact, " + std::to_string(elapsed) + " s";
    return ok;
}

bool criterion3(std::string& detail) {
    return formula_criterion(&run_via_f_suite<double>, &run_via_f_suite<Rational>, detail);
}

bool criterion4(std::string& detail) {
    std::string d1, d2;
    const bool viag_ok =
        formula_criterion(&run_via_g_suite<double>, &run_via_g_suite<Rational>, d1);
    const bool mixed_ok =
        formula_criterion(&run_mixed_suite<double>, &run_mixed_suite<Rational>, d2);
    detail = "via-G: " + d1 + "; mixed: " + d2;
    return viag_ok && mixed_ok;
}

// --- criterion 5: H+ = J with the diagonal products ---
bool criterion5(std::string& detail) {
    Tolerances tol;  // eq = 1e-9 pinned
    const auto sf = run_pppt_vs_cpppt_suite<double>(1000, 20240803, tol);
    const auto sr = run_pppt_vs_cpppt_suite<Rational>(100, 20240804, tol);
    detail = "float " + std::to_string(sf.passes) + "/1000, rational " +
             std::to_string(sr.passes) + "/100 exact";
    return sf.ok() && sr.ok() && sr.worst_residual == 0.0;
}

// --- criterion 6: exchange identities, both variants, both directions ---
bool criterion6(std::string& detail) {
    Tolerances tol;  // relative inf-norm 1e-9 pinned through tol.eq
    const auto s = run_exchange_suite<double>(1000, 20240805, tol);
    detail = std::to_string(s.passes) + "/1000 trials, worst residual " +
             std::to_string(s.worst_residual);
    return s.ok() && s.worst_residual <= 1e-9;
}

// --- criterion 7: quotient identities exactly zero on rational instances ---
bool criterion7(std::string& detail) {
    const auto s = run_quotient_suite<Rational>(100, 20240806, Tolerances{});
    detail = std::to_string(s.passes) + "/100 exact, worst residual " +
             std::to_string(s.worst_residual);
    return s.ok() && s.worst_residual == 0.0;
}

// --- criterion 8: Carlson invariance and its violator ---
bool criterion8(std::string& detail) {
    bool ok = true;
    const auto good = invariance_probe(example1_block<double>(), 50, 813);
    ok = ok && good.invariant && good.spread <= 1e-10;
    const auto goodr = invariance_probe(example1_block<Rational>(), 50, 813);
    ok = ok && goodr.invariant && goodr.spread == 0.0;

    const auto bad = invariance_probe(carlson_violator_block<double>(), 50, 814);
    ok = ok && !bad.invariant && bad.spread > 0.1;
    const auto bad2 = invariance_probe(carlson_violator_block<double>(), 2, 815);
    ok = ok && bad2.spread > 0.1;
    const auto badr = invariance_probe(carlson_violator_block<Rational>(), 50, 816);
    ok = ok && !badr.invariant && badr.spread > 0.1;

    detail = "fixture spread " + std::to_string(good.spread) + ", violator spread " +
             std::to_string(bad.spread);
    return ok;
}

// --- criterion 9: Penrose certificates at scale, both backends ---
bool criterion9(std::string& detail) {
    const auto sf = run_penrose_suite<double>(1000, 20240807, Tolerances{});
    const auto sr = run_penrose_suite<Rational>(1000, 20240808, Tolerances{});
    detail = "float " + std::to_string(sf.passes) + "/1000 (worst " +
             std::to_string(sf.worst_residual) + "), rational " +
             std::to_string(sr.passes) + "/1000 exact";
    return sf.ok() && sr.ok() && sr.worst_residual == 0.0;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. example1 reproduction (H, J, H+ exact; H+ != J; < 1 s)", criterion1},
        {"2. example2 block pseudoinverse via F", criterion2},
        {"3. via-F property suite (1000 float / 100 rational, < 60 s)", criterion3},
        {"4. via-G and mixed property suites, identical protocol", criterion4},
        {"5. H+ = J with diagonal products (1000 float / 100 rational)", criterion5},
        {"6. exchange identities, both variants and directions (1000)", criterion6},
        {"7. quotient identities exactly zero (100 rational)", criterion7},
        {"8. invariance of D - C X B and its violator fixture", criterion8},
        {"9. Penrose certificates (1000 per backend, shapes to 10x10)", criterion9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s  --  %s\n", ok ? "PASS" : "FAIL", c.label.c_str(),
                    detail.c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
