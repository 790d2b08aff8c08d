//
// pschur : end-to-end theorem verification.
//
// Each suite draws instances from the hypothesis class of one result and
// checks the result's claim against independent evaluation: the block
// formulas against pinv of the whole matrix plus Penrose certificates, the
// exchange identities against direct block arithmetic, H+ against J, the
// quotient identities, and Carlson invariance. Failures are data, not
// exceptions: every trial records its substream seed, so a failing seed
// reproduces the instance through gen_block.
//
#pragma once

#include <sstream>

#include "pschur/blockinv.hpp"
#include "pschur/fixtures.hpp"
#include "pschur/generate.hpp"

namespace pschur {

struct TheoremStats {
    std::string name;
    int trials = 0;
    int passes = 0;
    double worst_residual = 0.0;
    std::vector<std::uint64_t> failing_seeds;
    std::string note;

    bool ok() const { return passes == trials; }

    void record(bool pass, double residual, std::uint64_t seed) {
        ++trials;
        worst_residual = std::max(worst_residual, residual);
        if (pass)
            ++passes;
        else if (failing_seeds.size() < 16)
            failing_seeds.push_back(seed);
    }
};

struct VerifyReport {
    std::string backend;
    int trials = 0;
    std::uint64_t seed = 0;
    Tolerances tol;
    std::vector<TheoremStats> sections;

    bool all_passed() const {
        for (const auto& s : sections)
            if (!s.ok()) return false;
        return true;
    }

    const TheoremStats* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
};

namespace detail {

inline std::uint64_t section_seed(std::uint64_t seed, const char* name) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char* c = name; *c; ++c) h = (h ^ static_cast<unsigned char>(*c)) * 1099511628211ull;
    return seed ^ h;
}

template <class T>
std::vector<T> random_vector(Rng& rng, std::size_t len) {
    std::vector<T> v(len);
    for (auto& e : v) e = random_scalar<T>(rng);
    return v;
}

inline std::size_t dim(Rng& rng, long long hi = 4) {
    return static_cast<std::size_t>(rng.uniform_int(1, hi));
}

// accept-filtered deterministic draw; generation dead-ends count as rejects
template <class T, class Accept>
BlockMatrix<T> draw(const GenSpec& base, std::uint64_t trial_seed, const Tolerances& tol,
                    Accept&& accept) {
    for (std::uint64_t k = 0; k < 64; ++k) {
        GenSpec spec = base;
        spec.seed = Rng::substream(trial_seed, k).next();
        try {
            BlockMatrix<T> mb = gen_block<T>(spec, tol);
            if (accept(mb)) return mb;
        } catch (const GenerationError&) {
            continue;
        }
    }
    throw GenerationError("draw: no acceptable instance found");
}

// some dimension tuples make a required class unsatisfiable (a rank-k
// completion cannot fit); redraw dimensions in that case
template <class T, class MakeSpec, class Accept>
BlockMatrix<T> draw_with_dims(Rng& rng, const Tolerances& tol, MakeSpec&& make_spec,
                              Accept&& accept) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        GenSpec spec = make_spec(rng);
        try {
            return draw<T>(spec, rng.next(), tol, accept);
        } catch (const GenerationError&) {
            continue;
        }
    }
    throw GenerationError("draw_with_dims: no satisfiable dimensions found");
}

template <class T>
bool diag_match(const Matrix<T>& got, const Matrix<T>& top_left,
                const Matrix<T>& bottom_right, double eq_tol) {
    Matrix<T> expected(got.rows(), got.cols());
    expected.set_block(0, 0, top_left);
    expected.set_block(top_left.rows(), top_left.cols(), bottom_right);
    return matrices_match(got, expected, eq_tol);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// per-theorem suites
// ---------------------------------------------------------------------------

// Penrose certificates of pinv on random matrices, shapes up to 10x10
template <class T>
TheoremStats run_penrose_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "penrose_certificate";
    const std::uint64_t base = detail::section_seed(seed, "penrose_certificate");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        const std::size_t rows = detail::dim(rng, 10), cols = detail::dim(rng, 10);
        const std::size_t rank = static_cast<std::size_t>(
            rng.uniform_int(1, static_cast<long long>(std::min(rows, cols))));
        const Matrix<T> m = random_matrix_with_rank<T>(rng, rows, cols, rank);
        const auto cert = certify_pinv(m, pinv(m, tol), tol);
        stats.record(cert.ok, cert.max_residual(), sub);
    }
    return stats;
}

// exchange identities: both pivots, both directions, per trial
template <class T>
TheoremStats run_exchange_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "exchange_identities";
    const std::uint64_t base = detail::section_seed(seed, "exchange_identities");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        bool pass = true;
        double worst = 0.0;

        {
            GenSpec spec;
            spec.m = detail::dim(rng);
            spec.n = detail::dim(rng);
            spec.s = detail::dim(rng);
            spec.p = detail::dim(rng);
            spec.required = inclusions::leading_pair;
            spec.seed = rng.next();
            const auto mb = gen_block<T>(spec, tol);
            const auto fwd = exchange_forward(mb, detail::random_vector<T>(rng, mb.n()),
                                              detail::random_vector<T>(rng, mb.p()),
                                              PivotSide::leading, tol);
            pass = pass && fwd.verified;
            worst = std::max(worst, fwd.residual);

            // converse: make the premise true for an arbitrary (y1, x2)
            const auto y1 = detail::random_vector<T>(rng, mb.m());
            const auto x2 = detail::random_vector<T>(rng, mb.p());
            const Matrix<T> h = pppt(mb, tol);
            const Matrix<T> hy = h * stack_columns(column(y1), column(x2));
            const auto y2 = to_vector(hy.block(mb.n(), 0, mb.s(), 1));
            const auto bwd = exchange_backward(mb, y1, y2, x2, PivotSide::leading, tol);
            pass = pass && bwd.verified;
            worst = std::max(worst, bwd.residual);
        }
        {
            GenSpec spec;
            spec.m = detail::dim(rng);
            spec.n = detail::dim(rng);
            spec.s = detail::dim(rng);
            spec.p = detail::dim(rng);
            spec.required = inclusions::trailing_pair;
            spec.seed = rng.next();
            const auto mb = gen_block<T>(spec, tol);
            const auto fwd = exchange_forward(mb, detail::random_vector<T>(rng, mb.n()),
                                              detail::random_vector<T>(rng, mb.p()),
                                              PivotSide::trailing, tol);
            pass = pass && fwd.verified;
            worst = std::max(worst, fwd.residual);

            const auto x1 = detail::random_vector<T>(rng, mb.n());
            const auto y2 = detail::random_vector<T>(rng, mb.s());
            const Matrix<T> j = cpppt(mb, tol);
            const Matrix<T> jx = j * stack_columns(column(x1), column(y2));
            const auto y1 = to_vector(jx.block(0, 0, mb.m(), 1));
            const auto bwd = exchange_backward(mb, y1, y2, x1, PivotSide::trailing, tol);
            pass = pass && bwd.verified;
            worst = std::max(worst, bwd.residual);
        }
        stats.record(pass, worst, sub);
    }
    return stats;
}

// H+ = J plus the diagonal products, on four-inclusion instances
template <class T>
TheoremStats run_pppt_vs_cpppt_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "pppt_vs_cpppt";
    const std::uint64_t base = detail::section_seed(seed, "pppt_vs_cpppt");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        const double ratio = GenSpec{}.min_sv_ratio;
        const auto mb = detail::draw_with_dims<T>(
            rng, tol,
            [](Rng& r) {
                GenSpec spec;
                spec.m = detail::dim(r);
                spec.n = detail::dim(r);
                spec.s = detail::dim(r);
                spec.p = detail::dim(r);
                spec.required = inclusions::exchange_four;
                return spec;
            },
            [&](const BlockMatrix<T>& cand) {
                if constexpr (scalar_traits<T>::exact)
                    return true;
                else
                    return well_conditioned(pppt(cand, tol), ratio, tol);
            });

        const auto cmp = pppt_pinv_vs_cpppt(mb, tol);
        const Matrix<T> a = mb.a(), d = mb.d();
        const Matrix<T> ap = pinv(a, tol), dp = pinv(d, tol);
        bool pass = cmp.equal && cmp.hypotheses_hold;
        pass = pass && detail::diag_match(cmp.jh, a * ap, dp * d, tol.eq);
        pass = pass && detail::diag_match(cmp.hj, ap * a, d * dp, tol.eq);
        pass = pass && matrices_match(cmp.j * cmp.h * cmp.j, cmp.j, tol.eq);
        pass = pass && matrices_match(cmp.h * cmp.j * cmp.h, cmp.h, tol.eq);
        stats.record(pass, cmp.residual, sub);
    }
    return stats;
}

namespace detail {

// shared scaffold for the three block-inversion suites
template <class T, class Check>
TheoremStats run_formula_suite(const char* name, int trials, std::uint64_t seed,
                               const Tolerances& tol, unsigned required, bool square_pivot_ok,
                               Check&& check) {
    TheoremStats stats;
    stats.name = name;
    const std::uint64_t base = section_seed(seed, name);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        // alternate the square-complement and rank-completion constructions
        const bool rectangular = (t % 2 == 1) || !square_pivot_ok;
        const double ratio = GenSpec{}.min_sv_ratio;
        const auto mb = draw_with_dims<T>(
            rng, tol,
            [&](Rng& r) {
                GenSpec spec;
                spec.required = required;
                spec.rectangular_complement = rectangular;
                spec.m = dim(r);
                spec.n = dim(r);
                spec.s = dim(r);
                spec.p = dim(r);
                if (!rectangular) {
                    if (required == inclusions::leading_four) spec.p = spec.s;
                    if (required == inclusions::trailing_four) spec.n = spec.m;
                }
                return spec;
            },
            [&](const BlockMatrix<T>& cand) {
                return well_conditioned(cand.whole(), ratio, tol);
            });
        auto [pass, residual] = check(mb);
        stats.record(pass, residual, sub);
    }
    return stats;
}

}  // namespace detail

// via-F formula vs the pinv oracle, Penrose certificate, and the
// diagonal proof identities XM = diag(A+A, F+F), MX = diag(AA+, FF+)
template <class T>
TheoremStats run_via_f_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    return detail::run_formula_suite<T>(
        "block_pinv_via_f", trials, seed, tol, inclusions::leading_four, true,
        [&](const BlockMatrix<T>& mb) {
            const auto r = block_pinv_via_f(mb, tol);
            const Matrix<T> oracle = pinv(mb.whole(), tol);
            bool pass = r.sound && r.certificate.ok && matrices_match(r.value, oracle, tol.eq);
            const Matrix<T> a = mb.a();
            const Matrix<T> ap = pinv(a, tol);
            const Matrix<T> f = mb.d() - mb.c() * ap * mb.b();
            const Matrix<T> fp = pinv(f, tol);
            pass = pass && detail::diag_match(r.value * mb.whole(), ap * a, fp * f, tol.eq);
            pass = pass && detail::diag_match(mb.whole() * r.value, a * ap, f * fp, tol.eq);
            return std::pair{pass, std::max(r.certificate.max_residual(),
                                            frobenius_distance(r.value, oracle))};
        });
}

// via-G formula; verified by the certificate plus oracle agreement

template <class T>
TheoremStats run_via_g_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    return detail::run_formula_suite<T>(
        "block_pinv_via_g", trials, seed, tol, inclusions::trailing_four, true,
        [&](const BlockMatrix<T>& mb) {
            const auto r = block_pinv_via_g(mb, tol);
            const Matrix<T> oracle = pinv(mb.whole(), tol);
            const bool pass =
                r.sound && r.certificate.ok && matrices_match(r.value, oracle, tol.eq);
            return std::pair{pass, std::max(r.certificate.max_residual(),
                                            frobenius_distance(r.value, oracle))};
        });
}

// mixed formula on all-eight instances, both generator routes
template <class T>
TheoremStats run_mixed_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "block_pinv_mixed";
    const std::uint64_t base = detail::section_seed(seed, "block_pinv_mixed");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        GenSpec spec;
        spec.required = inclusions::all_eight;
        spec.route = (t % 2 == 0) ? AllEightRoute::nonsingular : AllEightRoute::block_diagonal;
        if (spec.route == AllEightRoute::nonsingular) {
            spec.m = spec.n = detail::dim(rng);
            spec.s = spec.p = detail::dim(rng);
        } else {
            spec.m = detail::dim(rng);
            spec.n = detail::dim(rng);
            spec.s = detail::dim(rng);
            spec.p = detail::dim(rng);
        }
        const auto mb = detail::draw<T>(spec, rng.next(), tol, [&](const BlockMatrix<T>& cand) {
            return well_conditioned(cand.whole(), spec.min_sv_ratio, tol);
        });
        const auto r = block_pinv_mixed(mb, tol);
        const Matrix<T> oracle = pinv(mb.whole(), tol);
        bool pass = r.sound && r.certificate.ok && matrices_match(r.value, oracle, tol.eq);
        // the mixed formula agrees with both one-sided formulas here
        pass = pass && matrices_match(r.value, block_pinv_via_f(mb, tol).value, tol.eq);
        pass = pass && matrices_match(r.value, block_pinv_via_g(mb, tol).value, tol.eq);
        stats.record(pass, std::max(r.certificate.max_residual(),
                                    frobenius_distance(r.value, oracle)),
                     sub);
    }
    return stats;
}

// G+ = A+ + A+BF+CA+ and F+ = D+ + D+CG+BD+ under all eight inclusions
template <class T>
TheoremStats run_quotient_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "quotient_identities";
    const std::uint64_t base = detail::section_seed(seed, "quotient_identities");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        GenSpec spec;
        spec.required = inclusions::all_eight;
        spec.route = (t % 2 == 0) ? AllEightRoute::nonsingular : AllEightRoute::block_diagonal;
        if (spec.route == AllEightRoute::nonsingular) {
            spec.m = spec.n = detail::dim(rng);
            spec.s = spec.p = detail::dim(rng);
        } else {
            spec.m = detail::dim(rng);
            spec.n = detail::dim(rng);
            spec.s = detail::dim(rng);
            spec.p = detail::dim(rng);
        }
        spec.seed = rng.next();
        const auto mb = gen_block<T>(spec, tol);
        const auto q = quotient_identities(mb, tol);
        stats.record(q.sound && q.ok,
                     std::max(q.g_identity_residual, q.f_identity_residual), sub);
    }
    return stats;
}

// Carlson invariance on instances satisfying the two leading inclusions
template <class T>
TheoremStats run_invariance_suite(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "carlson_invariance";
    const std::uint64_t base = detail::section_seed(seed, "carlson_invariance");
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        GenSpec spec;
        spec.m = detail::dim(rng);
        spec.n = detail::dim(rng);
        spec.s = detail::dim(rng);
        spec.p = detail::dim(rng);
        spec.required = inclusions::leading_pair;
        spec.seed = rng.next();
        const auto mb = gen_block<T>(spec, tol);
        const auto probe = invariance_probe(mb, 6, rng.next(), tol);
        // the common value is the pseudo Schur complement itself
        const Matrix<T> w = random_matrix<T>(rng, mb.n(), mb.m());
        const Matrix<T> x = one_inverse_sample(mb.a(), w, tol);
        const bool same_as_f =
            matrices_match(mb.d() - mb.c() * x * mb.b(), pseudo_schur(mb, tol).value, tol.eq);
        stats.record(probe.invariant && same_as_f, probe.spread, sub);
    }
    return stats;
}

// dropping incl_C_D must surface an H+ != J case quickly; the worked 3x3
// counterexample guarantees the class is nonempty
template <class T>
TheoremStats run_counterexample_search(int max_trials, std::uint64_t seed,
                                       const Tolerances& tol = {}) {
    TheoremStats stats;
    stats.name = "hypothesis_dropping";
    const std::uint64_t base = detail::section_seed(seed, "hypothesis_dropping");
    for (int t = 0; t < max_trials; ++t) {
        const std::uint64_t sub = Rng::substream(base, static_cast<std::uint64_t>(t)).next();
        Rng rng(sub);
        GenSpec spec;
        spec.m = detail::dim(rng);
        spec.n = detail::dim(rng);
        spec.s = detail::dim(rng);
        spec.p = detail::dim(rng);
        spec.required = inclusions::leading_pair;
        // force a deficient trailing block so R(C) in R(D) genuinely fails
        spec.rank_d = static_cast<int>(
            rng.uniform_int(0, static_cast<long long>(std::min(spec.s, spec.p)) - 1));
        spec.seed = rng.next();
        const auto mb = gen_block<T>(spec, tol);
        const auto rep = condition_report(mb, tol);
        if (rep.incl_C_D.holds) continue;  // rare: deficient D still covers R(C)
        const auto cmp = pppt_pinv_vs_cpppt(mb, tol);
        stats.trials = t + 1;
        if (!cmp.equal) {
            stats.passes = stats.trials;
            stats.worst_residual = cmp.residual;
            std::ostringstream note;
            note << "counterexample at trial " << t;
            stats.note = note.str();
            return stats;
        }
    }
    stats.trials = max_trials;
    stats.passes = 0;
    stats.note = "no counterexample found";
    return stats;
}

// ---------------------------------------------------------------------------
// fixture checks
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
bool fixture_match(const Matrix<T>& got, const Matrix<T>& want) {
    if constexpr (scalar_traits<T>::exact)
        return got == want;
    else
        return max_abs_diff(got, want) <= 1e-12;
}

}  // namespace detail

template <class T>
std::vector<TheoremStats> run_fixture_checks(const Tolerances& tol = {}) {
    std::vector<TheoremStats> out;

    {
        TheoremStats s;
        s.name = "fixture_example1";
        const auto mb = example1_block<T>();
        bool pass = matrix_rank(mb.whole()) == 2;
        pass = pass && detail::fixture_match(pinv(mb.a(), tol), example1_a_pinv<T>());
        pass = pass && detail::fixture_match(pseudo_schur(mb, tol).value,
                                             Matrix<T>{{scalar_traits<T>::from_int(1)}});
        pass = pass && detail::fixture_match(complementary_pseudo_schur(mb, tol).value, mb.a());
        const auto cmp = pppt_pinv_vs_cpppt(mb, tol);
        pass = pass && detail::fixture_match(cmp.h, example1_h<T>());
        pass = pass && detail::fixture_match(cmp.j, example1_j<T>());
        pass = pass && detail::fixture_match(cmp.h_pinv, example1_h_pinv<T>());
        pass = pass && !cmp.equal;  // the expected negative
        const auto rep = condition_report(mb, tol);
        pass = pass && rep.incl_B_A.holds && rep.incl_Ct_At.holds && !rep.incl_C_D.holds;
        s.record(pass, cmp.residual, 0);
        s.note = "expects H+ != J";
        out.push_back(std::move(s));
    }

    {
        TheoremStats s;
        s.name = "fixture_example2";
        const auto mb = example2_block<T>();
        const auto r = block_pinv_via_f(mb, tol);
        bool pass = r.sound && r.certificate.ok;
        pass = pass && detail::fixture_match(r.value, example2_pinv<T>());
        pass = pass && matrices_match(r.value, pinv(mb.whole(), tol), tol.eq);
        pass = pass && condition_report(mb, tol).a_side_holds();
        s.record(pass, r.certificate.max_residual(), 0);
        out.push_back(std::move(s));
    }

    {
        TheoremStats s;
        s.name = "fixture_carlson_violator";
        const auto good = example1_block<T>();
        const auto bad = carlson_violator_block<T>();
        const auto probe_good = invariance_probe(good, 50, 7070, tol);
        const auto probe_bad = invariance_probe(bad, 50, 7171, tol);
        const bool pass = probe_good.invariant && !probe_bad.invariant &&
                          probe_bad.spread > 0.1;
        s.record(pass, probe_good.spread, 0);
        s.note = "violator spread " + std::to_string(probe_bad.spread);
        out.push_back(std::move(s));
    }

    return out;
}

// ---------------------------------------------------------------------------
// the aggregate
// ---------------------------------------------------------------------------

template <class T>
VerifyReport verify_all(int trials, std::uint64_t seed, const Tolerances& tol = {}) {
    VerifyReport report;
    report.backend = scalar_traits<T>::backend_name;
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;

    for (auto& s : run_fixture_checks<T>(tol)) report.sections.push_back(std::move(s));
    report.sections.push_back(run_exchange_suite<T>(trials, seed, tol));
    report.sections.push_back(run_pppt_vs_cpppt_suite<T>(trials, seed, tol));
    report.sections.push_back(run_via_f_suite<T>(trials, seed, tol));
    report.sections.push_back(run_via_g_suite<T>(trials, seed, tol));
    report.sections.push_back(run_mixed_suite<T>(trials, seed, tol));
    report.sections.push_back(run_quotient_suite<T>(trials, seed, tol));
    report.sections.push_back(run_invariance_suite<T>(trials, seed, tol));
    report.sections.push_back(run_penrose_suite<T>(trials, seed, tol));
    // capped per the nonemptiness guarantee; trials = 0 is fixtures-only mode
    report.sections.push_back(run_counterexample_search<T>(std::min(trials, 200), seed, tol));
    return report;
}

inline std::string to_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "backend: " << report.backend << "  trials: " << report.trials
       << "  seed: " << report.seed << "\n";
    for (const auto& s : report.sections) {
        os << (s.ok() ? "  pass  " : "  FAIL  ") << s.name << "  " << s.passes << "/"
           << s.trials << "  worst residual " << s.worst_residual;
        if (!s.failing_seeds.empty()) {
            os << "  failing seeds:";
            for (auto f : s.failing_seeds) os << " " << f;
        }
        if (!s.note.empty()) os << "  (" << s.note << ")";
        os << "\n";
    }
    os << (report.all_passed() ? "all sections passed" : "FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace pschur
