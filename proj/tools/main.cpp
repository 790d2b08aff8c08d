//
// pschur command line tool.
//
// Subcommands: pinv, schur, ppt, block-pinv, check, verify, gen.
// Exit codes: 0 success; 1 parse or shape error; 2 hypothesis violation
// under --strict; 3 certificate failure (internal oracle disagreement).
//
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pschur/io.hpp"
#include "pschur/pschur.hpp"

namespace {

using nlohmann::json;
using namespace pschur;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitCertificate = 3;

struct GlobalOptions {
    std::string mode = "float";
    std::string format = "text";
    bool strict = false;
    double tol_override = -1.0;

    bool rational() const { return mode == "rational"; }
    bool json_out() const { return format == "json"; }

    Tolerances tolerances() const {
        Tolerances t;
        if (tol_override >= 0.0) {
            t.eq = tol_override;
            t.incl = tol_override;
        }
        return t;
    }
};

struct CommandArgs {
    std::string file;
    std::string relative_to = "a";
    std::string formula = "f";
    int trials = 100;
    std::uint64_t seed = 0;
    // gen
    std::vector<std::size_t> dims = {2, 2, 2, 2};
    int rank_a = -1, rank_d = -1;
    std::string require = "none";
    std::string route = "nonsingular";
    bool rectangular = false;
    std::string out_file = "-";
};

template <class T>
void print_matrix(const GlobalOptions& g, const Matrix<T>& m,
                  std::optional<std::pair<std::size_t, std::size_t>> split = std::nullopt,
                  std::ostream& os = std::cout) {
    if (g.json_out())
        os << io::to_json(m, split).dump(2) << "\n";
    else
        io::to_text(os, m, split);
}

void print_report(const GlobalOptions& g, const InclusionReport& rep) {
    if (g.json_out()) {
        std::cout << io::to_json(rep).dump(2) << "\n";
        return;
    }
    const auto verdicts = rep.all();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        std::cout << InclusionReport::names[i] << ": "
                  << (verdicts[i]->holds ? "true" : "false")
                  << "  residual " << verdicts[i]->residual;
        if (verdicts[i]->marginal) std::cout << "  (marginal)";
        std::cout << "\n";
    }
    std::cout << "a_side: " << (rep.a_side_holds() ? "true" : "false")
              << "  d_side: " << (rep.d_side_holds() ? "true" : "false")
              << "  all_eight: " << (rep.all_hold() ? "true" : "false") << "\n";
}

void print_certificate_text(const PinvCertificate& cert) {
    std::cout << "certificate: r1 " << cert.r1 << "  r2 " << cert.r2 << "  r3 " << cert.r3
              << "  r4 " << cert.r4 << "  tol " << cert.tol
              << "  ok " << (cert.ok ? "true" : "false") << "\n";
}

// ---------------------------------------------------------------------------
// subcommands, templated over the scalar backend
// ---------------------------------------------------------------------------

template <class T>
int cmd_pinv(const GlobalOptions& g, const CommandArgs& args) {
    const auto file = io::read_file<T>(args.file);
    const Tolerances tol = g.tolerances();
    const Matrix<T> x = pinv(file.matrix, tol);
    const auto cert = certify_pinv(file.matrix, x, tol);
    if (g.json_out()) {
        json j;
        j["value"] = io::to_json(x);
        j["certificate"] = io::to_json(cert);
        std::cout << j.dump(2) << "\n";
    } else {
        print_matrix(g, x);
        print_certificate_text(cert);
    }
    return cert.ok ? kExitOk : kExitCertificate;
}

template <class T>
int cmd_schur(const GlobalOptions& g, const CommandArgs& args) {
    const auto file = io::read_file<T>(args.file);
    const auto mb = file.block();
    const Tolerances tol = g.tolerances();
    const auto result = args.relative_to == "a" ? pseudo_schur(mb, tol)
                                                : complementary_pseudo_schur(mb, tol);
    const char* first = args.relative_to == "a" ? "incl_B_A" : "incl_C_D";
    const char* second = args.relative_to == "a" ? "incl_Ct_At" : "incl_Bt_Dt";
    if (g.json_out()) {
        json j;
        j["relative_to"] = args.relative_to;
        j["value"] = io::to_json(result.value);
        j["hypotheses"] = {{first, io::to_json(result.hyp_range)},
                           {second, io::to_json(result.hyp_corange)}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_matrix(g, result.value);
        std::cout << first << ": " << (result.hyp_range.holds ? "true" : "false") << "  "
                  << second << ": " << (result.hyp_corange.holds ? "true" : "false") << "\n";
    }
    if (g.strict && !(result.hyp_range.holds && result.hyp_corange.holds))
        return kExitHypothesis;
    return kExitOk;
}

template <class T>
int cmd_ppt(const GlobalOptions& g, const CommandArgs& args) {
    const auto file = io::read_file<T>(args.file);
    const auto mb = file.block();
    const Tolerances tol = g.tolerances();
    const Matrix<T> value = args.relative_to == "a" ? pppt(mb, tol) : cpppt(mb, tol);
    // the transform's own natural split rides along
    const auto split = args.relative_to == "a"
                           ? std::pair{mb.n(), mb.m()}
                           : std::pair{mb.m(), mb.n()};
    print_matrix(g, value, split);
    return kExitOk;
}

template <class T>
int cmd_block_pinv(const GlobalOptions& g, const CommandArgs& args) {
    const auto file = io::read_file<T>(args.file);
    const auto mb = file.block();
    const Tolerances tol = g.tolerances();
    const BlockFormula formula = args.formula == "f"   ? BlockFormula::via_f
                                 : args.formula == "g" ? BlockFormula::via_g
                                                       : BlockFormula::mixed;
    const auto r = block_pinv(mb, formula, tol);
    if (g.json_out()) {
        json j;
        j["formula"] = formula_name(formula);
        j["sound"] = r.sound;
        j["failed_hypotheses"] = r.failed;
        j["value"] = io::to_json(r.value);
        j["certificate"] = io::to_json(r.certificate);
        j["hypotheses"] = io::to_json(r.hypotheses);
        std::cout << j.dump(2) << "\n";
    } else {
        print_matrix(g, r.value);
        std::cout << "formula: " << formula_name(formula)
                  << "  sound: " << (r.sound ? "true" : "false");
        if (!r.failed.empty()) {
            std::cout << "  failed:";
            for (const auto& name : r.failed) std::cout << " " << name;
        }
        std::cout << "\n";
        print_certificate_text(r.certificate);
    }
    if (g.strict && !r.sound) return kExitHypothesis;
    // a sound result whose certificate fails means the implementation and
    // the oracle disagree
    if (r.sound && !r.certificate.ok) return kExitCertificate;
    return kExitOk;
}

template <class T>
int cmd_check(const GlobalOptions& g, const CommandArgs& args) {
    const auto file = io::read_file<T>(args.file);
    const auto rep = condition_report(file.block(), g.tolerances());
    print_report(g, rep);
    if (g.strict && !rep.all_hold()) return kExitHypothesis;
    return kExitOk;
}

template <class T>
int cmd_verify(const GlobalOptions& g, const CommandArgs& args) {
    const auto report = verify_all<T>(args.trials, args.seed, g.tolerances());
    if (g.json_out())
        std::cout << io::to_json(report).dump(2) << "\n";
    else
        std::cout << to_text(report);
    if (!report.all_passed()) return g.strict ? kExitHypothesis : kExitOk;
    return kExitOk;
}

unsigned parse_required(const std::string& name) {
    if (name == "none") return inclusions::none;
    if (name == "a2") return inclusions::leading_pair;
    if (name == "a4") return inclusions::leading_four;
    if (name == "d2") return inclusions::trailing_pair;
    if (name == "d4") return inclusions::trailing_four;
    if (name == "x4") return inclusions::exchange_four;
    if (name == "all8") return inclusions::all_eight;
    throw CLI::ValidationError("--require", "unknown inclusion subset '" + name + "'");
}

template <class T>
int cmd_gen(const GlobalOptions& g, const CommandArgs& args) {
    GenSpec spec;
    spec.m = args.dims[0];
    spec.n = args.dims[1];
    spec.s = args.dims[2];
    spec.p = args.dims[3];
    spec.rank_a = args.rank_a;
    spec.rank_d = args.rank_d;
    spec.required = parse_required(args.require);
    spec.route = args.route == "blockdiag"   ? AllEightRoute::block_diagonal
                 : args.route == "rejection" ? AllEightRoute::rejection
                                             : AllEightRoute::nonsingular;
    spec.rectangular_complement = args.rectangular;
    spec.seed = args.seed;
    const auto mb = gen_block<T>(spec, g.tolerances());
    const auto split = std::pair{mb.row_split(), mb.col_split()};
    if (args.out_file == "-") {
        print_matrix(g, mb.whole(), split);
    } else {
        std::ofstream out(args.out_file);
        if (!out) throw io::ParseError("cannot open '" + args.out_file + "' for writing");
        if (g.json_out())
            out << io::to_json(mb.whole(), split).dump(2) << "\n";
        else
            io::to_text(out, mb.whole(), split);
    }
    return kExitOk;
}

template <class T>
int dispatch(const std::string& cmd, const GlobalOptions& g, const CommandArgs& args) {
    if (cmd == "pinv") return cmd_pinv<T>(g, args);
    if (cmd == "schur") return cmd_schur<T>(g, args);
    if (cmd == "ppt") return cmd_ppt<T>(g, args);
    if (cmd == "block-pinv") return cmd_block_pinv<T>(g, args);
    if (cmd == "check") return cmd_check<T>(g, args);
    if (cmd == "verify") return cmd_verify<T>(g, args);
    if (cmd == "gen") return cmd_gen<T>(g, args);
    throw std::logic_error("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-matrix generalized inverses: pseudo Schur complements, "
                 "pivot transforms, and certified block pseudoinversion"};
    app.require_subcommand(1);

    GlobalOptions g;
    CommandArgs args;

    app.add_option("--mode", g.mode, "scalar backend")
        ->check(CLI::IsMember({"float", "rational"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol_override,
                   "override the equality and inclusion tolerances (float mode)");
    app.add_flag("--strict", g.strict, "exit 2 when gating hypotheses fail");

    auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse of a matrix file");
    pinv_cmd->add_option("file", args.file, "matrix file (JSON or text)")->required();

    auto* schur_cmd = app.add_subcommand("schur", "pseudo Schur complement of a block file");
    schur_cmd->add_option("file", args.file)->required();
    schur_cmd->add_option("--relative-to", args.relative_to, "pivot block")
        ->check(CLI::IsMember({"a", "d"}))
        ->capture_default_str();

    auto* ppt_cmd =
        app.add_subcommand("ppt", "pseudo principal pivot transform of a block file");
    ppt_cmd->add_option("file", args.file)->required();
    ppt_cmd->add_option("--relative-to", args.relative_to, "pivot block")
        ->check(CLI::IsMember({"a", "d"}))
        ->capture_default_str();

    auto* bp_cmd = app.add_subcommand("block-pinv", "block pseudoinverse formulas");
    bp_cmd->add_option("file", args.file)->required();
    bp_cmd->add_option("--formula", args.formula, "which block formula")
        ->check(CLI::IsMember({"f", "g", "mixed"}))
        ->required();

    auto* check_cmd =
        app.add_subcommand("check", "evaluate the eight range-inclusion hypotheses");
    check_cmd->add_option("file", args.file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the theorem verification suite");
    verify_cmd->add_option("--trials", args.trials, "trials per section")
        ->capture_default_str();
    verify_cmd->add_option("--seed", args.seed, "base seed")->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "generate a random block instance");
    gen_cmd->add_option("--dims", args.dims, "block dimensions m n s p")
        ->expected(4);
    gen_cmd->add_option("--rank-a", args.rank_a, "rank of the leading block");
    gen_cmd->add_option("--rank-d", args.rank_d, "rank of the trailing block");
    gen_cmd->add_option("--require", args.require,
                        "inclusion subset: none|a2|a4|d2|d4|x4|all8")
        ->capture_default_str();
    gen_cmd->add_option("--route", args.route, "all-eight construction route")
        ->check(CLI::IsMember({"nonsingular", "blockdiag", "rejection"}))
        ->capture_default_str();
    gen_cmd->add_flag("--rect", args.rectangular, "rank-completion trailing construction");
    gen_cmd->add_option("--seed", args.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("-o,--out", args.out_file, "output file, '-' for stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // help/version exit cleanly; anything else is a usage error
        return code == 0 ? kExitOk : kExitParse;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (g.rational()) return dispatch<Rational>(cmd, g, args);
        return dispatch<double>(cmd, g, args);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
