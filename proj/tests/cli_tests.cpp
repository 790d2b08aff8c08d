// End-to-end tests driving the built binary. The harness passes the binary
// and fixtures locations through PSCHUR_BIN and PSCHUR_FIXTURES.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string bin_path() {
    const char* p = std::getenv("PSCHUR_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PSCHUR_BIN not set");
    return p;
}

std::string fixture(const std::string& name) {
    const char* p = std::getenv("PSCHUR_FIXTURES");
    REQUIRE_MESSAGE(p != nullptr, "PSCHUR_FIXTURES not set");
    return std::string(p) + "/" + name;
}

RunResult run(const std::string& args) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/pschur_cli_out.txt";
    const std::string cmd = bin_path() + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("pinv echoes the identity") {
    const auto path = write_temp("identity.json",
                                 R"({"rows":3,"cols":3,"data":[[1,0,0],[0,1,0],[0,0,1]]})");
    auto r = run("--mode rational --format json pinv " + path);
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["value"]["data"][0][0] == "1");
    CHECK(j["value"]["data"][0][1] == "0");
    CHECK(j["certificate"]["ok"] == true);
}

TEST_CASE("check reports the worked counterexample hypotheses") {
    auto r = run("--format json check " + fixture("example1.json"));
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["incl_B_A"]["holds"] == true);
    CHECK(j["incl_Ct_At"]["holds"] == true);
    CHECK(j["incl_C_D"]["holds"] == false);

    // strict mode turns the failed hypothesis into exit 2
    auto strict = run("--strict --format json check " + fixture("example1.json"));
    CHECK(strict.exit_code == 2);

    auto rational = run("--mode rational --format json check " + fixture("example1.json"));
    CHECK(rational.exit_code == 0);
    auto jr = json::parse(rational.out);
    CHECK(jr["incl_C_D"]["holds"] == false);
}

TEST_CASE("block-pinv via F reproduces the worked 4x4 exactly") {
    auto r = run("--mode rational --format json block-pinv " + fixture("example2.json") +
                 " --formula f");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["sound"] == true);
    CHECK(j["certificate"]["ok"] == true);
    auto& d = j["value"]["data"];
    CHECK(d[0][3] == "-1/2");
    CHECK(d[1][3] == "1/2");
    CHECK(d[2][0] == "1/15");
    CHECK(d[2][1] == "2/15");
    CHECK(d[2][2] == "2/3");
    CHECK(d[3][0] == "-1/15");
    CHECK(d[3][1] == "-2/15");
    CHECK(d[3][2] == "1/3");
    CHECK(d[3][3] == "0");
}

TEST_CASE("rational output never shows decimal approximations") {
    auto r = run("--mode rational --format json ppt " + fixture("example1.json"));
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    for (const auto& row : j["data"])
        for (const auto& e : row) {
            REQUIRE(e.is_string());
            CHECK(e.get<std::string>().find('.') == std::string::npos);
        }
    CHECK(j["data"][0][0] == "1/10");
    CHECK(j["data"][2][2] == "1");
}

TEST_CASE("ppt relative to d gives the complementary transform") {
    auto r = run("--mode rational --format json ppt " + fixture("example1.json") +
                 " --relative-to d");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["data"][0][0] == "1");
    CHECK(j["data"][2][2] == "0");
}

TEST_CASE("schur subcommand surfaces hypotheses and strictness") {
    auto r = run("--mode rational --format json schur " + fixture("example1.json"));
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["relative_to"] == "a");
    CHECK(j["value"]["data"][0][0] == "1");
    CHECK(j["hypotheses"]["incl_B_A"]["holds"] == true);

    auto strict = run("--strict --mode rational schur " + fixture("example1.json") +
                      " --relative-to d");
    CHECK(strict.exit_code == 2);
}

TEST_CASE("block-pinv under violated hypotheses: flagged, strict exits 2") {
    auto r = run("--mode rational --format json block-pinv " + fixture("example1.json") +
                 " --formula g");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["sound"] == false);
    CHECK(j["certificate"]["ok"] == false);

    auto strict = run("--strict --mode rational block-pinv " + fixture("example1.json") +
                      " --formula g");
    CHECK(strict.exit_code == 2);
}

TEST_CASE("parse errors exit 1 with a diagnostic") {
    const auto path = write_temp("broken.json", R"({"rows":2,"cols":2,"data":[[1,2]]})");
    auto r = run("pinv " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error") != std::string::npos);

    auto missing = run("pinv /nonexistent/file.json");
    CHECK(missing.exit_code == 1);

    auto usage = run("pinv");
    CHECK(usage.exit_code == 1);
}

TEST_CASE("gen output re-parses bit-identically and passes its own check") {
    const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string f1 = tmp + "/gen1.json";
    const std::string f2 = tmp + "/gen2.json";
    auto r1 = run("--mode rational --format json gen --require a4 --dims 2 2 2 2 --seed 11 -o " + f1);
    CHECK(r1.exit_code == 0);
    auto r2 = run("--mode rational --format json gen --require a4 --dims 2 2 2 2 --seed 11 -o " + f2);
    CHECK(r2.exit_code == 0);

    std::ifstream a(f1), b(f2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());  // determinism in the seed

    auto parsed = json::parse(sa.str());
    CHECK(parsed["row_split"] == 2);

    // the generated instance satisfies the requested subset
    auto chk = run("--mode rational --format json check " + f1);
    CHECK(chk.exit_code == 0);
    auto jc = json::parse(chk.out);
    CHECK(jc["a_side"] == true);

    // float gen round-trips through shortest decimals
    const std::string f3 = tmp + "/gen3.json";
    auto r3 = run("--format json gen --require x4 --dims 2 2 2 2 --seed 3 -o " + f3);
    CHECK(r3.exit_code == 0);
    auto chk3 = run("--format json check " + f3);
    auto jc3 = json::parse(chk3.out);
    CHECK(jc3["incl_B_A"]["holds"] == true);
    CHECK(jc3["incl_C_D"]["holds"] == true);
}

TEST_CASE("verify subcommand emits a full report") {
    auto r = run("--format json verify --trials 5 --seed 21");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["all_passed"] == true);
    CHECK(j["backend"] == "float64");
    CHECK(j["sections"].size() >= 10);

    auto text = run("verify --trials 3 --seed 4");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("exchange_identities") != std::string::npos);
    CHECK(text.out.find("all sections passed") != std::string::npos);
}

TEST_CASE("json output is stable under flag reordering") {
    auto a = run("--mode rational --format json check " + fixture("example1.json"));
    auto b = run("--format json --mode rational check " + fixture("example1.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto c = run("--format json verify --trials 4 --seed 9");
    auto d = run("--format json verify --seed 9 --trials 4");
    CHECK(c.out == d.out);
}

TEST_CASE("tolerance override is accepted") {
    auto r = run("--tol 1e-6 --format json check " + fixture("example2.json"));
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["a_side"] == true);
}

TEST_CASE("text format input and output") {
    const auto path = write_temp("block.txt", "# split 2 2\n1 -1 1\n2 -2 2\n-1 1 0\n");
    auto r = run("--mode rational check " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("incl_C_D: false") != std::string::npos);

    auto p = run("--mode rational ppt " + path);
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("# split 2 2") != std::string::npos);
    CHECK(p.out.find("1/10") != std::string::npos);
}
