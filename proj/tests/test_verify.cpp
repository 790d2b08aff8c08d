#include "doctest.h"

#include "pschur/verify.hpp"

using pschur::Rational;
using pschur::VerifyReport;

TEST_SUITE("verify") {
    TEST_CASE("float backend: a short full run passes every section") {
        auto report = pschur::verify_all<double>(25, 2024);
        CHECK(report.backend == std::string("float64"));
        for (const auto& s : report.sections) {
            CAPTURE(s.name);
            CAPTURE(s.failing_seeds);
            CHECK(s.ok());
        }
        CHECK(report.all_passed());
    }

    TEST_CASE("rational backend: residuals are exactly zero") {
        auto report = pschur::verify_all<Rational>(8, 99);
        CHECK(report.all_passed());
        for (const auto& s : report.sections) {
            CAPTURE(s.name);
            if (s.name == "fixture_example1" || s.name == "fixture_carlson_violator" ||
                s.name == "hypothesis_dropping")
                continue;  // the expected negatives carry nonzero distances
            CHECK(s.worst_residual == 0.0);
        }
    }

    TEST_CASE("reports are deterministic in the seed") {
        auto a = pschur::verify_all<double>(5, 7);
        auto b = pschur::verify_all<double>(5, 7);
        REQUIRE(a.sections.size() == b.sections.size());
        for (std::size_t i = 0; i < a.sections.size(); ++i) {
            CHECK(a.sections[i].name == b.sections[i].name);
            CHECK(a.sections[i].passes == b.sections[i].passes);
            CHECK(a.sections[i].worst_residual == b.sections[i].worst_residual);
        }
    }

    TEST_CASE("trials = 0 is fixtures-only mode") {
        auto report = pschur::verify_all<Rational>(0, 1);
        CHECK(report.all_passed());
        const auto* ex1 = report.find("fixture_example1");
        REQUIRE(ex1 != nullptr);
        CHECK(ex1->trials == 1);  // the expected-negative is still exercised
        const auto* exchange = report.find("exchange_identities");
        REQUIRE(exchange != nullptr);
        CHECK(exchange->trials == 0);
    }

    TEST_CASE("trials and passes add up, fixtures included") {
        auto report = pschur::verify_all<double>(3, 11);
        const auto* exchange = report.find("exchange_identities");
        REQUIRE(exchange != nullptr);
        CHECK(exchange->trials == 3);
        CHECK(report.find("fixture_example1") != nullptr);
        CHECK(report.find("fixture_example2") != nullptr);
        CHECK(report.find("nonexistent") == nullptr);
    }

    TEST_CASE("hypothesis dropping finds a counterexample quickly") {
        auto stats = pschur::run_counterexample_search<double>(200, 17);
        CHECK(stats.ok());
        CHECK(stats.trials <= 200);
        auto statsr = pschur::run_counterexample_search<Rational>(200, 18);
        CHECK(statsr.ok());
    }

    TEST_CASE("text rendering mentions every section") {
        auto report = pschur::verify_all<double>(2, 3);
        auto text = pschur::to_text(report);
        for (const auto& s : report.sections)
            CHECK(text.find(s.name) != std::string::npos);
    }
}
