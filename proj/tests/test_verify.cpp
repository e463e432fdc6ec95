#include "qappell/alsalamcarlitz.hpp"
#include "qappell/error.hpp"
#include "qappell/quasi.hpp"
#include "qappell/verify.hpp"

#include <doctest.h>

using namespace qappell;

TEST_CASE("quasi family passes all four checks") {
    const auto fam = build_Q(QuasiParams(1, 1, 1, QParam(2)), 8);
    const auto reports = run_checks(fam, kAllChecks, 0);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].theorem == "appell");
    CHECK(reports[1].theorem == "quasi");
    CHECK(reports[2].theorem == "3.1");
    CHECK(reports[3].theorem == "3.2");
    for (const auto& r : reports) {
        CAPTURE(r.to_json().dump());
        CHECK(r.pass);
        CHECK(r.first_failure.is_null());
    }
    CHECK(reports[2].params["d2"] == "-27");
}

TEST_CASE("orthogonal family: appell and 3.1 pass, quasi and 3.2 fail") {
    const auto fam = asc_recurrence(ASCParams(1, QParam(2)), 8);
    const auto reports = run_checks(fam, kAllChecks, 0);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].pass);
    CHECK_FALSE(reports[1].pass);
    CHECK(reports[1].first_failure["clause"] == "nonzero_at_n_minus_1");
    CHECK(reports[2].pass);
    CHECK(reports[2].params["d2"] == "0");
    CHECK_FALSE(reports[3].pass);
    CHECK(reports[3].first_failure["riesz_b"] == "0");
}

TEST_CASE("reports are deterministic for a seed") {
    const auto fam = build_Q(QuasiParams(Rational(2, 3), -1, 5, QParam(Rational(1, 3))), 6);
    const auto a = render_reports(run_checks(fam, kAllChecks, 42), Format::Json);
    const auto b = render_reports(run_checks(fam, kAllChecks, 42), Format::Json);
    CHECK(a == b);
    CHECK(a.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("broken family is caught by every relevant check") {
    const auto good = build_Q(QuasiParams(1, 1, 1, QParam(2)), 6);
    std::vector<QPoly> members(good.members().begin(), good.members().end());
    members[4] = members[4] + QPoly::constant(1);
    const PolyFamily bad(members, good.provenance());
    const auto reports = run_checks(bad, kAllChecks, 0);
    CHECK_FALSE(reports[0].pass);
    CHECK(reports[0].first_failure["n"] == 5);
    CHECK_FALSE(reports[2].pass);
    CHECK_FALSE(reports[3].pass);
}

TEST_CASE("mask parsing and preconditions") {
    CHECK(check_mask_from_string("all") == kAllChecks);
    CHECK(check_mask_from_string("rec31") == 4u);
    CHECK_THROWS_AS(check_mask_from_string("foo"), ParseError);
    const auto small = build_Q(QuasiParams(1, 1, 1, QParam(2)), 2);
    CHECK_THROWS_AS(run_checks(small, kAllChecks, 0), DomainError);
    const PolyFamily bare({QPoly::constant(1), QPoly::x()}, {});
    CHECK_THROWS_AS(run_checks(bare, 1, 0), DomainError);
}

TEST_CASE("CSV and LaTeX report rendering") {
    const auto fam = asc_recurrence(ASCParams(1, QParam(2)), 4);
    const auto reports = run_checks(fam, kAllChecks, 0);
    const auto csv = render_reports(reports, Format::Csv);
    CHECK(csv.rfind("theorem,pass,first_failure\nappell,true,\n", 0) == 0);
    CHECK(render_reports(reports, Format::Latex).find("quasi & fail") != std::string::npos);
}
