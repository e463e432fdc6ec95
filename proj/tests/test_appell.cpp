#include "qappell/alsalamcarlitz.hpp"
#include "qappell/appell.hpp"
#include "qappell/error.hpp"
#include "qappell/quasi.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace qappell;
namespace t = qappell::testing;

namespace {

PolyFamily raw(std::vector<QPoly> members) { return PolyFamily(std::move(members), {}); }

}  // namespace

TEST_CASE("Al-Salam--Carlitz family is q-Appell") {
    const auto report = check_appell(asc_recurrence(ASCParams(1, QParam(2)), 8), QParam(2));
    CHECK(report.holds());
    CHECK(report.holds_up_to == 8);
}

TEST_CASE("first defect is reported") {
    const auto report = check_appell(raw({QPoly::constant(1), QPoly::monomial(1, 2)}), QParam(2));
    REQUIRE(report.defect);
    CHECK(report.defect->n == 1);
    CHECK(report.defect->residual == QPoly::constant(1));
    CHECK(report.holds_up_to == 0);
}

TEST_CASE("monomials are q-Appell") {
    const auto report = check_appell(
        raw({QPoly::constant(1), QPoly::x(), QPoly::monomial(2)}), QParam(2));
    CHECK(report.holds());
    CHECK(report.holds_up_to == 2);
}

TEST_CASE("single constant is vacuously q-Appell") {
    const auto report = check_appell(raw({QPoly::constant(5)}), QParam(2));
    CHECK(report.holds());
    CHECK(report.holds_up_to == 0);
}

TEST_CASE("degree gaps are an input error") {
    CHECK_THROWS_AS(raw({QPoly::constant(1), QPoly::x(), QPoly::monomial(3)}), MalformedFamily);
    CHECK_THROWS_AS(raw({}), MalformedFamily);
    CHECK_THROWS_AS(raw({QPoly{}}), MalformedFamily);
}

TEST_CASE("appell_defects lists every failing index") {
    const QParam q(3);
    const auto defects = appell_defects(
        raw({QPoly::constant(1), QPoly::monomial(1, 2), QPoly::monomial(2, 2),
             QPoly::monomial(3, 5)}),
        q);
    REQUIRE(defects.size() == 2);
    CHECK(defects[0].n == 1);
    CHECK(defects[1].n == 3);
}

TEST_CASE("property: defects are witnessed at random points") {
    for (int trial = 0; trial < 40; ++trial) {
        const QParam q = t::random_q();
        std::vector<QPoly> members;
        for (long n = 0; n <= 5; ++n) {
            auto p = t::random_poly(n);
            members.push_back(p + QPoly::monomial(static_cast<std::size_t>(n)));
            if (members.back().degree() != n) members.back() = QPoly::monomial(static_cast<std::size_t>(n));
        }
        const auto fam = raw(std::move(members));
        const auto report = check_appell(fam, q);
        if (!report.defect) continue;
        const std::size_t n = report.defect->n;
        int witnessed = 0;
        for (int k = 0; k < 5; ++k) {
            const Rational x0 = t::random_nonzero();
            if (t::hahn_quotient(fam[n], q, x0) != qnum(n, q) * fam[n - 1].eval(x0)) ++witnessed;
        }
        CHECK(witnessed > 0);
    }
}

TEST_CASE("property: verdict is stable under scaling the whole family") {
    for (int trial = 0; trial < 20; ++trial) {
        const QParam q = t::random_q();
        const Rational s = t::random_nonzero();
        const auto good = build_Q(QuasiParams(t::random_nonzero(), t::random_nonzero(),
                                              t::random_nonzero(), q),
                                  6);
        std::vector<QPoly> scaled;
        for (const auto& m : good.members()) scaled.push_back(m * s);
        CHECK(check_appell(raw(scaled), q).holds() == check_appell(good, q).holds());

        std::vector<QPoly> bad(good.members().begin(), good.members().end());
        bad[3] = bad[3] + QPoly::monomial(1);
        std::vector<QPoly> bad_scaled;
        for (const auto& m : bad) bad_scaled.push_back(m * s);
        const auto r1 = check_appell(raw(bad), q);
        const auto r2 = check_appell(raw(bad_scaled), q);
        CHECK(r1.holds() == r2.holds());
        CHECK(r1.holds_up_to == r2.holds_up_to);
    }
}
