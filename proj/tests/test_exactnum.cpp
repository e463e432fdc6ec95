#include "qappell/error.hpp"
#include "qappell/exactnum.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace qappell;
using qappell::testing::random_nonzero;
using qappell::testing::random_q;
using qappell::testing::random_rational;

TEST_CASE("qnum") {
    CHECK(qnum(0, QParam(2)) == 0);
    CHECK(qnum(1, QParam(Rational(5, 3))) == 1);
    CHECK(qnum(3, QParam(2)) == 7);
    CHECK(qnum(4, QParam(Rational(-1, 2))) == Rational(5, 8));
}

TEST_CASE("qfact") {
    CHECK(qfact(0, QParam(2)) == 1);
    CHECK(qfact(2, QParam(2)) == 3);
    CHECK(qfact(3, QParam(2)) == 21);
}

TEST_CASE("qpochhammer") {
    CHECK(qpochhammer(7, QParam(2), 0) == 1);
    CHECK(qpochhammer(Rational(1, 4), QParam(2), 3) == 0);
    CHECK(qpochhammer(2, QParam(3), 2) == 5);
}

TEST_CASE("QParam rejects 0 and +-1") {
    CHECK_THROWS_AS(QParam(0), DomainError);
    CHECK_THROWS_AS(QParam(1), DomainError);
    CHECK_THROWS_AS(QParam(-1), DomainError);
    CHECK_NOTHROW(QParam(Rational(-1, 2)));
}

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+4/2") == 2);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(-7)) == "-7");
    for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "--1", "1/-2", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("power with negative exponents") {
    CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(power(Rational(-2), 0) == 1);
    CHECK_THROWS_AS(power(Rational(0), -1), DomainError);
}

TEST_CASE("property: qnum recursion and pochhammer step") {
    for (int trial = 0; trial < 50; ++trial) {
        const QParam q = random_q();
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(qnum(n, q) == 1 + q.value() * qnum(n - 1, q));
            CHECK(qfact(n, q) == qnum(n, q) * qfact(n - 1, q));
            CHECK(qfact(n, q) != 0);
        }
        const Rational z = random_rational();
        for (std::size_t k = 0; k < 10; ++k) {
            CHECK(qpochhammer(z, q, k + 1) ==
                  qpochhammer(z, q, k) * (1 - z * q.pow(static_cast<long>(k))));
        }
    }
}

TEST_CASE("property: terminating pochhammer at q^-n") {
    for (int trial = 0; trial < 20; ++trial) {
        const QParam q = random_q();
        for (long n = 0; n <= 8; ++n) {
            const Rational z = q.pow(-n);
            for (std::size_t k = static_cast<std::size_t>(n) + 1; k <= 12; ++k) {
                CHECK(qpochhammer(z, q, k) == 0);
            }
            CHECK(qpochhammer(z, q, static_cast<std::size_t>(n)) != 0);
        }
    }
}

TEST_CASE("property: canonical sums agree with cross-multiplication") {
    for (int trial = 0; trial < 1000; ++trial) {
        const Rational x = random_rational(1000, 1000);
        const Rational y = random_rational(1000, 1000);
        const auto [num, den] = qappell::testing::cross_add(x.get_num(), x.get_den(),
                                                             y.get_num(), y.get_den());
        const Rational sum = x + y;
        CHECK(sum.get_num() == num);
        CHECK(sum.get_den() == den);
        CHECK(sum.get_den() > 0);
        // Division by nonzero is closed and exact.
        const Rational z = random_nonzero();
        CHECK((x / z) * z == x);
    }
}
