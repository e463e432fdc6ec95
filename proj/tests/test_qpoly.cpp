#include "qappell/qpoly.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace qappell;
namespace t = qappell::testing;

namespace {

QPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("ring operations") {
    const QPoly x = QPoly::x();
    CHECK(mul(x, x) == QPoly::monomial(2));
    const QPoly f = poly({3, 0, -2});
    CHECK(add(f, QPoly{}) == f);
    CHECK(mul(poly({-1, 1}), poly({1, 1})) == poly({-1, 0, 1}));
    CHECK(sub(f, f).is_zero());
    CHECK(scale(f, 0).is_zero());
    CHECK(scale(f, Rational(1, 2)) == QPoly({Rational(3, 2), 0, -1}));
}

TEST_CASE("zero polynomial is canonical") {
    CHECK(QPoly{}.is_zero());
    CHECK(QPoly({0, 0, 0}) == QPoly{});
    CHECK(QPoly{}.degree() == QPoly::kZeroDegree);
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("eval") {
    const QPoly f = poly({-1, 0, 1});
    CHECK(eval(f, 1) == 0);
    CHECK(eval(f, 3) == 8);
    CHECK(eval(QPoly{}, Rational(7, 3)) == 0);
}

TEST_CASE("scale_arg") {
    CHECK(scale_arg(poly({0, 1, 1}), 1) == poly({0, 1, 1}));
    CHECK(scale_arg(QPoly::monomial(2), 2) == poly({0, 0, 4}));
    CHECK(scale_arg(QPoly::constant(5), Rational(-3, 7)) == QPoly::constant(5));
}

TEST_CASE("hahn_derivative") {
    const QParam q(2);
    CHECK(hahn_derivative(QPoly::constant(5), q).is_zero());
    CHECK(hahn_derivative(QPoly::x(), q) == QPoly::constant(1));
    CHECK(hahn_derivative(QPoly::monomial(2), q) == poly({0, 3}));
}

TEST_CASE("qproduct_basis") {
    const QParam q(2);
    CHECK(qproduct_basis(0, q) == QPoly::constant(1));
    CHECK(qproduct_basis(1, q) == poly({-1, 1}));
    CHECK(qproduct_basis(2, q) == poly({2, -3, 1}));
    const QParam r(Rational(-2, 3));
    const QPoly b = qproduct_basis(6, r);
    CHECK(b.degree() == 6);
    CHECK(b.leading() == 1);
    for (long j = 0; j < 6; ++j) CHECK(b.eval(r.pow(j)) == 0);
}

TEST_CASE("pretty printing") {
    CHECK(poly({7, -6, 1}).str() == "x^2 - 6*x + 7");
    CHECK(QPoly({Rational(-1, 2), 0, 0, 1}).latex() == "x^{3} - \\frac{1}{2}");
    CHECK(QPoly{}.str() == "0");
}

TEST_CASE("property: Horner agrees with explicit powers") {
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly f = t::random_poly(12);
        const Rational x0 = t::random_rational();
        CHECK(f.eval(x0) == t::eval_by_powers(f, x0));
    }
}

TEST_CASE("property: Hahn derivative is linear") {
    for (int trial = 0; trial < 200; ++trial) {
        const QParam q = t::random_q();
        const QPoly f = t::random_poly(10);
        const QPoly g = t::random_poly(10);
        const Rational s = t::random_rational();
        const Rational u = t::random_rational();
        CHECK(hahn_derivative(f * s + g * u, q) ==
              hahn_derivative(f, q) * s + hahn_derivative(g, q) * u);
    }
}

TEST_CASE("property: monomial rule matches the defining quotient") {
    for (int trial = 0; trial < 10; ++trial) {
        const QParam q = t::random_q();
        for (std::size_t n = 1; n <= 12; ++n) {
            const QPoly d = hahn_derivative(QPoly::monomial(n), q);
            CHECK(d == QPoly::monomial(n - 1, qnum(n, q)));
            for (int k = 0; k < 20; ++k) {
                const Rational x0 = t::random_nonzero();
                CHECK(t::hahn_quotient(QPoly::monomial(n), q, x0) == d.eval(x0));
            }
        }
    }
}

TEST_CASE("property: Hahn derivative commutes with argument scaling") {
    for (int trial = 0; trial < 200; ++trial) {
        const QParam q = t::random_q();
        const QPoly f = t::random_poly(10);
        const Rational c = t::random_nonzero();
        CHECK(hahn_derivative(scale_arg(f, c), q) == scale_arg(hahn_derivative(f, q), c) * c);
    }
}

TEST_CASE("property: product degree and leading coefficient") {
    for (int trial = 0; trial < 500; ++trial) {
        const QPoly f = t::random_poly(8);
        const QPoly g = t::random_poly(8);
        if (f.is_zero() || g.is_zero()) {
            CHECK((f * g).is_zero());
            continue;
        }
        const QPoly h = f * g;
        CHECK(h.degree() == f.degree() + g.degree());
        CHECK(h.leading() == f.leading() * g.leading());
    }
}
