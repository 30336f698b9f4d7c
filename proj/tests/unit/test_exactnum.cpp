#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "g2abv/exactnum.hpp"

using namespace g2abv;

namespace {

// Floating-point image of a Cyclo under z -> exp(2 pi i / 12); used only as an oracle.
std::complex<double> eval(const Cyclo& c) {
    const std::complex<double> z = std::polar(1.0, 2 * M_PI / 12);
    std::complex<double> acc = 0, p = 1;
    for (int i = 0; i < 4; ++i) {
        acc += c.coeff(i).get_d() * p;
        p *= z;
    }
    return acc;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Cyclo random_cyclo(std::mt19937& g) {
    std::uniform_int_distribution<int> n(-7, 7), d(1, 5);
    return Cyclo(make_rational(n(g), d(g)), make_rational(n(g), d(g)), make_rational(n(g), d(g)),
                 make_rational(n(g), d(g)));
}

Cyclo theta3() { return Cyclo::embed(RootOfUnity(1, 3)); }

}  // namespace

TEST_CASE("cube roots of unity") {
    CHECK(theta3() + Cyclo::embed(RootOfUnity(2, 3)) == Cyclo(-1));
    CHECK(theta3().conj() == Cyclo::embed(RootOfUnity(2, 3)));
    CHECK(theta3() * theta3() * theta3() == Cyclo(1));
}

TEST_CASE("embedding agrees with complex exponentials") {
    for (long n : {1, 2, 3, 4, 6, 12})
        for (long k = 0; k < n; ++k)
            CHECK(close(eval(Cyclo::embed(RootOfUnity(k, n))), std::polar(1.0, 2 * M_PI * k / n)));
}

TEST_CASE("roots of order not dividing 12 are rejected") {
    CHECK_THROWS_AS(Cyclo::embed(RootOfUnity(1, 5)), Error);
    try {
        Cyclo::embed(RootOfUnity(2, 7));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotEmbeddable);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 g(7);
    for (int i = 0; i < 200; ++i) {
        const Cyclo x = random_cyclo(g), y = random_cyclo(g), z = random_cyclo(g);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == Cyclo(0));
        CHECK(close(eval(x * y), eval(x) * eval(y)));
        CHECK(close(eval(x + y), eval(x) + eval(y)));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Cyclo(1));
            CHECK(y / x * x == y);
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism") {
    std::mt19937 g(11);
    for (int i = 0; i < 200; ++i) {
        const Cyclo x = random_cyclo(g), y = random_cyclo(g);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK(close(eval(x.conj()), std::conj(eval(x))));
    }
}

TEST_CASE("galois action permutes primitive roots") {
    for (int j : {1, 5, 7, 11}) CHECK(Cyclo::zeta_pow(1).galois(j) == Cyclo::zeta_pow(j));
}

TEST_CASE("division by zero") { CHECK_THROWS_AS(Cyclo(1) / Cyclo(0), Error); }

TEST_CASE("root of unity arithmetic") {
    const RootOfUnity a(1, 3), b(1, 4);
    CHECK((a * b).fraction() == make_rational(7, 12));
    CHECK(a.inverse() == RootOfUnity(2, 3));
    CHECK((a * a.inverse()).is_one());
    CHECK(RootOfUnity(2, 6) == RootOfUnity(1, 3));
    CHECK(RootOfUnity(5, 4) == RootOfUnity(1, 4));
    CHECK(a.pow(3).is_one());
    CHECK(RootOfUnity(1, 12).order() == 12);
}

TEST_CASE("q-values") {
    const QValue third = QValue::q_pow(make_rational(1, 3));
    CHECK(third.pow(3) == QValue::q_pow(1));
    const QValue a(RootOfUnity(1, 3), make_rational(1, 3)), b(RootOfUnity(2, 3), make_rational(2, 3));
    CHECK(a * b == QValue::q_pow(1));
    CHECK(QValue(RootOfUnity(1, 2), 1) != QValue::q_pow(1));
    CHECK((a * a.inverse()).is_one());
}

TEST_CASE("q-value grammar") {
    CHECK(QValue::parse("zeta(3)^2*q^(2/3)") == QValue(RootOfUnity(2, 3), make_rational(2, 3)));
    CHECK(QValue::parse("q") == QValue::q_pow(1));
    CHECK(QValue::parse("-q") == QValue(RootOfUnity(1, 2), 1));
    CHECK(QValue::parse("1").is_one());
    CHECK(QValue::parse("q^2") == QValue::q_pow(2));
    CHECK(QValue::parse("zeta(4)") == QValue(RootOfUnity(1, 4), 0));
    for (const char* s : {"zeta(3)^2*q^(2/3)", "q", "-q", "zeta(12)^5*q^(-1/6)"})
        CHECK(QValue::parse(QValue::parse(s).to_string()) == QValue::parse(s));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(QValue::parse("zeta(3"), ParseError);
    try {
        QValue::parse("q^(1/0)");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK((e.code() == Errc::Parse || e.code() == Errc::DivisionByZero));
    }
    try {
        QValue::parse("zeta(3)*x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("canonical rendering") {
    CHECK(Cyclo(make_rational(1, 3)).to_string() == "1/3");
    CHECK(theta3().to_string() == "-1 + z^2");
    CHECK(Cyclo(0).to_string() == "0");
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
}
