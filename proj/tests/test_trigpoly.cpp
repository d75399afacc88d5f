#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "ncg/trigpoly.hpp"

using namespace ncg;

TEST_CASE("gauss arithmetic is exact") {
    Gauss a = Gauss::rational(1, 3);
    Gauss b = Gauss::imaginary(2, 5);
    Gauss c = (a + b) * (a - b);
    // (1/3)^2 + (2/5)^2 = 1/9 + 4/25 -> real part 1/9 - (2i/5)^2 ...
    CHECK(c == Gauss(mpq_class(1, 9) + mpq_class(4, 25), mpq_class(0)));
    CHECK(Gauss::i_pow(6) == Gauss(-1));
    CHECK(Gauss::i_pow(-1) == Gauss::imaginary(-1, 1));
    CHECK((b / b) == Gauss(1));
}

TEST_CASE("product support is the frequency sumset") {
    TrigPoly a = TrigPoly::harmonic(2, Gauss(1)) + TrigPoly::harmonic(-1, Gauss(3));
    TrigPoly b = TrigPoly::harmonic(4, Gauss(1)) + TrigPoly::harmonic(0, Gauss(2));
    TrigPoly p = a * b;
    std::set<long> support;
    for (auto& [k, c] : p.coeffs()) support.insert(k);
    CHECK(support == std::set<long>{6, 3, 2, -1});
}

TEST_CASE("sin^2(theta/2) expands to quarter-angle frequencies -4,0,4") {
    TrigPoly s2 = TrigPoly::sin_quarter(2);
    TrigPoly sq = s2 * s2;
    CHECK(sq.coeff(0) == Gauss::rational(1, 2));
    CHECK(sq.coeff(4) == Gauss::rational(-1, 4));
    CHECK(sq.coeff(-4) == Gauss::rational(-1, 4));
    CHECK(sq.coeffs().size() == 3);
    CHECK(sq.is_real_valued());
}

TEST_CASE("sin/cos constructors are real-valued; i*sin is not") {
    CHECK(TrigPoly::sin_quarter(3).is_real_valued());
    CHECK(TrigPoly::cos_quarter(5).is_real_valued());
    CHECK_FALSE(TrigPoly::sin_quarter(1).scaled(Gauss::i()).is_real_valued());
}

TEST_CASE("dtheta multiplies harmonic k by ik/4") {
    TrigPoly e1 = TrigPoly::harmonic(4, Gauss(1));  // e^{i theta}
    TrigPoly d = e1.dtheta();
    CHECK(d.coeff(4) == Gauss::i());
    CHECK(TrigPoly::one().dtheta().is_zero());
}

TEST_CASE("pointwise evaluation matches the coefficient sum") {
    TrigPoly t = TrigPoly::sin_quarter(2) * TrigPoly::cos_quarter(1) +
                 TrigPoly::harmonic(-3, Gauss::imaginary(1, 2));
    for (double theta : {0.0, 0.5, 1.7, 3.9, 6.0}) {
        std::complex<double> direct =
            std::sin(theta / 2) * std::cos(theta / 4) +
            std::complex<double>(0, 0.5) * std::polar(1.0, -3 * theta / 4);
        CHECK(std::abs(t.eval(theta) - direct) < 1e-14);
    }
}

TEST_CASE("endpoint substitution") {
    TrigPoly s2 = TrigPoly::sin_quarter(2);
    CHECK(s2.value_at_zero() == Gauss(0));
    CHECK(s2.value_at_two_pi() == Gauss(0));  // sin(pi) = 0
    TrigPoly c1 = TrigPoly::cos_quarter(1);
    CHECK(c1.value_at_zero() == Gauss(1));
    // cos(pi/2) = 0
    CHECK(c1.value_at_two_pi() == Gauss(0));
}

TEST_CASE("exact integration over [0, 2pi]") {
    SECTION("constant") {
        IntegralValue v = TrigPoly::one().integrate();
        CHECK(v.two_pi_coeff == Gauss(1));
        CHECK(v.remainder == Gauss(0));
    }
    SECTION("sin^2(theta/2) has mean 1/2, boundary terms cancel") {
        TrigPoly s2 = TrigPoly::sin_quarter(2);
        IntegralValue v = (s2 * s2).integrate();
        CHECK(v.two_pi_coeff == Gauss::rational(1, 2));
        CHECK(v.remainder == Gauss(0));
    }
    SECTION("e^{i theta/4}: pure boundary contribution (4/i)(i-1)") {
        IntegralValue v = TrigPoly::harmonic(1, Gauss(1)).integrate();
        CHECK(v.two_pi_coeff == Gauss(0));
        CHECK(v.remainder == (Gauss::i() - Gauss(1)) / Gauss::i() * Gauss(4));
    }
    SECTION("agrees with the closed-form antiderivative numerically") {
        TrigPoly t = TrigPoly::harmonic(3, Gauss::rational(2, 7)) +
                     TrigPoly::harmonic(-2, Gauss::imaginary(1, 3)) +
                     TrigPoly::constant(Gauss::rational(5, 4));
        IntegralValue v = t.integrate();
        // antiderivative evaluated in doubles
        auto F = [&](double theta) {
            std::complex<double> s = 0;
            for (auto& [k, c] : t.coeffs()) {
                if (k == 0)
                    s += c.to_complex() * theta;
                else
                    s += c.to_complex() / std::complex<double>(0, k / 4.0) *
                         std::polar(1.0, k * theta / 4.0);
            }
            return s;
        };
        std::complex<double> direct = F(2 * std::numbers::pi) - F(0.0);
        CHECK(std::abs(v.to_complex() - direct) < 1e-12);
    }
}

TEST_CASE("conjugation mirrors frequencies") {
    TrigPoly t = TrigPoly::harmonic(5, Gauss::imaginary(1, 2));
    CHECK(t.conj().coeff(-5) == Gauss::imaginary(-1, 2));
    TrigPoly r = TrigPoly::sin_quarter(2);
    CHECK(r.conj() == r);
}
