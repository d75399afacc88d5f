#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncg/projector.hpp"

using namespace ncg;

namespace {

NCPoly random_entry(std::mt19937_64& g) {
    std::uniform_int_distribution<int> freq(-2, 2);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    NCPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        int n = len(g);
        for (int i = 0; i < n; ++i) {
            int c = pick(g);
            w.append(c == 0 ? lu() : c == 1 ? lustar() : lfree(1));
        }
        p += NCPoly::monomial(w, TrigPoly::harmonic(freq(g), Gauss(mpq_class(num(g)))));
    }
    return p;
}

NCForm random_zero_form(std::mt19937_64& g, int dim) {
    NCMat m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = random_entry(g);
    return NCForm::from_matrix(std::move(m));
}

}  // namespace

TEST_CASE("d^2 = 0 on random 0-forms") {
    std::mt19937_64 g(31);
    for (int t = 0; t < 50; ++t) {
        NCForm a = random_zero_form(g, 2);
        CHECK(exterior_d(exterior_d(a)).is_zero());
    }
}

TEST_CASE("d of the unit is zero") {
    CHECK(exterior_d(NCForm::from_matrix(NCMat::identity(2))).is_zero());
}

TEST_CASE("wedge with the unit 0-form") {
    std::mt19937_64 g(32);
    NCForm w = exterior_d(random_zero_form(g, 2));
    NCForm one = NCForm::from_matrix(NCMat::identity(2));
    CHECK(wedge(w, one) == w);
    CHECK(wedge(one, w) == w);
}

TEST_CASE("wedge of a central 1-form with itself vanishes") {
    // scalar (central) entries: c * identity in each direction
    NCForm w(2);
    NCMat mx(2), mt(2);
    for (int i = 0; i < 2; ++i) {
        mx(i, i) = NCPoly::scalar(TrigPoly::cos_quarter(2));
        mt(i, i) = NCPoly::scalar(TrigPoly::sin_quarter(1));
    }
    w.set(kX, mx);
    w.set(kTheta, mt);
    CHECK(wedge(w, w).is_zero());
}

TEST_CASE("wedge beyond top degree is an error") {
    std::mt19937_64 g(33);
    NCForm one_form = exterior_d(random_zero_form(g, 2));
    NCForm two_form = wedge(one_form, one_form);
    CHECK(two_form.degree() == 2);
    CHECK_THROWS_AS(wedge(one_form, two_form), std::domain_error);
}

TEST_CASE("mixed wedge component is w_X v_th - w_th v_X") {
    std::mt19937_64 g(34);
    NCForm a = exterior_d(random_zero_form(g, 2));
    NCForm b = exterior_d(random_zero_form(g, 2));
    NCMat expect = a.component(kX) * b.component(kTheta) -
                   a.component(kTheta) * b.component(kX);
    CHECK(wedge(a, b).component(kXTheta) == expect);
}

TEST_CASE("dp ^ dp on the mixed pair is the derivation commutator") {
    NCMat p = build_p_theta().p;
    NCForm dp = exterior_d(NCForm::from_matrix(p));
    NCMat dx = p.map(&NCPoly::delta);
    NCMat dt = p.map(&NCPoly::dtheta);
    CHECK(wedge(dp, dp).component(kXTheta) == dx * dt - dt * dx);
    // pure pairs vanish by antisymmetry: no kX- or kTheta-components appear
    CHECK_FALSE(wedge(dp, dp).has(kX));
    CHECK_FALSE(wedge(dp, dp).has(kTheta));
}

TEST_CASE("p_theta is an exact projection with the stated factorization") {
    HomotopyProjection hp = build_p_theta();
    CHECK((hp.p * hp.p) == hp.p);
    CHECK((hp.w * hp.w.star()) == NCMat::identity(2));
    CHECK((hp.w.star() * hp.w) == NCMat::identity(2));
    CHECK((hp.w * hp.p_n * hp.w.star()) == hp.p);
    CHECK(hp.p.star() == hp.p);
}

TEST_CASE("p_theta endpoints collapse to p_n") {
    HomotopyProjection hp = build_p_theta();
    for (bool two_pi : {false, true}) {
        NCMat e(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                e(i, j) = two_pi ? hp.p(i, j).at_two_pi() : hp.p(i, j).at_zero();
        CHECK(e == hp.p_n);
    }
}

TEST_CASE("delta(p) matches the displayed entries") {
    NCMat p = build_p_theta().p;
    NCMat dx = p.map(&NCPoly::delta);

    const NCPoly u = NCPoly::u();
    const NCPoly us = NCPoly::ustar();
    const NCPoly du = NCPoly::du();
    const NCPoly dus = us.delta();
    const TrigPoly quarter = TrigPoly::constant(Gauss::rational(1, 4));
    const TrigPoly half = TrigPoly::constant(Gauss::rational(1, 2));
    const TrigPoly s2 = TrigPoly::sin_quarter(2);
    const TrigPoly s2sq4 = s2 * s2 * quarter;
    const TrigPoly s2h = s2 * half;
    const TrigPoly c4sq = TrigPoly::cos_quarter(1) * TrigPoly::cos_quarter(1);
    const TrigPoly s4sq = TrigPoly::sin_quarter(1) * TrigPoly::sin_quarter(1);
    const TrigPoly c2 = TrigPoly::cos_quarter(2);

    // (1,1): sin^2(th/2)/4 (delta u + delta u*)
    CHECK(dx(0, 0) == (du + dus).scaled(s2sq4));
    // (2,2) = -(1,1)
    CHECK(dx(1, 1) == -dx(0, 0));
    // (1,2): sin(th/2)/2 [cos(th/2) du + sin^2(th/4)(du u + u du)];
    // the bracketed leading coefficient is cos(th/2) = cos^2 - sin^2 of th/4,
    // forced by the Leibniz rule applied to the displayed entry.
    NCPoly expect12 =
        (du.scaled(c2) + (du * u + u * du).scaled(s4sq)).scaled(s2h);
    CHECK(dx(0, 1) == expect12);
    NCPoly expect21 =
        (dus.scaled(c2) + (dus * us + us * dus).scaled(s4sq)).scaled(s2h);
    CHECK(dx(1, 0) == expect21);
}

TEST_CASE("dtheta(p)(1,1) = -(sin(theta)/8)(1-u)(1-u*)") {
    NCMat p = build_p_theta().p;
    NCPoly one_mu = NCPoly::one() - NCPoly::u();
    NCPoly one_mus = NCPoly::one() - NCPoly::ustar();
    TrigPoly c = TrigPoly::sin_quarter(4).scaled(Gauss::rational(-1, 8));
    CHECK(p(0, 0).dtheta() == (one_mu * one_mus).scaled(c));
    // and u itself is theta-independent
    CHECK(NCPoly::u().dtheta().is_zero());
}
