#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncg/ncpoly.hpp"

using namespace ncg;

namespace {

// seeded random word over the given alphabet, before reduction
Word random_word(std::mt19937_64& g, int max_len, bool with_du) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, with_du ? 2 : 1);
    Word w;
    int n = len(g);
    for (int i = 0; i < n; ++i) {
        switch (pick(g)) {
            case 0: w.append(lu()); break;
            case 1: w.append(lustar()); break;
            default: w.append(ldu()); break;
        }
    }
    return w;
}

NCPoly random_poly(std::mt19937_64& g, int terms, int max_len, bool with_du) {
    std::uniform_int_distribution<int> freq(-3, 3);
    std::uniform_int_distribution<long> num(-4, 4);
    NCPoly p;
    for (int t = 0; t < terms; ++t) {
        TrigPoly c = TrigPoly::harmonic(freq(g), Gauss(mpq_class(num(g)), mpq_class(num(g))));
        p += NCPoly::monomial(random_word(g, max_len, with_du), c);
    }
    return p;
}

// reduce a raw letter sequence by repeatedly cancelling an arbitrary
// (generator-chosen) reducible pair: used to confirm confluence
std::vector<Letter> reduce_randomly(std::vector<Letter> v, std::mt19937_64& g) {
    auto reducible = [](const Letter& a, const Letter& b) {
        return (a.tag == Tag::U && b.tag == Tag::Ustar) ||
               (a.tag == Tag::Ustar && b.tag == Tag::U);
    };
    for (;;) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (reducible(v[i], v[i + 1])) sites.push_back(i);
        if (sites.empty()) return v;
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        std::size_t at = sites[pick(g)];
        v.erase(v.begin() + at, v.begin() + at + 2);
    }
}

}  // namespace

TEST_CASE("unitary relation rewrites to fixed point") {
    CHECK(NCPoly::u() * NCPoly::ustar() == NCPoly::one());
    CHECK(NCPoly::ustar() * (NCPoly::u() * NCPoly::du()) == NCPoly::du());
}

TEST_CASE("scalar coefficients multiply through the center") {
    TrigPoly s2 = TrigPoly::sin_quarter(2);
    NCPoly a = NCPoly::u().scaled(s2);
    NCPoly sq = a * a;
    // sin^2(theta/2) u^2
    NCPoly expect = NCPoly::monomial(u_power(2), s2 * s2);
    CHECK(sq == expect);
}

TEST_CASE("rewriting is terminating and confluent on random words") {
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(0, 12);
        std::uniform_int_distribution<int> pick(0, 2);
        std::vector<Letter> raw;
        int n = len(g);
        for (int i = 0; i < n; ++i) {
            Letter l = pick(g) == 0 ? lu() : pick(g) == 0 ? ldu() : lustar();
            raw.push_back(l);
        }
        if (trial % 3 == 0) raw.push_back(ldu());
        Word stack_form(raw);
        for (int k = 0; k < 4; ++k) {
            auto other = reduce_randomly(raw, g);
            CHECK(Word(other) == stack_form);
            CHECK(Word(other).letters() == other);  // already a normal form
        }
    }
}

TEST_CASE("local overlaps resolve identically") {
    std::vector<Letter> a{lu(), lustar(), lu()};
    std::vector<Letter> b{lustar(), lu(), lustar()};
    CHECK(Word(a).letters() == std::vector<Letter>{lu()});
    CHECK(Word(b).letters() == std::vector<Letter>{lustar()});
}

TEST_CASE("star is an involutive antiautomorphism") {
    SECTION("generators") {
        CHECK(NCPoly::u().star() == NCPoly::ustar());
        // (du)* = -u* du u*
        NCPoly expect = -(NCPoly::ustar() * NCPoly::du() * NCPoly::ustar());
        CHECK(NCPoly::du().star() == expect);
    }
    SECTION("random involution and antimultiplicativity") {
        std::mt19937_64 g(7);
        for (int t = 0; t < 100; ++t) {
            NCPoly x = random_poly(g, 4, 5, true);
            NCPoly y = random_poly(g, 3, 4, true);
            CHECK(x.star().star() == x);
            CHECK((x * y).star() == y.star() * x.star());
        }
    }
}

TEST_CASE("delta is a Leibniz derivation") {
    SECTION("kills the unit and the unitary relation") {
        CHECK(NCPoly::one().delta().is_zero());
        CHECK((NCPoly::u() * NCPoly::ustar()).delta().is_zero());
    }
    SECTION("delta(u^2) = du u + u du") {
        NCPoly expect = NCPoly::du() * NCPoly::u() + NCPoly::u() * NCPoly::du();
        CHECK((NCPoly::u() * NCPoly::u()).delta() == expect);
    }
    SECTION("delta(u*) = -u* du u*") {
        CHECK(NCPoly::ustar().delta() ==
              -(NCPoly::ustar() * NCPoly::du() * NCPoly::ustar()));
    }
    SECTION("product rule on random pairs; commutes with dtheta") {
        std::mt19937_64 g(11);
        for (int t = 0; t < 100; ++t) {
            NCPoly x = random_poly(g, 3, 4, false);
            NCPoly y = random_poly(g, 3, 4, false);
            CHECK((x * y).delta() == x.delta() * y + x * y.delta());
            CHECK((x * y).dtheta() == x.dtheta() * y + x * y.dtheta());
            CHECK(x.delta().dtheta() == x.dtheta().delta());
        }
    }
    SECTION("derivative letters are outside the domain") {
        CHECK_THROWS_AS(NCPoly::du().delta(), std::domain_error);
    }
}

TEST_CASE("dtheta differentiates coefficients only") {
    CHECK(NCPoly::u().dtheta().is_zero());
    NCPoly e = NCPoly::scalar(TrigPoly::harmonic(4, Gauss(1)));  // e^{i theta}
    CHECK(e.dtheta() == NCPoly::scalar(TrigPoly::harmonic(4, Gauss::i())));
}
