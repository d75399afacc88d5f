#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ncg/abelian.hpp"

using namespace ncg;

namespace {

IntMat random_mat(std::mt19937_64& g, int maxdim = 6, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dim(1, maxdim);
    std::uniform_int_distribution<int> val(lo, hi);
    IntMat m(dim(g), dim(g));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = val(g);
    return m;
}

bool divisibility_chain(const IntMat& d) {
    int steps = std::min(d.rows(), d.cols());
    for (int i = 0; i + 1 < steps; ++i) {
        if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
        if (d(i, i) != 0 && d(i + 1, i + 1) != 0 && d(i + 1, i + 1) % d(i, i) != 0)
            return false;
    }
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

// brute-force order of Z^2 / M Z^2 for 2x2 M with det != 0: count canonical
// representatives in the fundamental box [0, |det|)^2
long brute_force_cokernel_order(const IntMat& m) {
    mpz_class dm = det(m);
    long d = std::abs(static_cast<long>(dm.get_si()));
    REQUIRE(d != 0);
    auto in_image = [&](long x, long y) {
        // solve M t = (x,y) over Q by Cramer and check integrality
        mpz_class a = m(0, 0), b = m(0, 1), c = m(1, 0), e = m(1, 1);
        mpz_class delta = a * e - b * c;
        mpz_class t1 = e * x - b * y;
        mpz_class t2 = -c * x + a * y;
        return t1 % delta == 0 && t2 % delta == 0;
    };
    std::set<std::pair<long, long>> classes;
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y) {
            bool fresh = true;
            for (auto& [cx, cy] : classes)
                if (in_image(x - cx, y - cy)) {
                    fresh = false;
                    break;
                }
            if (fresh) classes.insert({x, y});
        }
    return static_cast<long>(classes.size());
}

}  // namespace

TEST_CASE("smith normal form basics") {
    SECTION("diag(1,2) is already normal") {
        IntMat m(2, 2);
        m(0, 0) = 1;
        m(1, 1) = 2;
        SmithForm s = smith_normal_form(m);
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 2);
    }
    SECTION("the K1 difference-map matrix reduces to diag(1,2)") {
        IntMat m(2, 2);
        m(0, 0) = 0;
        m(0, 1) = 2;
        m(1, 0) = -1;
        m(1, 1) = -1;
        SmithForm s = smith_normal_form(m);
        CHECK(s.d(0, 0) == 1);
        CHECK(s.d(1, 1) == 2);
        CHECK(s.u * m * s.v == s.d);
    }
}

TEST_CASE("SNF invariants on 200 random matrices") {
    std::mt19937_64 g(2718);
    for (int trial = 0; trial < 200; ++trial) {
        IntMat m = random_mat(g);
        SmithForm s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(divisibility_chain(s.d));
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        if (m.rows() == m.cols()) CHECK(abs(det(s.d)) == abs(det(m)));
    }
}

TEST_CASE("cokernel order equals |det| via brute-force enumeration") {
    std::mt19937_64 g(3141);
    int done = 0;
    while (done < 25) {
        IntMat m(2, 2);
        std::uniform_int_distribution<int> val(-4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = val(g);
        mpz_class d = abs(det(m));
        if (d == 0 || d > 12) continue;
        ++done;
        CokernelData ck = cokernel(m);
        mpz_class order = 1;
        for (auto& f : ck.group.invariant_factors) order *= f;
        CHECK(ck.group.free_rank == 0);
        CHECK(order == d);
        CHECK(order == brute_force_cokernel_order(m));
    }
}

TEST_CASE("rank theorem: rank(ker) + rank(im) = cols") {
    std::mt19937_64 g(1618);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m = random_mat(g, 5, -3, 3);
        IntMat k = kernel_basis(m);
        IntMat im = image_lattice(m);
        CHECK(k.cols() + im.cols() == m.cols());
        // the kernel really maps to zero
        IntMat z = m * k;
        for (int i = 0; i < z.rows(); ++i)
            for (int j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
    }
}

TEST_CASE("kernel and cokernel of the two induced maps") {
    SECTION("(x,y) -> (y-x, 0): kernel (1,1), cokernel Z") {
        IntMat m(2, 2);
        m(0, 0) = -1;
        m(0, 1) = 1;
        IntMat k = kernel_basis(m);
        REQUIRE(k.cols() == 1);
        CHECK(abs(k(0, 0)) == 1);
        CHECK(k(0, 0) == k(1, 0));
        CokernelData ck = cokernel(m);
        CHECK(ck.group == FGAbelian::free(1));
    }
    SECTION("(x,y) -> (2y, -y-x): injective, cokernel Z_2") {
        IntMat m(2, 2);
        m(0, 1) = 2;
        m(1, 0) = -1;
        m(1, 1) = -1;
        CHECK(kernel_basis(m).cols() == 0);
        CokernelData ck = cokernel(m);
        CHECK(ck.group.free_rank == 0);
        REQUIRE(ck.group.invariant_factors.size() == 1);
        CHECK(ck.group.invariant_factors[0] == 2);
        // the torsion generator is the class of (1,0)
        CHECK(ck.group.label(0) == "[(1,0)]");
    }
    SECTION("zero map Z^2 -> Z^2") {
        IntMat m(2, 2);
        CHECK(kernel_basis(m).cols() == 2);
        CHECK(cokernel(m).group == FGAbelian::free(2));
    }
}

TEST_CASE("lattice comparison via Hermite forms") {
    IntMat a(2, 2), b(2, 1);
    a(0, 0) = 1;
    a(1, 0) = 1;
    a(0, 1) = 3;
    a(1, 1) = 3;
    b(0, 0) = -1;
    b(1, 0) = -1;
    CHECK(lattice_equal(a, b));
    IntMat c(2, 1);
    c(0, 0) = 1;
    c(1, 0) = 2;
    CHECK_FALSE(lattice_equal(a, c));
}

TEST_CASE("FGAbelian printing uses the bracket notation") {
    FGAbelian g;
    g.free_rank = 1;
    g.invariant_factors = {2};
    g.labels = {"[(1,1)]", "[(1,0)]"};
    CHECK(g.str() == "Z[(1,1)] (+) Z_2[(1,0)]");
    CHECK(FGAbelian::zero().str() == "0");
}
