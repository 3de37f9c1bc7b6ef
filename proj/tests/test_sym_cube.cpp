#include <doctest.h>

#include <random>

#include "hyprv/sym_cube.hpp"

using namespace hyprv;

namespace {

SL2Int random_sl2_int(std::mt19937_64& rng, int len) {
    SL2Int g{1, 0, 0, 1};
    for (int i = 0; i < len; ++i) {
        long long k = static_cast<long long>(rng() % 5) - 2;
        if (rng() & 1) {
            g = SL2Int{g.a, g.b + k * g.a, g.c, g.d + k * g.c};
        } else {
            g = SL2Int{g.a + k * g.b, g.b, g.c + k * g.d, g.d};
        }
    }
    return g;
}

QuadRat qr(long long an, long long ad, long long bn, long long bd) {
    return QuadRat(Rat(an, ad), Rat(bn, bd));
}

}  // namespace

TEST_CASE("rho of the two elementary generators matches the reference A and B") {
    IntMatrix a = rho(sl2_gen_upper());
    IntMatrix a_expect(4, {1, 1, 1, 1, 0, 1, 2, 3, 0, 0, 1, 3, 0, 0, 0, 1});
    CHECK(a == a_expect);
    IntMatrix b = rho(sl2_gen_lower());
    IntMatrix b_expect(4, {1, 0, 0, 0, 3, 1, 0, 0, 3, 2, 1, 0, 1, 1, 1, 1});
    CHECK(b == b_expect);
    CHECK(rho(SL2Int{1, 0, 0, 1}).is_identity());
    CHECK_THROWS_AS(rho(SL2Int{2, 0, 0, 1}), NotUnimodularError);
}

TEST_CASE("rho is multiplicative on random pairs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        SL2Int g = random_sl2_int(rng, 8), h = random_sl2_int(rng, 8);
        SL2Int gh{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
        CHECK(rho(g) * rho(h) == rho(gh));
    }
}

TEST_CASE("J invariance for the generators and random products") {
    CHECK(check_J_invariance(sl2_gen_upper()));
    CHECK(check_J_invariance(sl2_gen_lower()));
    CHECK(check_J_invariance(SL2Int{1, 0, 0, 1}));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) CHECK(check_J_invariance(random_sl2_int(rng, 10)));
}

TEST_CASE("characteristic polynomial factors") {
    // unipotent: (x-1)^2 (x^2 - 2x + 1)
    auto [u1, u2] = charpoly_factors(sl2_gen_upper());
    CHECK(u1 == Quadratic{-2, 1});
    CHECK(u2 == Quadratic{-2, 1});

    auto [f1, f2] = charpoly_factors(SL2Int{2, 1, 1, 1});
    CHECK(f1 == Quadratic{-3, 1});
    CHECK(f2 == Quadratic{-18, 1});

    // product of the factors equals det(xI - rho(g)) for random g
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        SL2Int g = random_sl2_int(rng, 10);
        auto [q1, q2] = charpoly_factors(g);
        // (x^2 + a1 x + a0)(x^2 + b1 x + b0)
        Rat c3 = Rat(q1.c1) + Rat(q2.c1);
        Rat c2 = Rat(q1.c0) + Rat(q2.c0) + Rat(q1.c1) * Rat(q2.c1);
        Rat c1 = Rat(q1.c1) * Rat(q2.c0) + Rat(q2.c1) * Rat(q1.c0);
        Rat c0 = Rat(q1.c0) * Rat(q2.c0);
        auto cp = charpoly(rho(g));
        CHECK(cp[4] == 1);
        CHECK(cp[3] == c3);
        CHECK(cp[2] == c2);
        CHECK(cp[1] == c1);
        CHECK(cp[0] == c0);
    }
}

TEST_CASE("eigenvalue formulas of the closing remark reproduce factor one") {
    // (1/2) det (tr +- sqrt(tr^2 - 4 det)) with det = 1 are roots of
    // x^2 - tr x + 1
    SL2Int g{2, 1, 1, 1};  // tr = 3, disc = 5
    auto [f1, f2] = charpoly_factors(g);
    auto [r1, r2] = quadratic_roots_sqrt5(f1);
    QuadRat half(Rat(1, 2));
    QuadRat tr(3);
    CHECK(r1 == (tr + QuadRat::sqrt5()) * half);
    CHECK(r2 == (tr - QuadRat::sqrt5()) * half);
    (void)f2;
}

TEST_CASE("pinching: the four exact eigenvalues of A.B in decreasing order") {
    auto ev = pinching_check();
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == QuadRat(9, 4));
    CHECK(ev[1] == qr(3, 2, 1, 2));
    CHECK(ev[2] == qr(3, 2, -1, 2));
    CHECK(ev[3] == QuadRat(9, -4));
    // product = det = 1
    CHECK(ev[0] * ev[1] * ev[2] * ev[3] == QuadRat(1));
    // strictly decreasing moduli
    for (size_t i = 0; i + 1 < ev.size(); ++i) CHECK(abs_compare(ev[i], ev[i + 1]) == Ordering::GT);
}

TEST_CASE("twisting: T and its second compound match the expected exact tables") {
    TwistingResult res = twisting_check();
    CHECK(res.all_nonzero);

    QuadRat t_expect[4][4] = {
        {qr(8, 5, 16, 25), qr(2, 5, 6, 25), qr(1, 5, 1, 25), qr(0, 1, 1, 25)},
        {qr(-6, 5, -18, 25), qr(2, 5, 2, 25), qr(0, 1, 7, 25), qr(3, 5, -3, 25)},
        {qr(3, 5, 3, 25), qr(0, 1, -7, 25), qr(2, 5, -2, 25), qr(-6, 5, 18, 25)},
        {qr(0, 1, -1, 25), qr(1, 5, -1, 25), qr(2, 5, -6, 25), qr(8, 5, -16, 25)},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(res.t.at(i, j) == t_expect[i][j]);

    QuadRat w_expect[6][6] = {
        {qr(56, 25, 24, 25), qr(32, 25, 16, 25), qr(18, 25, 6, 25), qr(6, 25, 2, 25), qr(2, 25, 2, 25),
         qr(1, 25, 0, 1)},
        {qr(-32, 25, -16, 25), qr(6, 25, 2, 25), qr(9, 25, 9, 25), qr(3, 25, 3, 25), qr(11, 25, 0, 1),
         qr(-2, 25, 2, 25)},
        {qr(6, 25, 2, 25), qr(-3, 25, -3, 25), qr(13, 25, 0, 1), qr(-4, 25, 0, 1), qr(-3, 25, 3, 25),
         qr(6, 25, -2, 25)},
        {qr(18, 25, 6, 25), qr(-9, 25, -9, 25), qr(-36, 25, 0, 1), qr(13, 25, 0, 1), qr(-9, 25, 9, 25),
         qr(18, 25, -6, 25)},
        {qr(-2, 25, -2, 25), qr(11, 25, 0, 1), qr(9, 25, -9, 25), qr(3, 25, -3, 25), qr(6, 25, -2, 25),
         qr(-32, 25, 16, 25)},
        {qr(1, 25, 0, 1), qr(2, 25, -2, 25), qr(18, 25, -6, 25), qr(6, 25, -2, 25), qr(32, 25, -16, 25),
         qr(56, 25, -24, 25)},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(res.t_wedge.at(i, j) == w_expect[i][j]);
}

TEST_CASE("second compound is multiplicative (Cauchy-Binet) on rational tests") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 20; ++iter) {
        QuadMatrix a(4), b(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a.at(i, j) = QuadRat(static_cast<long long>(rng() % 7) - 3);
                b.at(i, j) = QuadRat(static_cast<long long>(rng() % 7) - 3);
            }
        CHECK(second_compound(a * b) == second_compound(a) * second_compound(b));
    }
}

TEST_CASE("quad matrix inverse round trips and flags singularity") {
    QuadMatrix m = eigenvector_matrix();
    QuadMatrix inv = m.inverse();
    CHECK((m * inv) == QuadMatrix::identity(4));
    QuadMatrix sing(2);
    sing.at(0, 0) = QuadRat(1);
    sing.at(0, 1) = QuadRat(2);
    sing.at(1, 0) = QuadRat(2);
    sing.at(1, 1) = QuadRat(4);
    CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
}
