#include <doctest.h>

#include <random>

#include "hyprv/quad_field.hpp"

using namespace hyprv;

namespace {

QuadRat random_quad(std::mt19937_64& rng) {
    auto small = [&]() {
        long long num = static_cast<long long>(rng() % 41) - 20;
        long long den = 1 + static_cast<long long>(rng() % 9);
        return Rat(num, den);
    };
    return QuadRat(small(), small());
}

}  // namespace

TEST_CASE("spot values") {
    QuadRat s5 = QuadRat::sqrt5();
    QuadRat a = QuadRat(9) + QuadRat(4) * s5;
    QuadRat b = QuadRat(9) - QuadRat(4) * s5;
    CHECK(a * b == QuadRat(1));

    QuadRat half(Rat(1, 2));
    QuadRat c = (QuadRat(3) + s5) * half;
    QuadRat d = (QuadRat(3) - s5) * half;
    CHECK(c * d == QuadRat(1));

    CHECK((QuadRat(2) - s5).sign() == -1);  // 4 < 5
    CHECK(s5.sign() == 1);
    CHECK(QuadRat().sign() == 0);

    // the ordering chain 9+4s5 > (3+s5)/2 > (3-s5)/2 > 1/(9+4s5)
    QuadRat inv = QuadRat(1) / a;
    CHECK(a > c);
    CHECK(c > d);
    CHECK(d > inv);
    CHECK(inv == b);
}

TEST_CASE("addition and neutral elements") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        QuadRat x = random_quad(rng);
        CHECK(x + QuadRat() == x);
        CHECK(x * QuadRat(1) == x);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        QuadRat x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
    CHECK_THROWS_AS(QuadRat(1) / QuadRat(), DivisionByZeroError);
}

TEST_CASE("comparison is a total order compatible with the arithmetic") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3000; ++i) {
        QuadRat x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
        CHECK(compare(x, x) == Ordering::EQ);
        Ordering xy = compare(x, y);
        Ordering yx = compare(y, x);
        if (xy == Ordering::LT) CHECK(yx == Ordering::GT);
        if (xy == Ordering::EQ) CHECK(yx == Ordering::EQ);
        // translation invariance
        CHECK(compare(x + z, y + z) == xy);
        // multiplication by a positive preserves order
        QuadRat pos = random_quad(rng);
        if (pos.sign() > 0) CHECK(compare(x * pos, y * pos) == xy);
        // transitivity through a midpoint
        if (xy == Ordering::LT && compare(y, z) == Ordering::LT) CHECK(compare(x, z) == Ordering::LT);
    }
}

TEST_CASE("abs_compare orders by modulus") {
    QuadRat s5 = QuadRat::sqrt5();
    CHECK(abs_compare(QuadRat(-3), QuadRat(2)) == Ordering::GT);
    CHECK(abs_compare(QuadRat(2) - s5, QuadRat(1)) == Ordering::LT);
    CHECK(abs_compare(s5, -s5) == Ordering::EQ);
}

TEST_CASE("Galois conjugation is a field automorphism with multiplicative norm") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        QuadRat x = random_quad(rng), y = random_quad(rng);
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(QuadRat(x.norm()) == x * x.conjugate());
    }
}

TEST_CASE("display format") {
    QuadRat s5 = QuadRat::sqrt5();
    CHECK((QuadRat(Rat(8, 5)) + QuadRat(Rat(16, 25)) * s5).str() == "8/5 + 16/25*sqrt(5)");
    CHECK((QuadRat(Rat(1, 2)) - QuadRat(Rat(3, 4)) * s5).str() == "1/2 - 3/4*sqrt(5)");
    CHECK(QuadRat(7).str() == "7");
    CHECK(QuadRat(Rat(-2, 3)).str() == "-2/3");
    CHECK(s5.str() == "0 + 1*sqrt(5)");
}
