#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcohom/cyclotomic.hpp"

#include <random>

using namespace pfc;

TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    // Phi_4 = x^2 + 1
    auto p4 = cyclotomic_polynomial(4);
    REQUIRE(p4.size() == 3);
    CHECK(p4[0] == 1);
    CHECK(p4[1] == 0);
    CHECK(p4[2] == 1);
    // Phi_6 = x^2 - x + 1
    auto p6 = cyclotomic_polynomial(6);
    REQUIRE(p6.size() == 3);
    CHECK(p6[0] == 1);
    CHECK(p6[1] == -1);
    CHECK(p6[2] == 1);
}

TEST_CASE("zeta_4 squared is -1") {
    Cyclo i = Cyclo::zeta(4);
    CHECK(i * i == Cyclo(Rat(-1)));
}

TEST_CASE("primitive cube roots sum to -1") {
    Cyclo w = Cyclo::zeta(3);
    CHECK(w + w * w == Cyclo(Rat(-1)));
}

TEST_CASE("(1+z5)(1+z5^4) against long-form polynomial oracle") {
    // Oracle: multiply (1+x)(1+x^4) = 1 + x + x^4 + x^5 as plain polynomials,
    // then reduce with x^5 = 1 and Phi_5 = 1+x+x^2+x^3+x^4, i.e. x^4 = -(1+x+x^2+x^3).
    // 1 + x + x^4 + 1 = 2 + x - (1+x+x^2+x^3) = 1 - x^2 - x^3.
    Cyclo z = Cyclo::zeta(5);
    Cyclo lhs = (Cyclo(Rat(1)) + z) * (Cyclo(Rat(1)) + Cyclo::zeta(5, 4));
    Cyclo rhs = Cyclo(Rat(1)) - z * z - z * z * z;
    CHECK(lhs == rhs);
}

TEST_CASE("conjugation") {
    Cyclo i = Cyclo::zeta(4);
    CHECK(i.conj() == -i);
    Cyclo r(Rat(7, 3));
    CHECK(r.conj() == r);
    Cyclo real5 = Cyclo::zeta(5) + Cyclo::zeta(5, 4);
    CHECK(real5.conj() == real5);
    // involutive automorphism on products
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> a(euler_phi(12)), b(euler_phi(12));
        for (auto& x : a) x = rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
        for (auto& x : b) x = rat(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
        Cyclo za(12, a), zb(12, b);
        CHECK(za.conj().conj() == za);
        CHECK((za * zb).conj() == za.conj() * zb.conj());
    }
}

TEST_CASE("field arithmetic properties") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rat> a(euler_phi(8));
        for (auto& x : a) x = rat(static_cast<long>(rng() % 21) - 10, 1 + rng() % 5);
        Cyclo z(8, a);
        if (z.is_zero()) continue;
        CHECK(z / z == Cyclo(Rat(1)));
        CHECK(z * z.inverse() == Cyclo(Rat(1)));
    }
    CHECK_THROWS_AS(Cyclo(Rat(1)) / Cyclo(Rat(0)), precondition_error);
}

TEST_CASE("conductor coercion") {
    Cyclo w3 = Cyclo::zeta(3);
    Cyclo i = Cyclo::zeta(4);
    Cyclo prod = w3 * i;  // lives in Q(zeta_12)
    CHECK(prod.conductor() == 12);
    CHECK(prod == Cyclo::zeta(12, 4) * Cyclo::zeta(12, 3));
    // zeta_6 = 1 + zeta_3, compared across conductors
    CHECK(Cyclo::zeta(6) == Cyclo(Rat(1)) + Cyclo::zeta(3));
}

TEST_CASE("conductor ceiling enforced") {
    int old = Cyclo::conductor_ceiling();
    Cyclo::set_conductor_ceiling(10);
    CHECK_THROWS_AS(Cyclo::zeta(11), precondition_error);
    Cyclo::set_conductor_ceiling(old);
    CHECK_NOTHROW(Cyclo::zeta(11));
}

TEST_CASE("sign_of_real") {
    CHECK(sign_of_real(Cyclo(rat(-3, 7))) == -1);
    CHECK(sign_of_real(Cyclo(Rat(0))) == 0);
    // 2 cos(2 pi / 5) > 0
    CHECK(sign_of_real(Cyclo::zeta(5) + Cyclo::zeta(5, 4)) == 1);
    // 2 cos(4 pi / 5) < 0
    CHECK(sign_of_real(Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3)) == -1);
    // sqrt(5) = z5 - z5^2 - z5^3 + z5^4 > 0
    Cyclo s5 = Cyclo::zeta(5) - Cyclo::zeta(5, 2) - Cyclo::zeta(5, 3) + Cyclo::zeta(5, 4);
    CHECK(sign_of_real(s5) == 1);
    CHECK(sign_of_real(s5 * s5 - Cyclo(Rat(5))) == 0);
    CHECK_THROWS_AS(sign_of_real(Cyclo::zeta(4)), precondition_error);
    // multiplicativity and positivity of squares
    std::mt19937_64 rng(7);
    for (int t = 0; t < 15; ++t) {
        std::vector<Rat> a(euler_phi(5), Rat(0));
        for (auto& x : a) x = rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
        Cyclo z(5, a);
        Cyclo re = z + z.conj();
        if (!re.is_zero()) CHECK(sign_of_real(re * re) == 1);
        Cyclo re2 = z * z.conj();
        if (!re2.is_zero()) CHECK(sign_of_real(re2) == 1);
        if (!re.is_zero() && !re2.is_zero())
            CHECK(sign_of_real(re * re2) == sign_of_real(re) * sign_of_real(re2));
    }
}
