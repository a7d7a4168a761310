#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcohom/representation.hpp"

using namespace pfc;

TEST_CASE("catalog C2") {
    auto cg = catalog_group("C2");
    CHECK(cg.group->order() == 2);
    CHECK(cg.irreps.size() == 2);
    CHECK(cg.irreps[0].degree == 1);
    CHECK(cg.irreps[1].degree == 1);
    CHECK(cg.group->exponent() == 2);
    CHECK(cg.group->conjugacy_classes().size() == 2);
}

TEST_CASE("catalog Q8") {
    auto cg = catalog_group("Q8");
    CHECK(cg.group->order() == 8);
    CHECK(cg.group->conjugacy_classes().size() == 5);
    REQUIRE(cg.irreps.size() == 5);
    auto theta = character_of(cg.irreps[4]);
    CHECK(theta.degree() == 2);
    // character (2, -2, 0, 0, 0) on the classes {1}, {-1}, {+-i}, {+-j}, {+-k}
    CHECK(theta.value_at(0) == Cyclo(Rat(2)));
    CHECK(theta.value_at(1) == Cyclo(Rat(-2)));
    CHECK(theta.value_at(2) == Cyclo(Rat(0)));
    CHECK(theta.value_at(4) == Cyclo(Rat(0)));
    CHECK(theta.value_at(6) == Cyclo(Rat(0)));
    CHECK(cg.group->center().size() == 2);
}

TEST_CASE("catalog S3 and D4") {
    auto s3 = catalog_group("S3");
    CHECK(s3.group->order() == 6);
    std::vector<int> degs;
    for (const auto& r : s3.irreps) degs.push_back(r.degree);
    CHECK(degs == std::vector<int>{1, 1, 2});
    auto d4 = catalog_group("D4");
    CHECK(d4.group->order() == 8);
    CHECK(d4.irreps.size() == 5);
    CHECK_THROWS_AS(catalog_group("D2"), precondition_error);
    CHECK_THROWS_AS(catalog_group("X9"), precondition_error);
}

TEST_CASE("orthogonality and sum of squares on the catalog") {
    for (const std::string name : {"C2", "C3", "C4", "C6", "S3", "D4", "Q8"}) {
        auto cg = catalog_group(name);
        long sq = 0;
        for (const auto& r : cg.irreps) sq += static_cast<long>(r.degree) * r.degree;
        CHECK(sq == cg.group->order());
        for (std::size_t i = 0; i < cg.irreps.size(); ++i)
            for (std::size_t j = 0; j < cg.irreps.size(); ++j) {
                Cyclo ip = character_inner(character_of(cg.irreps[i]), character_of(cg.irreps[j]));
                CHECK(ip == Cyclo(Rat(i == j ? 1 : 0)));
            }
    }
}

TEST_CASE("catalog representations are unitary") {
    for (const std::string name : {"C4", "S3", "D4", "Q8"}) {
        auto cg = catalog_group(name);
        for (const auto& r : cg.irreps)
            for (const auto& m : r.matrices)
                CHECK(m.conj_transpose() * m == CycMat::identity(r.degree));
    }
}

TEST_CASE("group algebra operations") {
    auto cg = catalog_group("C2");
    auto e = GroupAlgebraElement::unit(cg.group);
    GroupAlgebraElement a(cg.group);
    a.coeffs[0] = Cyclo(Rat(3));
    a.coeffs[1] = Cyclo(Rat(1));
    CHECK(algebra_sub(algebra_mul(e, a), a).is_zero());
    CHECK(algebra_sub(algebra_involution(algebra_involution(a)), a).is_zero());
    // apply_rep(sgn of C2, 3e + sigma) = [2]
    CHECK(apply_rep(cg.irreps[1], a).at(0, 0) == Cyclo(Rat(2)));
}

TEST_CASE("involution is an anti-automorphism") {
    auto cg = catalog_group("S3");
    GroupAlgebraElement a(cg.group), b(cg.group);
    for (int g = 0; g < 6; ++g) {
        a.coeffs[g] = Cyclo(rat(g + 1, 2));
        b.coeffs[g] = Cyclo(rat(5 - g, 3));
    }
    auto lhs = algebra_involution(algebra_mul(a, b));
    auto rhs = algebra_mul(algebra_involution(b), algebra_involution(a));
    CHECK(algebra_sub(lhs, rhs).is_zero());
}

TEST_CASE("rationalize composes like module maps") {
    auto cg = catalog_group("S3");
    auto rnd = [&](int seed) {
        AlgebraMat m = algebra_mat(cg.group, 2, 2);
        int s = seed;
        for (auto& row : m)
            for (auto& x : row)
                for (auto& c : x.coeffs) {
                    s = (s * 1103515245 + 12345) & 0x7fffffff;
                    c = Cyclo(Rat(s % 5 - 2));
                }
        return m;
    };
    AlgebraMat a = rnd(7), b = rnd(91);
    // module composition x -> (x A) B corresponds to multiplying rational blocks
    RatMat ra = rationalize(a), rb = rationalize(b);
    // entrywise order: (B after A)_{lj} = sum_k A_kj B_lk is what the rational
    // product rb * ra realizes; check against direct rationalization
    AlgebraMat comp = algebra_mat(cg.group, 2, 2);
    for (int l = 0; l < 2; ++l)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                comp[l][j] = algebra_add(comp[l][j], algebra_mul(a[k][j], b[l][k]));
    CHECK(rationalize(comp) == rb * ra);
}

TEST_CASE("group law violations are rejected") {
    // 2x2 table that is not associative / lacks identity
    std::vector<std::vector<int>> bad = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroupData("bad", bad, {}), precondition_error);
}
