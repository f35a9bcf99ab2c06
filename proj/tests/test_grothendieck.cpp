#include <random>

#include "doctest.h"
#include "slarc/grothendieck.hpp"

using namespace slarc;

TEST_CASE("basis conversion through the binomial matrices") {
    // [P_3] = [M_0] + 3[M_1] + 3[M_2] + [M_3]
    auto p3 = convert(PolyClass::monomial(3), PolyBasis::standard);
    CHECK(p3.c == std::vector<long long>{1, 3, 3, 1});
    // [M_2] = [P_0] - 2[P_1] + [P_2]
    auto m2 = convert(PolyClass::monomial(2, PolyBasis::standard), PolyBasis::projective);
    CHECK(m2.c == std::vector<long long>{1, -2, 1});
    // round trips on random polynomials of degree <= 10
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<long long> c(11);
        for (auto& x : c) x = coeff(rng);
        PolyClass f(c, PolyBasis::projective);
        CHECK(convert(convert(f, PolyBasis::standard), PolyBasis::projective) == f);
        PolyClass g(c, PolyBasis::standard);
        CHECK(convert(convert(g, PolyBasis::projective), PolyBasis::standard) == g);
    }
}

TEST_CASE("inner product") {
    CHECK(inner_product(PolyClass::monomial(2), PolyClass::monomial(3)) == 10);
    CHECK(inner_product(PolyClass::monomial(0), PolyClass::monomial(0)) == 1);
    CHECK(inner_product(PolyClass::monomial(1), parse_poly("x^2 + x")) == 5);
    CHECK_THROWS_AS(inner_product(PolyClass::monomial(1, PolyBasis::standard),
                                  PolyClass::monomial(1)),
                    std::invalid_argument);
}

TEST_CASE("decategorified operators") {
    CHECK(op_Res(parse_poly("x^3")) == parse_poly("x^3 + x^2 + x + 1"));
    CHECK(op_Fk(parse_poly("x^2"), 1) == parse_poly("2*x - 1"));
    // cabling on the standard basis
    PolyClass m2 = PolyClass::monomial(2, PolyBasis::standard);
    PolyClass got = op_cable(m2, 2);
    CHECK(got.basis == PolyBasis::standard);
    CHECK(got.c == std::vector<long long>{0, 1, 4});  // (x-1) + 4(x-1)^2
    // induction is multiplication by x
    CHECK(op_Ind(parse_poly("x^2 - 1")) == parse_poly("x^3 - x"));
    PolyClass mn = PolyClass::monomial(3, PolyBasis::standard);
    auto ind = convert(op_Ind(mn), PolyBasis::standard);
    CHECK(ind.c == std::vector<long long>{0, 0, 0, 1, 1});  // (x-1)^3 + (x-1)^4
    // op_Fk is idempotent
    for (int k = 0; k <= 4; ++k) {
        PolyClass f = parse_poly("x^4 - 2*x^2 + 7*x");
        CHECK(op_Fk(op_Fk(f, k), k) == op_Fk(f, k));
    }
    // Res of [M_n] adds the next class down
    for (int n = 1; n <= 5; ++n) {
        auto r = convert(op_Res(PolyClass::monomial(n, PolyBasis::standard)), PolyBasis::standard);
        std::vector<long long> expect(static_cast<size_t>(n) + 1, 0);
        expect[n] = 1;
        expect[n - 1] = 1;
        CHECK(r.c == expect);
    }
}

TEST_CASE("S counts by two routes") {
    CHECK(S_count(2, 2, 2) == 4);
    CHECK(S_count(2, 2, 1) == 1);
    CHECK(S_count(3, 2, 2) == 4);
    for (int n = 0; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int i = 0; i <= n; ++i) CHECK(S_count(n, k, i) == S_count_direct(n, k, i));
}

TEST_CASE("decategorified tensor multiplicativity") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m + n <= 7; ++m) {
            PolyClass a = convert(PolyClass::monomial(n, PolyBasis::standard), PolyBasis::projective);
            PolyClass b = convert(PolyClass::monomial(m, PolyBasis::standard), PolyBasis::projective);
            PolyClass prod = poly_mul(a, b);
            CHECK(convert(prod, PolyBasis::standard) ==
                  PolyClass::monomial(n + m, PolyBasis::standard));
        }
}

TEST_CASE("dims and classes round trip") {
    PolyClass f = parse_poly("x^3 - 2*x + 1");
    std::vector<long long> dims;
    for (int p = 0; p <= 8; ++p) dims.push_back(dims_of_class(f, p));
    auto g = class_from_dims(dims, 5);
    CHECK(convert(g, PolyBasis::projective) == f);
    CHECK_THROWS_AS(class_from_dims({1, 5, 2, 0}, 1), std::invalid_argument);
}

TEST_CASE("polynomial parser") {
    CHECK(parse_poly("x^3 - 2*x + 1").c == std::vector<long long>{1, -2, 0, 1});
    CHECK(parse_poly("  -x + 4 ").c == std::vector<long long>{4, -1});
    CHECK(parse_poly("7").c == std::vector<long long>{7});
    CHECK(parse_poly("2x^2").c == std::vector<long long>{0, 0, 2});
    CHECK(parse_poly("x - x").is_zero());
    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("3 + + 4"), std::invalid_argument);
    CHECK(parse_poly("x^3 - 2*x + 1").str() == "x^3 - 2*x + 1");
    CHECK(PolyClass::monomial(2, PolyBasis::standard).str() == "(x-1)^2");
}
