#include "doctest.h"
#include "slarc/functors.hpp"
#include "slarc/scalar.hpp"

using namespace slarc;

TEST_CASE("width truncation functor on projectives") {
    // F_2(P_1) = P_1
    auto f21 = apply_Fk<Rat>(1, 2);
    for (int p = 0; p <= 5; ++p) CHECK(f21.dim(p) == projective<Rat>(1).dim(p));
    // F_1(P_3) = P_3(<=1) with dim 7 at weight 2
    auto f13 = apply_Fk<Rat>(3, 1);
    CHECK(f13.dim(2) == 7);
    CHECK_THROWS_AS(apply_Fk(resolve_simple_by_standard<Rat>(1, 2), 1, 2),
                    std::invalid_argument);
}

TEST_CASE("derived width truncation on standard modules") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            auto rep = derived_Fk_standard<Rat>(n, k, 6);
            CHECK(rep.verified);
        }
}

TEST_CASE("restriction decompositions with explicit isomorphisms") {
    for (int n = 0; n <= 4; ++n) {
        auto rp = res_projective_iso<Rat>(n, 6);
        CHECK(rp.verified);
        // hockey stick: dim Res(P_2) at weight p is C(p+3, 2)
        if (n == 2)
            for (int p = 0; p <= 5; ++p) CHECK(rp.dims.at(p) == binom(p + 3, 2));
        auto rm = res_standard_iso<Rat>(n, 6);
        CHECK(rm.verified);
        auto rl = res_simple_check<Rat>(n, 6);
        CHECK(rl.verified);
    }
    CHECK(res_simple_check<Rat>(0, 5).output == "0");
    // Res(M_3) splits as M_3 + M_2
    auto rm3 = res_standard_iso<Rat>(3, 6);
    for (int p = 0; p <= 5; ++p)
        CHECK(rm3.dims.at(p) == binom(p, 3) + binom(p, 2));
}

TEST_CASE("induction: projectives, the standard SES, derived vanishing") {
    for (int n = 0; n <= 3; ++n) {
        CHECK(ind_projective_check<Rat>(n, 6).verified);
        CHECK(ind_standard_ses<Rat>(n, 6).verified);
        CHECK(ind_derived_check<Rat>(n, 6).verified);
        CHECK(ind_simple_check<Rat>(n, 7).verified);
    }
    // Ind(M_1) has weight-2 dimension C(2,1) + C(2,2) = 3
    auto q = cokernel(induce(presentation_of_standard<Rat>(1)));
    CHECK(q.dim(2) == 3);
}

TEST_CASE("cabling decompositions") {
    // ^{[2]}M_2 = M_2^4 + M_1 with full equivariant verification
    auto c22 = cable_standard_iso<Rat>(2, 2, 4, true);
    CHECK(c22.verified);
    for (int p = 0; p <= 4; ++p) CHECK(c22.dims.at(p) == binom(2 * p, 2));

    for (int n = 0; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k) CHECK(cable_standard_iso<Rat>(n, k, 4, true).verified);
    // dimension-level verification further out
    for (int n = 0; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(cable_standard_iso<Rat>(n, k, 3, false).verified);

    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) CHECK(cable_simple_check<Rat>(n, k, 7));

    // iterated cabling composes multiplicatively on dimensions
    for (int k = 2; k <= 3; ++k)
        for (int s = 2; s <= 3; ++s)
            for (int p = 0; p <= 2; ++p)
                CHECK(cabled(cabled(standard<Rat>(2), k), s).dim(p) ==
                      cabled(standard<Rat>(2), k * s).dim(p));
}

TEST_CASE("weak adjointness of the two cabling functors") {
    for (int n = 0; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            CHECK(weak_adjointness_check(n, standard<Rat>(2), k));
            CHECK(weak_adjointness_check(n, projective<Rat>(1), k));
        }
    // the worked example: Hom(L_2 P_1, M_1) = 2 = Hom(P_1, ^{[2]}M_1)
    CHECK(hom_dim_projective(2, standard<Rat>(1)) == 2);
    CHECK(hom_dim_projective(1, cabled(standard<Rat>(1), 2)) == 2);
}

TEST_CASE("restriction is exact and commutes with cokernels") {
    for (int n = 1; n <= 3; ++n) {
        auto from_coker = restricted(cokernel(presentation_of_standard<Rat>(n)));
        auto from_span = restricted(standard<Rat>(n));
        ModuleMorphism<Rat> id;
        for (int p = 0; p <= 5; ++p) {
            REQUIRE(from_coker.dim(p) == from_span.dim(p));
            id.maps[p] = SparseMat<Rat>::identity(from_coker.dim(p));
        }
        // the cokernel's reduce-based action and the span's direct action
        // agree coordinatewise after restriction
        CHECK(verify_equivariance(from_coker, from_span, id, 0, 5));
    }
}

TEST_CASE("monoidal structure") {
    CHECK(tensor_interchange_check<Rat>(2));
    CHECK(tensor_projectives(2, 3) == 5);
    CHECK(lk_projective(2, 3) == 6);
    // the unit object is neutral on morphisms
    auto alpha = AlgebraElement<Rat>::from_diagram(elementary(2, 1, Side::left));
    CHECK(tensor_morphisms(alpha, unit_idempotent<Rat>(0)) == alpha);
    // Hom(P_1, P_1) is two-dimensional: the identity strand and the
    // sarc-pair composite
    CHECK(enumerate_basis(1, 1).size() == 2);
}

TEST_CASE("decategorification consistency across the functors") {
    CHECK(decat_consistency<Rat>(4, 6));
}
