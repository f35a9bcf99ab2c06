#include <random>

#include "doctest.h"
#include "slarc/algebra.hpp"
#include "slarc/scalar.hpp"

using namespace slarc;
using A = AlgebraElement<Rat>;

namespace {
A diag(const Diagram& d, Flavor f = Flavor::minus) { return A::from_diagram(d, f); }
}

TEST_CASE("unit idempotents and the weight decomposition") {
    for (int n = 0; n <= 3; ++n) {
        A un = unit_idempotent<Rat>(n);
        for (const auto& d : enumerate_basis(n, 2)) {
            CHECK(multiply(un, diag(d)) == diag(d));
            CHECK(multiply(diag(d), unit_idempotent<Rat>(2)) == diag(d));
        }
    }
    // mutually orthogonal
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            if (n != m)
                CHECK(multiply(unit_idempotent<Rat>(n), unit_idempotent<Rat>(m)).is_zero());

    A mixed = unit_idempotent<Rat>(2) + diag(cup_cap());
    CHECK(component(mixed, 1, 1) == diag(cup_cap()));
    A resum(Flavor::minus);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) resum += component(mixed, m, n);
    CHECK(resum == mixed);
}

TEST_CASE("floating arc rule per flavor") {
    Diagram c = cup_cap();
    CHECK(multiply(diag(c), diag(c)).is_zero());
    A cp = diag(c, Flavor::plus);
    CHECK(multiply(cp, cp) == cp);
    // mismatched inner counts give zero, not an error
    CHECK(multiply(diag(identity_diagram(1)), diag(identity_diagram(2))).is_zero());
    CHECK_THROWS_AS(multiply(cp, diag(c)), std::invalid_argument);
}

TEST_CASE("associativity on all small diagram triples, both flavors") {
    for (Flavor f : {Flavor::minus, Flavor::plus})
        for (int b = 0; b <= 2; ++b)
            for (int cnt = 0; cnt <= 2; ++cnt)
                for (const auto& x : enumerate_basis(2, b))
                    for (const auto& y : enumerate_basis(b, cnt))
                        for (const auto& z : enumerate_basis(cnt, 2)) {
                            A xy_z = multiply(multiply(diag(x, f), diag(y, f)), diag(z, f));
                            A x_yz = multiply(diag(x, f), multiply(diag(y, f), diag(z, f)));
                            CHECK(xy_z == x_yz);
                        }
}

TEST_CASE("sarc grading is multiplicative in the minus flavor") {
    for (int b = 0; b <= 3; ++b)
        for (const auto& x : enumerate_basis(2, b))
            for (const auto& y : enumerate_basis(b, 2)) {
                A p = multiply(diag(x), diag(y));
                if (p.is_zero()) continue;
                for (const auto& [d, cf] : p.terms())
                    CHECK(d.sarc_degree() == x.sarc_degree() + y.sarc_degree());
            }
}

TEST_CASE("reflect extends to an anti-involution, iota to a homomorphism") {
    for (Flavor f : {Flavor::minus, Flavor::plus})
        for (const auto& x : enumerate_basis(2, 1))
            for (const auto& y : enumerate_basis(1, 2)) {
                CHECK(reflect(multiply(diag(x, f), diag(y, f))) ==
                      multiply(reflect(diag(y, f)), reflect(diag(x, f))));
                CHECK(iota(multiply(diag(x, f), diag(y, f))) ==
                      multiply(iota(diag(x, f)), iota(diag(y, f))));
                CHECK(reflect(reflect(diag(x, f))) == diag(x, f));
            }
}

TEST_CASE("sign idempotents in the plus flavor") {
    A em = e_minus<Rat>();
    CHECK(em == unit_idempotent<Rat>(1, Flavor::plus) - e_plus<Rat>());
    CHECK(multiply(e_plus<Rat>(), em).is_zero());
    CHECK(multiply(em, e_plus<Rat>()).is_zero());

    SignSequence mm{Sign::minus, Sign::minus};
    A emm = sign_idempotent<Rat>(mm);
    CHECK(multiply(emm, emm) == emm);

    // for every length <= 4: idempotent, mutually orthogonal, sums to 1_n
    for (int n = 1; n <= 4; ++n) {
        std::vector<SignSequence> all;
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignSequence eps;
            for (int i = 0; i < n; ++i)
                eps.push_back((mask >> i) & 1 ? Sign::minus : Sign::plus);
            all.push_back(eps);
        }
        A sum(Flavor::plus);
        for (const auto& eps : all) {
            A e = sign_idempotent<Rat>(eps);
            CHECK(multiply(e, e) == e);
            sum += e;
        }
        CHECK(sum == unit_idempotent<Rat>(n, Flavor::plus));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                if (i != j)
                    CHECK(multiply(sign_idempotent<Rat>(all[i]), sign_idempotent<Rat>(all[j]))
                              .is_zero());
    }

    CHECK_THROWS_AS(sign_idempotent<Rat>(mm, Flavor::minus), std::invalid_argument);
}

TEST_CASE("equivalence witnesses") {
    // eps = (-): both witnesses are 1_1
    {
        auto [f, b] = equivalence_witness<Rat>({Sign::minus});
        CHECK(f == unit_idempotent<Rat>(1, Flavor::plus));
        CHECK(b == unit_idempotent<Rat>(1, Flavor::plus));
    }
    // eps = (+): identities reduce to e+ c e+ = e+
    {
        auto [f, b] = equivalence_witness<Rat>({Sign::plus});
        A e = e_plus<Rat>();
        A lhs = multiply(multiply(multiply(multiply(e, f), unit_idempotent<Rat>(0, Flavor::plus)), b), e);
        CHECK(lhs == e);
    }
    // a mixed five-strand pattern plus every sequence of length <= 4
    std::vector<SignSequence> cases{{Sign::minus, Sign::plus, Sign::minus, Sign::minus, Sign::plus}};
    for (int n = 1; n <= 4; ++n)
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignSequence eps;
            for (int i = 0; i < n; ++i)
                eps.push_back((mask >> i) & 1 ? Sign::minus : Sign::plus);
            cases.push_back(eps);
        }
    for (const auto& eps : cases) {
        int m = minus_count(eps);
        A e_eps = sign_idempotent<Rat>(eps);
        A e_m = sign_idempotent<Rat>(all_minus(m));
        auto [fwd, bwd] = equivalence_witness<Rat>(eps);
        A lhs1 = multiply(multiply(multiply(multiply(e_m, bwd), e_eps), fwd), e_m);
        A lhs2 = multiply(multiply(multiply(multiply(e_eps, fwd), e_m), bwd), e_eps);
        CHECK(lhs1 == e_m);
        CHECK(lhs2 == e_eps);
    }
}

TEST_CASE("tensor of elements stacks first factor at the bottom") {
    A a = diag(identity_diagram(1));
    A b = diag(elementary(1, 1, Side::right));
    A t = tensor(a, b);
    REQUIRE(t.term_count() == 1);
    const Diagram& d = t.terms().begin()->first;
    CHECK(d.left == 1);
    CHECK(d.right == 2);
    // first factor kept its strand at position 1
    CHECK(d.larc_left_list() == std::vector<int>{1});
    CHECK(d.larc_right_list() == std::vector<int>{1});
    // unit object behaves neutrally
    CHECK(tensor(a, unit_idempotent<Rat>(0)) == a);
    CHECK(tensor(unit_idempotent<Rat>(0), a) == a);
}
