#pragma once

#include <map>
#include <vector>

#include "slarc/algebra.hpp"
#include "slarc/grothendieck.hpp"
#include "slarc/linalg.hpp"

namespace slarc {

/// Decomposition of P_n over A+ into the classes P_{(-^m)}: multiplicities
/// keyed by the number of minuses.
struct PlusDecomposition {
    int n = 0;
    std::map<int, long long> multiplicity;
    bool verified = false;  // idempotency and both equivalence identities for every epsilon
    long long total() const {
        long long t = 0;
        for (const auto& [m, c] : multiplicity) t += c;
        return t;
    }
};

namespace detail {
inline std::vector<SignSequence> all_sign_sequences(int n) {
    std::vector<SignSequence> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SignSequence eps;
        for (int i = 0; i < n; ++i)
            eps.push_back((mask >> i) & 1 ? Sign::minus : Sign::plus);
        out.push_back(eps);
    }
    return out;
}
}  // namespace detail

/// Enumerate all sign sequences of length n, check each idempotent and its
/// equivalence with e_{(-^m)} through the explicit witnesses, and group by
/// minus count.
template <class K>
PlusDecomposition decompose_projective_plus(int n) {
    PlusDecomposition out;
    out.n = n;
    out.verified = true;
    for (const auto& eps : detail::all_sign_sequences(n)) {
        int m = minus_count(eps);
        AlgebraElement<K> e = sign_idempotent<K>(eps);
        AlgebraElement<K> em = sign_idempotent<K>(all_minus(m));
        if (!(multiply(e, e) == e)) out.verified = false;
        auto [fwd, bwd] = equivalence_witness<K>(eps);
        AlgebraElement<K> id1 = multiply(multiply(multiply(multiply(em, bwd), e), fwd), em);
        AlgebraElement<K> id2 = multiply(multiply(multiply(multiply(e, fwd), em), bwd), e);
        if (!(id1 == em) || !(id2 == e)) out.verified = false;
        ++out.multiplicity[m];
    }
    return out;
}

/// dim Hom(P_{(-^m)}, P_{(-^n)}) = rank of x |-> e_{(-^m)} x e_{(-^n)} on
/// the finite block 1_m A+ 1_n.
template <class K>
long long hom_dim_plus(int m, int n) {
    auto basis = enumerate_basis(m, n);
    AlgebraElement<K> em = sign_idempotent<K>(all_minus(m));
    AlgebraElement<K> en = sign_idempotent<K>(all_minus(n));
    SparseMat<K> mat(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        AlgebraElement<K> img = multiply(
            multiply(em, AlgebraElement<K>::from_diagram(basis[j], Flavor::plus)), en);
        for (const auto& [d, c] : img.terms())
            mat.add(static_cast<int>(basis_rank(d)), static_cast<int>(j), c);
    }
    return rank_of(mat);
}

/// [P_{(-^n)}] from the triangular system [P_n] = sum_m a_{n,m} [P_{(-^m)}],
/// with the multiplicities a_{n,m} read from the verified decompositions.
/// Comes out as (x-1)^n.
template <class K>
PolyClass k0_plus_class(int n) {
    std::vector<PolyClass> classes;  // [P_{(-^m)}] in the projective basis
    for (int j = 0; j <= n; ++j) {
        auto dec = decompose_projective_plus<K>(j);
        PolyClass v = PolyClass::monomial(j);  // [P_j] = x^j
        for (int m = 0; m < j; ++m) {
            auto it = dec.multiplicity.find(m);
            if (it != dec.multiplicity.end()) v -= classes[m] * it->second;
        }
        // the leading multiplicity a_{j,j} = 1
        classes.push_back(v);
    }
    return classes[n];
}

}  // namespace slarc
