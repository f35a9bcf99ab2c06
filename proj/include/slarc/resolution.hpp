#pragma once

#include <string>
#include <vector>

#include "slarc/complex.hpp"

namespace slarc {

namespace detail {

inline std::string subset_label(uint64_t mask) {
    std::string s = "{";
    auto xs = mask_to_list(mask);
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

/// Remove element v from mask without renumbering.
inline uint64_t remove_keep(uint64_t mask, int v) {
    return mask & ~(uint64_t{1} << (v - 1));
}

/// Remove element v (if present) and shift every element above v down by one.
inline uint64_t remove_renumber(uint64_t mask, int v) {
    uint64_t below = (uint64_t{1} << (v - 1)) - 1;
    return (mask & below) | ((mask & ~below & ~(uint64_t{1} << (v - 1))) >> 1);
}

// Sign table for every constructed differential. The d^2 = 0 /
// anticommutativity contracts are verified by the constructors' callers, so
// a wrong sign here fails loudly rather than silently.
inline int sign_standard_res(int l) { return (l % 2 == 1) ? 1 : -1; }      // (-1)^{l-1}
inline int sign_simple_by_standard(int l) { return (l % 2 == 0) ? 1 : -1; }  // (-1)^l
inline int sign_bicomplex_horiz(int strand, int k) {                         // (-1)^{strand-1+k}
    return ((strand - 1 + k) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// Minimal projective resolution of the standard module M_n:
/// term m = (+)_{|I|=m} P_{n-m}^I over subsets I of {1..n}; the component
/// I -> I\{i_l} right-multiplies by the elementary right-sarc diagram at
/// position i_l - l + 1 with sign (-1)^{l-1}.
template <class K>
FormalComplex<K> resolve_standard(int n) {
    if (n < 0) throw std::invalid_argument("resolve_standard: n must be >= 0");
    FormalComplex<K> C;
    C.augmentation = "M_" + std::to_string(n);
    std::vector<std::vector<uint64_t>> labels(n + 1);
    for (int m = 0; m <= n; ++m) {
        labels[m] = subsets_lex(n, m);
        for (uint64_t I : labels[m])
            C.terms[m].push_back(
                FormalSummand{TermKind::projective, n - m, detail::subset_label(I)});
    }
    for (int m = 1; m <= n; ++m) {
        auto& ents = C.diffs[m];
        for (size_t ji = 0; ji < labels[m].size(); ++ji) {
            uint64_t I = labels[m][ji];
            auto elems = mask_to_list(I);
            for (int l = 1; l <= m; ++l) {
                int il = elems[l - 1];
                uint64_t tgt = detail::remove_keep(I, il);
                int row = static_cast<int>(subset_lex_rank(tgt, n));
                int p = il - l + 1;  // position of i_l among the surviving strands
                AlgebraElement<K> v = AlgebraElement<K>::from_diagram(
                    elementary(n - m + 1, p, Side::right));
                if (detail::sign_standard_res(l) < 0) v = -v;
                ents.push_back(FormalEntry<K>{row, static_cast<int>(ji), std::move(v)});
            }
        }
    }
    return C;
}

/// Resolution of the simple module L_k by standard modules, windowed at
/// t_max: term m = (+)_{|I|=m} M_{k+m}^I over I in {1..k+m}; the component
/// I -> I_{m,-l} (remove the l-th element and renumber) right-multiplies by
/// the elementary left-sarc diagram at position i_l with sign (-1)^l.
template <class K>
FormalComplex<K> resolve_simple_by_standard(int k, int t_max) {
    if (k < 0 || t_max < 0)
        throw std::invalid_argument("resolve_simple_by_standard: bad arguments");
    FormalComplex<K> C;
    C.truncated_above = true;
    C.augmentation = "L_" + std::to_string(k);
    std::vector<std::vector<uint64_t>> labels(t_max + 1);
    for (int m = 0; m <= t_max; ++m) {
        labels[m] = subsets_lex(k + m, m);
        for (uint64_t I : labels[m])
            C.terms[m].push_back(
                FormalSummand{TermKind::standard_mod, k + m, detail::subset_label(I)});
    }
    for (int m = 1; m <= t_max; ++m) {
        auto& ents = C.diffs[m];
        for (size_t ji = 0; ji < labels[m].size(); ++ji) {
            uint64_t I = labels[m][ji];
            auto elems = mask_to_list(I);
            for (int l = 1; l <= m; ++l) {
                int il = elems[l - 1];
                uint64_t tgt = detail::remove_renumber(I, il);
                int row = static_cast<int>(subset_lex_rank(tgt, k + m - 1));
                AlgebraElement<K> v = AlgebraElement<K>::from_diagram(
                    elementary(k + m, il, Side::left));
                if (detail::sign_simple_by_standard(l) < 0) v = -v;
                ents.push_back(FormalEntry<K>{row, static_cast<int>(ji), std::move(v)});
            }
        }
    }
    return C;
}

/// Bicomplex with the projective resolution of M_{n+m} above the m-th column
/// of the standard resolution of L_n. Cell (m,k) = (+) P_{n+m-k}^{I,J};
/// the vertical differential is the standard-resolution one in J at fixed I,
/// the horizontal one removes i_p from I (renumbering both labels) with sign
/// (-1)^{i_p - 1 + k}, right-multiplying by the left-sarc diagram at the
/// position of strand i_p among the k-punctured strand set.
template <class K>
Bicomplex<K> build_bicomplex(int n, int window) {
    if (n < 0 || window < 0) throw std::invalid_argument("build_bicomplex: bad arguments");
    Bicomplex<K> B;
    B.window = window;
    // summand order within a cell: I outer (lex), J inner (lex)
    auto cell_index = [&](int nm, uint64_t I, uint64_t J, int k) {
        return static_cast<int>(subset_lex_rank(I, nm) * binom(nm, k) + subset_lex_rank(J, nm));
    };
    for (int m = 0; m + 0 <= window; ++m) {
        int nm = n + m;
        for (int k = 0; m + k <= window && k <= nm; ++k) {
            auto Is = subsets_lex(nm, m);
            auto Js = subsets_lex(nm, k);
            auto& cell = B.cells[{m, k}];
            for (uint64_t I : Is)
                for (uint64_t J : Js)
                    cell.push_back(FormalSummand{TermKind::projective, nm - k,
                                                 detail::subset_label(I) + "|" +
                                                     detail::subset_label(J)});
            // vertical: J -> J \ {j_l}, standard-resolution rule at fixed I
            if (k >= 1) {
                auto& ents = B.d_vert[{m, k}];
                for (uint64_t I : Is)
                    for (uint64_t J : Js) {
                        int col = cell_index(nm, I, J, k);
                        auto elems = mask_to_list(J);
                        for (int l = 1; l <= k; ++l) {
                            int jl = elems[l - 1];
                            uint64_t tgt = detail::remove_keep(J, jl);
                            int row = cell_index(nm, I, tgt, k - 1);
                            AlgebraElement<K> v = AlgebraElement<K>::from_diagram(
                                elementary(nm - k + 1, jl - l + 1, Side::right));
                            if (detail::sign_standard_res(l) < 0) v = -v;
                            ents.push_back(FormalEntry<K>{row, col, std::move(v)});
                        }
                    }
            }
            // horizontal: remove i_p from I when i_p is not in J
            if (m >= 1) {
                auto& ents = B.d_horiz[{m, k}];
                for (uint64_t I : Is)
                    for (uint64_t J : Js) {
                        int col = cell_index(nm, I, J, k);
                        for (int ip : mask_to_list(I)) {
                            if (J & (uint64_t{1} << (ip - 1))) continue;
                            uint64_t Irn = detail::remove_renumber(I, ip);
                            uint64_t Jrn = detail::remove_renumber(J, ip);
                            int row = cell_index(nm - 1, Irn, Jrn, k);
                            int strands = nm - k;  // strand count of the source projective
                            int pos = ip - std::popcount(J & ((uint64_t{1} << (ip - 1)) - 1));
                            AlgebraElement<K> v = AlgebraElement<K>::from_diagram(
                                elementary(strands, pos, Side::left));
                            if (detail::sign_bicomplex_horiz(ip, k) < 0) v = -v;
                            ents.push_back(FormalEntry<K>{row, col, std::move(v)});
                        }
                    }
            }
        }
    }
    return B;
}

/// Projective resolution of L_n as the total complex of the bicomplex,
/// windowed at t_max.
template <class K>
FormalComplex<K> resolve_simple_projective(int n, int t_max) {
    FormalComplex<K> C = total_complex(build_bicomplex<K>(n, t_max));
    C.augmentation = "L_" + std::to_string(n);
    return C;
}

/// n-fold derived tensor power of M_1 built by iterating tensor_complexes on
/// the two-term resolution of M_1, with summand labels rewritten as the
/// subsets of collapsed strands so the result can be compared entrywise with
/// resolve_standard(n).
template <class K>
FormalComplex<K> m1_tensor_power(int n) {
    if (n < 1) throw std::invalid_argument("m1_tensor_power: n must be >= 1");
    FormalComplex<K> base;
    base.terms[0].push_back(FormalSummand{TermKind::projective, 1, "0"});
    base.terms[1].push_back(FormalSummand{TermKind::projective, 0, "1"});
    base.diffs[1].push_back(FormalEntry<K>{
        0, 0, AlgebraElement<K>::from_diagram(elementary(1, 1, Side::right))});
    FormalComplex<K> C = base;
    for (int i = 1; i < n; ++i) C = tensor_complexes(C, base);
    // labels are now chains e_1*e_2*...*e_n with e_i in {0,1}; factor i sits
    // at strand i, so the collapsed strands form the subset label
    for (auto& [t, summands] : C.terms)
        for (auto& s : summands) {
            uint64_t I = 0;
            int strand = 1;
            for (char ch : s.label) {
                if (ch == '1') I |= uint64_t{1} << (strand - 1);
                if (ch == '0' || ch == '1') ++strand;
            }
            s.label = detail::subset_label(I);
        }
    C.augmentation = "M_" + std::to_string(n);
    return C;
}

/// Koszul-linearity: every differential entry is homogeneous of sarc degree
/// exactly one.
template <class K>
bool check_linearity(const FormalComplex<K>& C) {
    for (const auto& [t, ents] : C.diffs)
        for (const auto& e : ents)
            for (const auto& [d, c] : e.val.terms())
                if (d.sarc_degree() != 1) return false;
    return true;
}

}  // namespace slarc
