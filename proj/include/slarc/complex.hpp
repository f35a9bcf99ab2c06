#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slarc/algebra.hpp"
#include "slarc/combinat.hpp"
#include "slarc/diagram.hpp"
#include "slarc/grothendieck.hpp"
#include "slarc/linalg.hpp"

namespace slarc {

enum class TermKind : uint8_t { projective, standard_mod };

struct FormalSummand {
    TermKind kind = TermKind::projective;
    int index = 0;  // P_index or M_index
    std::string label;
};

template <class K>
struct FormalEntry {
    int row = 0;  // summand in position t-1
    int col = 0;  // summand in position t
    AlgebraElement<K> val;  // weight block _src B _tgt, acting by right multiplication
};

/// The weight-p slice of a formal complex: plain finite-dimensional linear
/// algebra.
template <class K>
struct WeightComplex {
    std::map<int, int> dims;           // position -> dimension
    std::map<int, SparseMat<K>> d;     // position t -> matrix dims[t-1] x dims[t]

    bool d2_zero() const {
        for (const auto& [t, dt] : d) {
            auto up = d.find(t + 1);
            if (up == d.end()) continue;
            if (!mul(dt, up->second).is_zero()) return false;
        }
        return true;
    }

    long long rank_at(int t, int dense_threshold = 200) const {
        auto it = d.find(t);
        if (it == d.end()) return 0;
        return rank_of(it->second, dense_threshold);
    }

    long long homology(int t, int dense_threshold = 200) const {
        auto dit = dims.find(t);
        long long dim_t = dit == dims.end() ? 0 : dit->second;
        return dim_t - rank_at(t, dense_threshold) - rank_at(t + 1, dense_threshold);
    }
};

/// Bounded complex of formal sums of projectives (or standard modules), with
/// differentials given by right multiplication by algebra elements. The
/// composite of adjacent differentials is verified, never assumed.
template <class K>
class FormalComplex {
public:
    Flavor flavor = Flavor::minus;
    std::map<int, std::vector<FormalSummand>> terms;      // position t >= 0
    std::map<int, std::vector<FormalEntry<K>>> diffs;     // d_t : t -> t-1
    bool truncated_above = false;   // windowed construction: top positions incomplete
    std::string augmentation;       // descriptor of H_0 (metadata only)

    int min_position() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_position() const { return terms.empty() ? -1 : terms.rbegin()->first; }

    const std::vector<FormalSummand>& term(int t) const {
        static const std::vector<FormalSummand> empty;
        auto it = terms.find(t);
        return it == terms.end() ? empty : it->second;
    }
    const std::vector<FormalEntry<K>>& diff(int t) const {
        static const std::vector<FormalEntry<K>> empty;
        auto it = diffs.find(t);
        return it == diffs.end() ? empty : it->second;
    }
};

struct D2Offender {
    int t = 0, row = 0, col = 0;
};

struct D2Report {
    bool ok = true;
    std::vector<D2Offender> offenders;
};

/// Symbolic check that adjacent differentials compose to zero in the algebra.
template <class K>
D2Report verify_d2(const FormalComplex<K>& C) {
    D2Report rep;
    for (const auto& [t, ents] : C.diffs) {
        auto up = C.diffs.find(t + 1);
        if (up == C.diffs.end()) continue;
        std::map<std::pair<int, int>, AlgebraElement<K>> acc;
        for (const auto& hi : up->second)       // t+1 -> t
            for (const auto& lo : ents) {       // t -> t-1
                if (lo.col != hi.row) continue;
                AlgebraElement<K> prod = multiply(hi.val, lo.val);
                if (prod.is_zero()) continue;
                auto key = std::make_pair(lo.row, hi.col);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, std::move(prod));
                else
                    it->second += prod;
            }
        for (const auto& [key, v] : acc)
            if (!v.is_zero()) {
                rep.ok = false;
                rep.offenders.push_back({t + 1, key.first, key.second});
            }
    }
    return rep;
}

namespace detail {

inline std::vector<Diagram> term_basis(TermKind kind, int n, int p, int width_cap) {
    if (kind == TermKind::standard_mod) {
        std::vector<Diagram> b;
        if (n <= p && n <= width_cap)
            for (uint64_t lm : subsets_lex(p, n))
                b.push_back(Diagram{p, n, lm, identity_diagram(n).larc_left});
        return b;
    }
    return enumerate_basis(p, n, WidthFilter::at_most(width_cap));
}

inline long long term_index(TermKind kind, int n, int p, int width_cap, const Diagram& d) {
    int w = d.width();
    if (w > width_cap) return -1;
    if (kind == TermKind::standard_mod) {
        if (w != n) return -1;  // right sarcs die in the quotient
        return subset_lex_rank(d.larc_left, p);
    }
    long long off = 0;
    for (int j = 0; j < w; ++j) off += binom(p, j) * binom(n, j);
    return off + subset_lex_rank(d.larc_left, p) * binom(n, w) +
           subset_lex_rank(d.larc_right, n);
}

inline long long term_dim(TermKind kind, int n, int p, int width_cap) {
    if (kind == TermKind::standard_mod) return (n <= p && n <= width_cap) ? binom(p, n) : 0;
    long long d = 0;
    for (int w = 0; w <= std::min({n, p, width_cap}); ++w) d += binom(p, w) * binom(n, w);
    return d;
}

}  // namespace detail

/// Materialize the weight-p slice; width_cap < infinity realizes the image
/// under the width-truncation functor (right multiplication never raises
/// width, so differentials restrict).
template <class K>
WeightComplex<K> materialize(const FormalComplex<K>& C, int p, int width_cap = kMaxPoints) {
    WeightComplex<K> out;
    std::map<int, std::vector<int>> offsets;  // position -> summand offsets
    for (const auto& [t, summands] : C.terms) {
        int total = 0;
        auto& off = offsets[t];
        for (const auto& s : summands) {
            off.push_back(total);
            total += static_cast<int>(detail::term_dim(s.kind, s.index, p, width_cap));
        }
        out.dims[t] = total;
    }
    for (const auto& [t, ents] : C.diffs) {
        auto src_it = C.terms.find(t);
        auto tgt_it = C.terms.find(t - 1);
        int rows = out.dims.count(t - 1) ? out.dims[t - 1] : 0;
        int cols = out.dims.count(t) ? out.dims[t] : 0;
        SparseMat<K> m(rows, cols);
        for (const auto& e : ents) {
            const FormalSummand& src = src_it->second[e.col];
            const FormalSummand& tgt = tgt_it->second[e.row];
            auto basis = detail::term_basis(src.kind, src.index, p, width_cap);
            int coff = offsets[t][e.col];
            int roff = offsets[t - 1][e.row];
            for (size_t j = 0; j < basis.size(); ++j) {
                AlgebraElement<K> img =
                    multiply(AlgebraElement<K>::from_diagram(basis[j], C.flavor), e.val);
                for (const auto& [dd, c] : img.terms()) {
                    long long i = detail::term_index(tgt.kind, tgt.index, p, width_cap, dd);
                    if (i >= 0) m.add(roff + static_cast<int>(i), coff + static_cast<int>(j), c);
                }
            }
        }
        out.d[t] = std::move(m);
    }
    return out;
}

/// Homology dimensions of the weight-p slice at the requested positions.
/// Asking for a position whose upper neighbour was truncated away is an
/// error: the answer would depend on the missing window.
template <class K>
std::vector<long long> homology_dims(const FormalComplex<K>& C, int p,
                                     const std::vector<int>& positions,
                                     int dense_threshold = 200) {
    int top = C.max_position();
    for (int t : positions)
        if (C.truncated_above && t + 1 > top)
            throw std::invalid_argument("homology_dims: neighbour term missing from window");
    WeightComplex<K> w = materialize(C, p);
    std::vector<long long> out;
    out.reserve(positions.size());
    for (int t : positions) out.push_back(w.homology(t, dense_threshold));
    return out;
}

/// Totalized tensor product. Objects: P_a (x) P_b = P_{a+b} with the first
/// factor at the bottom of the stack; the Koszul sign sits on the
/// second-factor differential and equals the first-factor degree.
template <class K>
FormalComplex<K> tensor_complexes(const FormalComplex<K>& A, const FormalComplex<K>& B) {
    for (const auto& [t, ss] : A.terms)
        for (const auto& s : ss)
            if (s.kind != TermKind::projective)
                throw std::invalid_argument("tensor_complexes: projective terms required");
    for (const auto& [t, ss] : B.terms)
        for (const auto& s : ss)
            if (s.kind != TermKind::projective)
                throw std::invalid_argument("tensor_complexes: projective terms required");

    FormalComplex<K> out;
    out.flavor = A.flavor;
    // position maps: (k, i, l, j) -> index within out.terms[k+l]
    std::map<std::tuple<int, int, int, int>, int> where;
    for (const auto& [k, sa] : A.terms)
        for (const auto& [l, sb] : B.terms) {
            int t = k + l;
            for (int i = 0; i < static_cast<int>(sa.size()); ++i)
                for (int j = 0; j < static_cast<int>(sb.size()); ++j) {
                    where[{k, i, l, j}] = static_cast<int>(out.terms[t].size());
                    out.terms[t].push_back(FormalSummand{
                        TermKind::projective, sa[i].index + sb[j].index,
                        sa[i].label + "*" + sb[j].label});
                }
        }
    // d_A (x) id
    for (const auto& [k, ents] : A.diffs)
        for (const auto& e : ents)
            for (const auto& [l, sb] : B.terms)
                for (int j = 0; j < static_cast<int>(sb.size()); ++j) {
                    auto src = where.find({k, e.col, l, j});
                    auto tgt = where.find({k - 1, e.row, l, j});
                    if (src == where.end() || tgt == where.end()) continue;
                    out.diffs[k + l].push_back(FormalEntry<K>{
                        tgt->second, src->second,
                        tensor(e.val, unit_idempotent<K>(sb[j].index, A.flavor))});
                }
    // (-1)^k id (x) d_B
    for (const auto& [k, sa] : A.terms)
        for (int i = 0; i < static_cast<int>(sa.size()); ++i)
            for (const auto& [l, ents] : B.diffs)
                for (const auto& e : ents) {
                    auto src = where.find({k, i, l, e.col});
                    auto tgt = where.find({k, i, l - 1, e.row});
                    if (src == where.end() || tgt == where.end()) continue;
                    AlgebraElement<K> v = tensor(unit_idempotent<K>(sa[i].index, A.flavor), e.val);
                    if (k % 2 != 0) v = -v;
                    out.diffs[k + l].push_back(
                        FormalEntry<K>{tgt->second, src->second, std::move(v)});
                }
    out.truncated_above = A.truncated_above || B.truncated_above;
    return out;
}

/// Coefficients of the K_0 class in the projective basis {x^n}: the signed
/// count of P_n summands.
template <class K>
std::vector<long long> euler_coefficients(const FormalComplex<K>& C) {
    std::vector<long long> coeff;
    for (const auto& [t, summands] : C.terms)
        for (const auto& s : summands) {
            if (s.kind != TermKind::projective)
                throw std::invalid_argument("euler_coefficients: projective terms required");
            if (static_cast<int>(coeff.size()) <= s.index) coeff.resize(s.index + 1, 0);
            coeff[s.index] += (t % 2 == 0) ? 1 : -1;
        }
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    return coeff;
}

/// [Q] = sum (-1)^i [P^i] as an element of K_0 in the projective basis.
template <class K>
PolyClass euler_class(const FormalComplex<K>& C) {
    return PolyClass(euler_coefficients(C), PolyBasis::projective);
}

// --- bicomplexes -----------------------------------------------------------

template <class K>
struct Bicomplex {
    Flavor flavor = Flavor::minus;
    // cell (m, k): column m (position in the standard-module resolution of
    // the simple), row k (position in the projective resolution above it)
    std::map<std::pair<int, int>, std::vector<FormalSummand>> cells;
    std::map<std::pair<int, int>, std::vector<FormalEntry<K>>> d_vert;  // (m,k) -> (m,k-1)
    std::map<std::pair<int, int>, std::vector<FormalEntry<K>>> d_horiz; // (m,k) -> (m-1,k)
    int window = 0;  // cells satisfy m + k <= window

    const std::vector<FormalSummand>& cell(int m, int k) const {
        static const std::vector<FormalSummand> empty;
        auto it = cells.find({m, k});
        return it == cells.end() ? empty : it->second;
    }
};

struct BicomplexReport {
    bool vert_squares = true;   // d_M . d_M = 0
    bool horiz_squares = true;  // d_H . d_H = 0
    bool anticommute = true;    // d_H d_M + d_M d_H = 0
    bool ok() const { return vert_squares && horiz_squares && anticommute; }
};

namespace detail {

template <class K>
std::map<std::pair<int, int>, AlgebraElement<K>> compose_entries(
    const std::vector<FormalEntry<K>>& first, const std::vector<FormalEntry<K>>& second) {
    // x |-> (x . first) . second, i.e. entries multiply first*... in order
    std::map<std::pair<int, int>, AlgebraElement<K>> acc;
    for (const auto& a : first)
        for (const auto& b : second) {
            if (a.row != b.col) continue;
            AlgebraElement<K> prod = multiply(a.val, b.val);
            if (prod.is_zero()) continue;
            auto key = std::make_pair(b.row, a.col);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, std::move(prod));
            else
                it->second += prod;
        }
    return acc;
}

template <class K>
bool accumulation_is_zero(const std::map<std::pair<int, int>, AlgebraElement<K>>& acc) {
    for (const auto& [k, v] : acc)
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace detail

/// Entrywise verification of the bicomplex identities on every square fully
/// inside the window.
template <class K>
BicomplexReport verify_bicomplex(const Bicomplex<K>& B) {
    BicomplexReport rep;
    static const std::vector<FormalEntry<K>> none;
    auto at = [&](const std::map<std::pair<int, int>, std::vector<FormalEntry<K>>>& m, int a,
                  int b) -> const std::vector<FormalEntry<K>>& {
        auto it = m.find({a, b});
        return it == m.end() ? none : it->second;
    };
    for (const auto& [mk, summands] : B.cells) {
        auto [m, k] = mk;
        // vertical composite (m,k) -> (m,k-2)
        if (k >= 2 &&
            !detail::accumulation_is_zero(
                detail::compose_entries(at(B.d_vert, m, k), at(B.d_vert, m, k - 1))))
            rep.vert_squares = false;
        // horizontal composite (m,k) -> (m-2,k)
        if (m >= 2 &&
            !detail::accumulation_is_zero(
                detail::compose_entries(at(B.d_horiz, m, k), at(B.d_horiz, m - 1, k))))
            rep.horiz_squares = false;
        // anticommuting square (m,k) -> (m-1,k-1)
        if (m >= 1 && k >= 1) {
            auto path1 = detail::compose_entries(at(B.d_vert, m, k), at(B.d_horiz, m, k - 1));
            auto path2 = detail::compose_entries(at(B.d_horiz, m, k), at(B.d_vert, m - 1, k));
            for (const auto& [key, v] : path2) {
                auto it = path1.find(key);
                if (it == path1.end())
                    path1.emplace(key, v);
                else
                    it->second += v;
            }
            if (!detail::accumulation_is_zero(path1)) rep.anticommute = false;
        }
    }
    return rep;
}

/// Total complex C_t = (+)_{m+k=t} cell(m,k) with d = d_H + d_M; the twist
/// baked into d_H makes every square anticommute, so no extra signs appear
/// here. Verifies the bicomplex first and refuses to totalize a broken one.
template <class K>
FormalComplex<K> total_complex(const Bicomplex<K>& B) {
    if (!verify_bicomplex(B).ok())
        throw std::invalid_argument("total_complex: bicomplex identities fail");
    FormalComplex<K> out;
    out.flavor = B.flavor;
    out.truncated_above = true;
    std::map<std::tuple<int, int, int>, int> where;  // (m, k, local) -> index in term
    for (const auto& [mk, summands] : B.cells) {
        auto [m, k] = mk;
        int t = m + k;
        for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
            where[{m, k, i}] = static_cast<int>(out.terms[t].size());
            out.terms[t].push_back(summands[i]);
        }
    }
    auto push = [&](int ms, int ks, int mt, int kt, const std::vector<FormalEntry<K>>& ents) {
        for (const auto& e : ents) {
            auto src = where.find({ms, ks, e.col});
            auto tgt = where.find({mt, kt, e.row});
            if (src == where.end() || tgt == where.end()) continue;
            out.diffs[ms + ks].push_back(FormalEntry<K>{tgt->second, src->second, e.val});
        }
    };
    for (const auto& [mk, ents] : B.d_vert) push(mk.first, mk.second, mk.first, mk.second - 1, ents);
    for (const auto& [mk, ents] : B.d_horiz) push(mk.first, mk.second, mk.first - 1, mk.second, ents);
    return out;
}

/// Strict comparison after matching summands by label: same positions, same
/// labelled projectives, identical entries (signs included).
template <class K>
bool complexes_equal_by_label(const FormalComplex<K>& A, const FormalComplex<K>& B) {
    if (A.terms.size() != B.terms.size()) return false;
    std::map<int, std::map<std::string, int>> bwhere;
    for (const auto& [t, ss] : B.terms) {
        auto& m = bwhere[t];
        for (int i = 0; i < static_cast<int>(ss.size()); ++i) m[ss[i].label] = i;
    }
    for (const auto& [t, ss] : A.terms) {
        auto bit = B.terms.find(t);
        if (bit == B.terms.end() || bit->second.size() != ss.size()) return false;
        for (const auto& s : ss) {
            auto w = bwhere[t].find(s.label);
            if (w == bwhere[t].end()) return false;
            const auto& bs = bit->second[w->second];
            if (bs.kind != s.kind || bs.index != s.index) return false;
        }
    }
    auto entry_map = [](const FormalComplex<K>& C, int t) {
        std::map<std::pair<std::string, std::string>, AlgebraElement<K>> m;
        for (const auto& e : C.diff(t)) {
            auto key = std::make_pair(C.term(t - 1)[e.row].label, C.term(t)[e.col].label);
            auto it = m.find(key);
            if (it == m.end())
                m.emplace(key, e.val);
            else
                it->second += e.val;
        }
        for (auto it = m.begin(); it != m.end();)
            it = it->second.is_zero() ? m.erase(it) : std::next(it);
        return m;
    };
    std::set<int> ts;
    for (const auto& [t, e] : A.diffs) ts.insert(t);
    for (const auto& [t, e] : B.diffs) ts.insert(t);
    for (int t : ts)
        if (entry_map(A, t) != entry_map(B, t)) return false;
    return true;
}

}  // namespace slarc
