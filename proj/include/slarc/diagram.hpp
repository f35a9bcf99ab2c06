#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slarc/combinat.hpp"

namespace slarc {

/// One basis diagram: k larcs connect k of the `left` points on x=0 to k of
/// the `right` points on x=1, order-preservingly (the i-th marked left point
/// to the i-th marked right point); every unmarked boundary point carries a
/// sarc. Positions are 1-indexed bottom-to-top and stored as bitmasks
/// (bit i-1 <-> position i), so a diagram is exactly the four-tuple
/// (left, right, larc_left, larc_right).
struct Diagram {
    int left = 0;
    int right = 0;
    uint64_t larc_left = 0;
    uint64_t larc_right = 0;

    int width() const { return std::popcount(larc_left); }
    int sarc_degree() const { return left + right - 2 * width(); }
    bool is_identity() const {
        return left == right && width() == left;
    }

    std::vector<int> larc_left_list() const { return mask_to_list(larc_left); }
    std::vector<int> larc_right_list() const { return mask_to_list(larc_right); }

    friend bool operator==(const Diagram& a, const Diagram& b) = default;

    std::string str() const {
        std::ostringstream os;
        os << "(" << left << "," << right << ",[";
        auto ls = larc_left_list();
        for (size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
        os << "],[";
        auto rs = larc_right_list();
        for (size_t i = 0; i < rs.size(); ++i) os << (i ? "," : "") << rs[i];
        os << "])";
        return os.str();
    }
};

/// Canonical term order: weight block (left,right) first, then width, then
/// lex on larc_left, then lex on larc_right. Within a fixed (left,right) this
/// agrees with the enumeration order of enumerate_basis, which is part of the
/// public contract.
struct DiagramOrder {
    bool operator()(const Diagram& a, const Diagram& b) const {
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        int wa = a.width(), wb = b.width();
        if (wa != wb) return wa < wb;
        if (a.larc_left != b.larc_left) return subset_lex_less(a.larc_left, b.larc_left);
        return subset_lex_less(a.larc_right, b.larc_right);
    }
};

inline Diagram make_diagram(int left, int right, uint64_t larc_left, uint64_t larc_right) {
    if (left < 0 || right < 0 || left > kMaxPoints || right > kMaxPoints)
        throw std::invalid_argument("diagram: endpoint counts out of range");
    if (std::popcount(larc_left) != std::popcount(larc_right))
        throw std::invalid_argument("diagram: larc endpoint sets have unequal sizes");
    if (left < 64 && (larc_left >> left) != 0)
        throw std::invalid_argument("diagram: left larc position out of range");
    if (right < 64 && (larc_right >> right) != 0)
        throw std::invalid_argument("diagram: right larc position out of range");
    return Diagram{left, right, larc_left, larc_right};
}

/// Canonicalize raw endpoint counts plus the two 1-indexed increasing
/// position lists, rejecting unsorted/out-of-range lists and length
/// mismatches.
inline Diagram validate(int left, int right, const std::vector<int>& larc_left,
                        const std::vector<int>& larc_right) {
    if (larc_left.size() != larc_right.size())
        throw std::invalid_argument("diagram: larc lists have different lengths");
    return make_diagram(left, right, list_to_mask(larc_left, left), list_to_mask(larc_right, right));
}

inline Diagram identity_diagram(int n) {
    uint64_t full = (n == 0) ? 0 : (~uint64_t{0} >> (64 - n));
    return Diagram{n, n, full, full};
}

enum class Side : uint8_t { left, right };

/// The one-sarc diagrams used in all differentials: side=left gives the
/// element of _{n}B_{n-1} whose single left sarc sits at position i (all other
/// strands pass through); side=right gives its mirror in _{n-1}B_{n}.
inline Diagram elementary(int n, int i, Side side) {
    if (n < 1 || i < 1 || i > n) throw std::invalid_argument("elementary: index out of range");
    uint64_t full_n = identity_diagram(n).larc_left;
    uint64_t punct = full_n & ~(uint64_t{1} << (i - 1));
    uint64_t full_n1 = (n == 1) ? 0 : identity_diagram(n - 1).larc_left;
    if (side == Side::left) return Diagram{n, n - 1, punct, full_n1};
    return Diagram{n - 1, n, full_n1, punct};
}

struct Composition {
    Diagram larc_result;
    int floating_count = 0;
};

/// Concatenate x's right line onto y's left line. Chains larc+larc -> larc,
/// larc+sarc -> sarc; a middle point hit by sarcs from both sides produces a
/// floating arc, which is only counted here -- the algebra layer applies the
/// flavor rule (0 for A-, 1 for A+).
inline Composition compose(const Diagram& x, const Diagram& y) {
    if (x.right != y.left)
        throw std::invalid_argument("compose: inner endpoint counts differ");
    uint64_t mid_hit = x.larc_right | y.larc_left;
    int floating = x.right - std::popcount(mid_hit);

    // survivors: x-larcs whose middle endpoint is also a y-larc endpoint
    uint64_t keep_left = 0, keep_right = 0;
    {
        uint64_t l = x.larc_left, r = x.larc_right;
        while (r) {
            uint64_t lb = l & (~l + 1), rb = r & (~r + 1);
            if (rb & y.larc_left) keep_left |= lb;
            l ^= lb;
            r ^= rb;
        }
    }
    {
        uint64_t l = y.larc_left, r = y.larc_right;
        while (l) {
            uint64_t lb = l & (~l + 1), rb = r & (~r + 1);
            if (lb & x.larc_right) keep_right |= rb;
            l ^= lb;
            r ^= rb;
        }
    }
    return Composition{Diagram{x.left, y.right, keep_left, keep_right}, floating};
}

/// k parallel copies of every arc; position s expands to the block
/// {k(s-1)+1, ..., ks}.
inline Diagram cable(const Diagram& d, int k) {
    if (k < 1) throw std::invalid_argument("cable: k must be positive");
    if (d.left * k > kMaxPoints || d.right * k > kMaxPoints)
        throw std::invalid_argument("cable: result exceeds supported size");
    uint64_t block = (~uint64_t{0}) >> (64 - k);
    auto expand = [&](uint64_t mask) {
        uint64_t out = 0;
        while (mask) {
            int b = std::countr_zero(mask);
            out |= block << (static_cast<uint64_t>(b) * k);
            mask &= mask - 1;
        }
        return out;
    };
    return Diagram{d.left * k, d.right * k, expand(d.larc_left), expand(d.larc_right)};
}

/// Vertical juxtaposition: bottom keeps its positions, top shifts up by
/// bottom's endpoint counts.
inline Diagram stack(const Diagram& top, const Diagram& bottom) {
    if (top.left + bottom.left > kMaxPoints || top.right + bottom.right > kMaxPoints)
        throw std::invalid_argument("stack: result exceeds supported size");
    return Diagram{top.left + bottom.left, top.right + bottom.right,
                   bottom.larc_left | (top.larc_left << bottom.left),
                   bottom.larc_right | (top.larc_right << bottom.right)};
}

/// Reflection about the vertical axis; an involution and an anti-homomorphism
/// for composition.
inline Diagram reflect(const Diagram& d) {
    return Diagram{d.right, d.left, d.larc_right, d.larc_left};
}

/// Add a straight through strand at the top (the non-unital inclusion the
/// restriction/induction functors are built on).
inline Diagram iota(const Diagram& d) {
    if (d.left + 1 > kMaxPoints || d.right + 1 > kMaxPoints)
        throw std::invalid_argument("iota: result exceeds supported size");
    return Diagram{d.left + 1, d.right + 1,
                   d.larc_left | (uint64_t{1} << d.left),
                   d.larc_right | (uint64_t{1} << d.right)};
}

inline int sarc_degree(const Diagram& d) { return d.sarc_degree(); }

struct WidthFilter {
    int lo = 0;
    int hi = kMaxPoints;
    static WidthFilter exactly(int k) { return WidthFilter{k, k}; }
    static WidthFilter at_most(int k) { return WidthFilter{0, k}; }
};

/// All diagrams with m left and n right points, by width then lex on
/// larc_left then larc_right. Unfiltered count is C(n+m,n); fixed width k
/// contributes C(m,k)*C(n,k).
inline std::vector<Diagram> enumerate_basis(int m, int n,
                                            std::optional<WidthFilter> filter = std::nullopt) {
    if (m < 0 || n < 0 || m > kMaxPoints || n > kMaxPoints)
        throw std::invalid_argument("enumerate_basis: counts out of range");
    std::vector<Diagram> out;
    int kmax = std::min(m, n);
    int lo = filter ? std::max(0, filter->lo) : 0;
    int hi = filter ? std::min(kmax, filter->hi) : kmax;
    for (int k = lo; k <= hi; ++k) {
        auto ls = subsets_lex(m, k);
        auto rs = subsets_lex(n, k);
        for (uint64_t lmask : ls)
            for (uint64_t rmask : rs) out.push_back(Diagram{m, n, lmask, rmask});
    }
    return out;
}

/// Index of d within enumerate_basis(d.left, d.right) without materializing
/// the list.
inline long long basis_rank(const Diagram& d) {
    int k = d.width();
    long long off = 0;
    for (int j = 0; j < k; ++j) off += binom(d.left, j) * binom(d.right, j);
    return off + subset_lex_rank(d.larc_left, d.left) * binom(d.right, k) +
           subset_lex_rank(d.larc_right, d.right);
}

/// One text line per boundary position, top to bottom. Larcs print as
/// straight connectors, sarcs as stubs into the strip.
inline std::string render_text(const Diagram& d) {
    std::ostringstream os;
    auto ls = d.larc_left_list();
    auto rs = d.larc_right_list();
    int rows = std::max(d.left, d.right);
    for (int row = rows; row >= 1; --row) {
        std::string l = "    ", mid = "        ", r = "";
        if (row <= d.left) {
            bool larc = d.larc_left & (uint64_t{1} << (row - 1));
            l = larc ? std::to_string(row) + " >" : std::to_string(row) + " )";
            while (l.size() < 4) l.insert(1, " ");
            if (larc) {
                // partner index: rank within larc set
                int idx = std::popcount(d.larc_left & ((uint64_t{1} << (row - 1)) - 1));
                mid = "--------";
                r = "> " + std::to_string(rs[idx]);
            } else {
                mid = "--.     ";
            }
        }
        if (row <= d.right && r.empty()) {
            bool larc = d.larc_right & (uint64_t{1} << (row - 1));
            if (!larc) {
                if (mid == "        ") mid = "     .--";
                r = "( " + std::to_string(row);
            } else if (row > d.left || !(d.larc_left & (uint64_t{1} << (row - 1)))) {
                r = "  " + std::to_string(row);
            }
        }
        os << l << " " << mid << " " << r << "\n";
    }
    if (rows == 0) os << "(empty diagram)\n";
    return os.str();
}

/// Minimal SVG: larcs as monotone cubic curves, sarcs as half-arcs. The XML
/// structure is deterministic; pixel geometry is best-effort.
inline std::string render_svg(const Diagram& d) {
    const int H = 30, W = 240, PAD = 15;
    int rows = std::max({d.left, d.right, 1});
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
       << (rows * H + 2 * PAD) << "\">\n";
    auto ycoord = [&](int pos) { return rows * H + PAD - pos * H + H / 2; };
    auto ls = d.larc_left_list();
    auto rs = d.larc_right_list();
    for (size_t i = 0; i < ls.size(); ++i) {
        int y0 = ycoord(ls[i]), y1 = ycoord(rs[i]);
        os << "  <path d=\"M 0 " << y0 << " C " << W / 3 << " " << y0 << " " << 2 * W / 3
           << " " << y1 << " " << W << " " << y1 << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int p = 1; p <= d.left; ++p)
        if (!(d.larc_left & (uint64_t{1} << (p - 1)))) {
            int y = ycoord(p);
            os << "  <path d=\"M 0 " << y << " Q " << W / 4 << " " << y << " " << W / 4
               << " " << y - H / 3 << "\" fill=\"none\" stroke=\"black\"/>\n";
        }
    for (int p = 1; p <= d.right; ++p)
        if (!(d.larc_right & (uint64_t{1} << (p - 1)))) {
            int y = ycoord(p);
            os << "  <path d=\"M " << W << " " << y << " Q " << 3 * W / 4 << " " << y << " "
               << 3 * W / 4 << " " << y - H / 3 << "\" fill=\"none\" stroke=\"black\"/>\n";
        }
    os << "</svg>\n";
    return os.str();
}

}  // namespace slarc
