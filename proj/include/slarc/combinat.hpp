#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace slarc {

inline constexpr int kMaxPoints = 62;  // endpoint positions live in one uint64_t

/// C(n,k) as int64; exact for n <= 62 which covers every endpoint count the
/// diagram types admit.
inline long long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static const auto table = [] {
        std::vector<std::vector<long long>> t(kMaxPoints + 5);
        for (int i = 0; i < static_cast<int>(t.size()); ++i) {
            t[i].resize(i + 1);
            t[i][0] = t[i][i] = 1;
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (n >= static_cast<int>(table.size()))
        throw std::invalid_argument("binom: argument out of supported range");
    return table[n][k];
}

/// All k-subsets of {1..n} as bitmasks (bit i-1 <-> element i), ordered
/// lexicographically on the increasing element lists.
inline std::vector<uint64_t> subsets_lex(int n, int k) {
    std::vector<uint64_t> out;
    if (k < 0 || k > n) return out;
    out.reserve(static_cast<size_t>(binom(n, k)));
    std::vector<int> pick(k);
    // standard combinations enumeration: first elements vary slowest
    auto rec = [&](auto&& self, int start, int depth, uint64_t mask) -> void {
        if (depth == k) { out.push_back(mask); return; }
        for (int v = start; v <= n - (k - depth - 1); ++v)
            self(self, v + 1, depth + 1, mask | (uint64_t{1} << (v - 1)));
    };
    rec(rec, 1, 0, 0);
    return out;
}

/// Rank of a k-subset mask within subsets_lex(n, k).
inline long long subset_lex_rank(uint64_t mask, int n) {
    int k = std::popcount(mask);
    long long rank = 0;
    int prev = 0, remaining = k;
    for (int v = 1; v <= n && remaining > 0; ++v) {
        if (mask & (uint64_t{1} << (v - 1))) {
            for (int w = prev + 1; w < v; ++w)
                rank += binom(n - w, remaining - 1);
            prev = v;
            --remaining;
        }
    }
    return rank;
}

/// Lex order on equal-size subsets: a < b iff the smallest element of the
/// symmetric difference lies in a.
inline bool subset_lex_less(uint64_t a, uint64_t b) {
    uint64_t d = a ^ b;
    if (d == 0) return false;
    return (a & (d & (~d + 1))) != 0;
}

inline std::vector<int> mask_to_list(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int b = std::countr_zero(mask);
        out.push_back(b + 1);
        mask &= mask - 1;
    }
    return out;
}

inline uint64_t list_to_mask(const std::vector<int>& xs, int bound) {
    uint64_t m = 0;
    int prev = 0;
    for (int x : xs) {
        if (x <= prev || x > bound)
            throw std::invalid_argument("positions must be strictly increasing and within bounds");
        m |= uint64_t{1} << (x - 1);
        prev = x;
    }
    return m;
}

/// Ordered compositions of n into exactly parts parts, each within 1..maxpart.
inline std::vector<std::vector<int>> compositions(int n, int parts, int maxpart) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == parts) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 1; v <= maxpart && v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    if (parts >= 0) rec(rec, 0, n);
    return out;
}

}  // namespace slarc
