#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slarc {

template <class K>
using SparseVec = std::vector<std::pair<int, K>>;  // sorted by index, no zeros

template <class K>
SparseVec<K> sparse_axpy(const SparseVec<K>& x, const SparseVec<K>& y, const K& a) {
    // x + a*y, merged
    SparseVec<K> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            K v = a * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            K v = x[i].second + a * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i; ++j;
        }
    }
    return out;
}

/// Column-major sparse matrix over an exact field.
template <class K>
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<SparseVec<K>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.col[i].emplace_back(i, K(1));
        return m;
    }
    static SparseMat zero(int r, int c) { return SparseMat(r, c); }

    void set(int r, int c, const K& v) {
        auto& cl = col[c];
        auto it = std::lower_bound(cl.begin(), cl.end(), r,
                                   [](const auto& p, int k) { return p.first < k; });
        if (it != cl.end() && it->first == r) {
            if (v.is_zero()) cl.erase(it);
            else it->second = v;
        } else if (!v.is_zero()) {
            cl.emplace(it, r, v);
        }
    }
    void add(int r, int c, const K& v) {
        if (v.is_zero()) return;
        auto& cl = col[c];
        auto it = std::lower_bound(cl.begin(), cl.end(), r,
                                   [](const auto& p, int k) { return p.first < k; });
        if (it != cl.end() && it->first == r) {
            it->second += v;
            if (it->second.is_zero()) cl.erase(it);
        } else {
            cl.emplace(it, r, v);
        }
    }
    K get(int r, int c) const {
        const auto& cl = col[c];
        auto it = std::lower_bound(cl.begin(), cl.end(), r,
                                   [](const auto& p, int k) { return p.first < k; });
        return (it != cl.end() && it->first == r) ? it->second : K();
    }
    bool is_zero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }
    long long nnz() const {
        long long n = 0;
        for (const auto& c : col) n += static_cast<long long>(c.size());
        return n;
    }
    SparseVec<K> apply(const SparseVec<K>& v) const {
        SparseVec<K> acc;
        for (const auto& [j, x] : v) acc = sparse_axpy(acc, col[j], x);
        return acc;
    }
    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
    }
};

/// A*B (composition of linear maps, A applied second).
template <class K>
SparseMat<K> mul(const SparseMat<K>& a, const SparseMat<K>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("sparse mul: shape mismatch");
    SparseMat<K> r(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) r.col[j] = a.apply(b.col[j]);
    return r;
}

template <class K>
SparseMat<K> add(const SparseMat<K>& a, const SparseMat<K>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("sparse add: shape mismatch");
    SparseMat<K> r(a.rows, a.cols);
    for (int j = 0; j < a.cols; ++j) r.col[j] = sparse_axpy(a.col[j], b.col[j], K(1));
    return r;
}

template <class K>
SparseMat<K> transpose(const SparseMat<K>& a) {
    SparseMat<K> r(a.cols, a.rows);
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, v] : a.col[j]) r.col[i].emplace_back(j, v);
    return r;
}

/// Dense row-major matrix for small exact computations.
template <class K>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<K> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class K>
DenseMat<K> to_dense(const SparseMat<K>& s) {
    DenseMat<K> d(s.rows, s.cols);
    for (int j = 0; j < s.cols; ++j)
        for (const auto& [i, v] : s.col[j]) d.at(i, j) = v;
    return d;
}

/// Rank by plain Gaussian elimination; destroys its copy of the input.
template <class K>
long long dense_rank(DenseMat<K> m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            K f = m.at(i, c) * inv;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

/// Sparse rank via greedy elimination: pick an active row of minimal fill,
/// within it the column met by fewest active rows, and eliminate. Pivots stay
/// inside connected blocks, which keeps fill local for the block-diagonal
/// matrices this library produces.
template <class K>
long long sparse_rank(const SparseMat<K>& a) {
    const int R = a.rows;
    std::vector<std::map<int, K>> rows(static_cast<size_t>(R));
    std::vector<std::set<int>> col_rows(static_cast<size_t>(a.cols));
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, v] : a.col[j]) {
            rows[i][j] = v;
            col_rows[j].insert(i);
        }
    const size_t CAP = 64;
    std::vector<std::vector<int>> bucket(CAP + 1);
    std::vector<char> alive(static_cast<size_t>(R), 1);
    auto bucket_of = [&](int r) { return std::min(rows[r].size(), CAP); };
    for (int i = 0; i < R; ++i)
        if (!rows[i].empty()) bucket[bucket_of(i)].push_back(i);

    long long rank = 0;
    for (;;) {
        int r = -1;
        for (size_t b = 1; b <= CAP && r < 0; ++b) {
            auto& bk = bucket[b];
            while (!bk.empty()) {
                int cand = bk.back();
                if (alive[cand] && !rows[cand].empty() && bucket_of(cand) == b) { r = cand; break; }
                bk.pop_back();
                if (alive[cand] && !rows[cand].empty()) bucket[bucket_of(cand)].push_back(cand);
            }
            if (r >= 0) bucket[b].pop_back();
        }
        if (r < 0) break;

        int c = -1;
        size_t best = SIZE_MAX;
        for (const auto& [j, v] : rows[r])
            if (col_rows[j].size() < best) { best = col_rows[j].size(); c = j; }
        K pivot = rows[r][c];
        ++rank;
        alive[r] = 0;
        for (const auto& [j, v] : rows[r]) col_rows[j].erase(r);

        std::vector<int> victims(col_rows[c].begin(), col_rows[c].end());
        for (int r2 : victims) {
            K f = rows[r2][c] / pivot;
            for (const auto& [j, v] : rows[r]) {
                auto it = rows[r2].find(j);
                if (it == rows[r2].end()) {
                    K nv = -(f * v);
                    if (!nv.is_zero()) {
                        rows[r2][j] = nv;
                        col_rows[j].insert(r2);
                    }
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) {
                        rows[r2].erase(it);
                        col_rows[j].erase(r2);
                    }
                }
            }
            if (!rows[r2].empty()) bucket[bucket_of(r2)].push_back(r2);
        }
        rows[r].clear();
    }
    return rank;
}

/// Configurable dense/sparse switch (dense up to `dense_threshold` on both
/// sides, sparse elimination above).
template <class K>
long long rank_of(const SparseMat<K>& a, int dense_threshold = 200) {
    if (a.rows == 0 || a.cols == 0) return 0;
    if (a.rows <= dense_threshold && a.cols <= dense_threshold) return dense_rank(to_dense(a));
    return sparse_rank(a);
}

template <class K>
long long kernel_dim(const SparseMat<K>& a, int dense_threshold = 200) {
    return a.cols - rank_of(a, dense_threshold);
}

/// Incremental forward-reduced column echelon. Supports membership reduction
/// against the accumulated span: each stored column is reduced against all
/// earlier pivots, so applying pivots in insertion order clears every pivot
/// coordinate of a vector.
template <class K>
class ColEchelon {
public:
    explicit ColEchelon(int rows) : rows_(rows), is_pivot_row_(static_cast<size_t>(rows), 0) {}

    /// Returns true if the column enlarged the span.
    bool add_column(SparseVec<K> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        int pr = v.front().first;  // least remaining row index
        pivots_.push_back({pr, std::move(v)});
        is_pivot_row_[pr] = 1;
        return true;
    }

    /// Residue of v modulo the span; supported on non-pivot rows only.
    SparseVec<K> reduce(SparseVec<K> v) const {
        for (const auto& p : pivots_) {
            auto it = std::lower_bound(v.begin(), v.end(), p.row,
                                       [](const auto& q, int k) { return q.first < k; });
            if (it == v.end() || it->first != p.row) continue;
            K f = -(it->second / pivot_value(p));
            v = sparse_axpy(v, p.col, f);
        }
        return v;
    }

    bool contains(SparseVec<K> v) const { return reduce(std::move(v)).empty(); }
    long long rank() const { return static_cast<long long>(pivots_.size()); }
    int rows() const { return rows_; }
    bool is_pivot_row(int r) const { return is_pivot_row_[r] != 0; }

    /// Rows not used as pivots, in increasing order: coordinates of the
    /// quotient space.
    std::vector<int> free_rows() const {
        std::vector<int> out;
        for (int r = 0; r < rows_; ++r)
            if (!is_pivot_row_[r]) out.push_back(r);
        return out;
    }

private:
    struct Pivot {
        int row;
        SparseVec<K> col;
    };
    static const K& pivot_value(const Pivot& p) {
        return p.col.front().second;  // front() has the least row = pivot row
    }

    int rows_;
    std::vector<char> is_pivot_row_;
    std::vector<Pivot> pivots_;
};

/// Basis of the kernel of a dense matrix (columns of the result).
template <class K>
DenseMat<K> kernel_basis(DenseMat<K> m) {
    const int R = m.rows, C = m.cols;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int piv = -1;
        for (int i = r; i < R; ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (int j = 0; j < C; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (int j = 0; j < C; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(static_cast<size_t>(C), 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    DenseMat<K> ker(C, static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        ker.at(fc, static_cast<int>(fi)) = K(1);
        for (size_t pi = 0; pi < pivot_col.size(); ++pi)
            ker.at(pivot_col[pi], static_cast<int>(fi)) = -m.at(static_cast<int>(pi), fc);
    }
    return ker;
}

}  // namespace slarc
