#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "slarc/diagram.hpp"

using namespace slarc;

namespace {

// Independent brute-force enumeration: walk all (left mask, right mask)
// pairs and keep the legal ones. Used as the oracle for enumerate_basis.
std::vector<Diagram> brute_enumerate(int m, int n, int wlo, int whi) {
    std::vector<Diagram> out;
    for (uint64_t lm = 0; lm < (uint64_t{1} << m); ++lm)
        for (uint64_t rm = 0; rm < (uint64_t{1} << n); ++rm) {
            if (std::popcount(lm) != std::popcount(rm)) continue;
            int w = std::popcount(lm);
            if (w < wlo || w > whi) continue;
            out.push_back(Diagram{m, n, lm, rm});
        }
    return out;
}

Diagram random_diagram(std::mt19937& rng, int maxm, int maxn) {
    std::uniform_int_distribution<int> dm(0, maxm), dn(0, maxn);
    int m = dm(rng), n = dn(rng);
    std::uniform_int_distribution<int> dk(0, std::min(m, n));
    int k = dk(rng);
    auto pick = [&](int total) {
        std::vector<int> pos(total);
        for (int i = 0; i < total; ++i) pos[i] = i;
        std::shuffle(pos.begin(), pos.end(), rng);
        uint64_t mask = 0;
        for (int i = 0; i < k; ++i) mask |= uint64_t{1} << pos[i];
        return mask;
    };
    return Diagram{m, n, pick(m), pick(n)};
}

}  // namespace

TEST_CASE("validate accepts canonical data and rejects junk") {
    Diagram id2 = validate(2, 2, {1, 2}, {1, 2});
    CHECK(id2 == identity_diagram(2));
    CHECK(id2.width() == 2);

    Diagram c = validate(1, 1, {}, {});
    CHECK(c.width() == 0);
    CHECK(c.sarc_degree() == 2);

    CHECK_THROWS_AS(validate(2, 1, {1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(2, 2, {2, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate(2, 2, {1, 3}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate(2, 2, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("enumerate_basis counts and deterministic order") {
    CHECK(enumerate_basis(2, 1).size() == 3);
    CHECK(enumerate_basis(3, 2).size() == 10);
    CHECK(enumerate_basis(3, 2, WidthFilter::exactly(2)).size() == 3);

    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            auto got = enumerate_basis(m, n);
            CHECK(static_cast<long long>(got.size()) == binom(m + n, n));
            auto oracle = brute_enumerate(m, n, 0, std::min(m, n));
            CHECK(got.size() == oracle.size());
            std::set<std::string> a, b;
            for (auto& d : got) a.insert(d.str());
            for (auto& d : oracle) b.insert(d.str());
            CHECK(a == b);
            // strictly increasing in the canonical order, so no duplicates
            DiagramOrder lt;
            for (size_t i = 1; i < got.size(); ++i) CHECK(lt(got[i - 1], got[i]));
            // basis_rank inverts enumeration
            for (size_t i = 0; i < got.size(); ++i)
                CHECK(basis_rank(got[i]) == static_cast<long long>(i));
        }

    for (int k = 0; k <= 3; ++k)
        CHECK(static_cast<long long>(enumerate_basis(4, 3, WidthFilter::exactly(k)).size()) ==
              binom(4, k) * binom(3, k));
}

TEST_CASE("compose matches hand concatenation") {
    Diagram c = validate(1, 1, {}, {});
    auto cc = compose(c, c);
    CHECK(cc.larc_result == c);
    CHECK(cc.floating_count == 1);

    // unit acts trivially
    for (int n = 0; n <= 3; ++n)
        for (const auto& d : enumerate_basis(2, n)) {
            auto r = compose(d, identity_diagram(n));
            CHECK(r.larc_result == d);
            CHECK(r.floating_count == 0);
            auto l = compose(identity_diagram(2), d);
            CHECK(l.larc_result == d);
            CHECK(l.floating_count == 0);
        }

    auto r = compose(validate(2, 1, {2}, {1}), validate(1, 2, {1}, {2}));
    CHECK(r.larc_result == validate(2, 2, {2}, {2}));
    CHECK(r.floating_count == 0);

    CHECK_THROWS_AS(compose(identity_diagram(2), identity_diagram(3)), std::invalid_argument);
}

TEST_CASE("elementary diagrams") {
    CHECK(elementary(1, 1, Side::left) == validate(1, 0, {}, {}));
    CHECK(elementary(3, 2, Side::right) == validate(2, 3, {1, 2}, {1, 3}));
    CHECK(elementary(3, 2, Side::left) == reflect(elementary(3, 2, Side::right)));
    CHECK(elementary(3, 2, Side::left) == validate(3, 2, {1, 3}, {1, 2}));
    CHECK_THROWS_AS(elementary(3, 4, Side::left), std::invalid_argument);
    CHECK_THROWS_AS(elementary(3, 0, Side::right), std::invalid_argument);
}

TEST_CASE("cable expands arcs to parallel blocks") {
    CHECK(cable(identity_diagram(2), 2) == identity_diagram(4));
    CHECK(cable(validate(1, 1, {}, {}), 3) == validate(3, 3, {}, {}));
    CHECK(cable(validate(2, 1, {2}, {1}), 2) == validate(4, 2, {3, 4}, {1, 2}));
}

TEST_CASE("stack shifts the top factor") {
    CHECK(stack(identity_diagram(1), identity_diagram(1)) == identity_diagram(2));
    CHECK(stack(validate(1, 0, {}, {}), identity_diagram(1)) == validate(2, 1, {1}, {1}));
    Diagram c = validate(1, 1, {}, {});
    CHECK(stack(c, c) == validate(2, 2, {}, {}));
}

TEST_CASE("reflect, iota, sarc_degree basics") {
    CHECK(reflect(elementary(3, 2, Side::right)) == elementary(3, 2, Side::left));
    for (int n = 0; n <= 4; ++n) CHECK(iota(identity_diagram(n)) == identity_diagram(n + 1));
    CHECK(sarc_degree(identity_diagram(5)) == 0);
    CHECK(sarc_degree(validate(1, 1, {}, {})) == 2);
}

TEST_CASE("diagram properties on random samples") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 400; ++iter) {
        Diagram d = random_diagram(rng, 6, 6);
        CHECK(reflect(reflect(d)) == d);
        CHECK(iota(d).width() == d.width() + 1);
        CHECK(sarc_degree(iota(d)) == sarc_degree(d));
    }
}

TEST_CASE("composition properties on random pairs") {
    std::mt19937 rng(99);
    int checked = 0;
    while (checked < 500) {
        Diagram x = random_diagram(rng, 5, 5);
        Diagram y = random_diagram(rng, 5, 5);
        if (x.right != y.left) continue;
        ++checked;
        auto xy = compose(x, y);
        // width submultiplicativity with the exact defect rule
        int w = xy.larc_result.width();
        CHECK(w <= std::min(x.width(), y.width()));
        if (xy.floating_count == 0)
            CHECK(w == x.width() + y.width() - x.right);
        else
            CHECK(w > x.width() + y.width() - x.right);
        // reflection is an anti-homomorphism, floating count included
        auto ryx = compose(reflect(y), reflect(x));
        CHECK(ryx.larc_result == reflect(xy.larc_result));
        CHECK(ryx.floating_count == xy.floating_count);
        // sarc degree additivity in the floating-free case
        if (xy.floating_count == 0)
            CHECK(sarc_degree(xy.larc_result) == sarc_degree(x) + sarc_degree(y));
        // cabling respects composition, scaling floating count by k
        for (int k = 2; k <= 3; ++k) {
            auto ck = compose(cable(x, k), cable(y, k));
            CHECK(ck.larc_result == cable(xy.larc_result, k));
            CHECK(ck.floating_count == k * xy.floating_count);
        }
    }
}

TEST_CASE("stack interchange with composition") {
    // (x stacked on a) . (y stacked on b) == (x.y) stacked on (a.b) whenever
    // the inner counts match; exhaustively for tiny sizes
    for (const auto& x : enumerate_basis(1, 2))
        for (const auto& y : enumerate_basis(2, 1))
            for (const auto& a : enumerate_basis(2, 1))
                for (const auto& b : enumerate_basis(1, 1)) {
                    auto lhs = compose(stack(x, a), stack(y, b));
                    auto xy = compose(x, y);
                    auto ab = compose(a, b);
                    CHECK(lhs.larc_result == stack(xy.larc_result, ab.larc_result));
                    CHECK(lhs.floating_count == xy.floating_count + ab.floating_count);
                }
}

TEST_CASE("iota is injective and multiplicative on diagrams") {
    for (const auto& x : enumerate_basis(2, 2))
        for (const auto& y : enumerate_basis(2, 2)) {
            auto xy = compose(x, y);
            auto ixy = compose(iota(x), iota(y));
            CHECK(ixy.larc_result == iota(xy.larc_result));
            CHECK(ixy.floating_count == xy.floating_count);
        }
}

TEST_CASE("render_text emits one line per boundary position") {
    std::string txt = render_text(validate(2, 1, {2}, {1}));
    CHECK(std::count(txt.begin(), txt.end(), '\n') == 2);
    CHECK(render_svg(identity_diagram(2)).find("<svg") == 0);
}
