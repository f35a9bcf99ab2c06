#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "slarc/aplus.hpp"
#include "slarc/functors.hpp"
#include "slarc/homalg.hpp"
#include "slarc/json_io.hpp"
#include "slarc/module.hpp"
#include "slarc/resolution.hpp"

namespace slarc {

struct CheckResult {
    std::string id;
    std::string params;
    bool pass = false;
    std::string expected;
    std::string actual;
    long long elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::string field;
    std::vector<CheckResult> checks;
    int failures = 0;

    Json to_json(bool with_timings = false) const {
        Json j;
        j["suite"] = suite;
        j["field"] = field;
        j["checks"] = Json::array();
        for (const auto& c : checks) {
            Json cj;
            cj["id"] = c.id;
            cj["params"] = c.params;
            cj["status"] = c.pass ? "pass" : "fail";
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            if (with_timings) cj["elapsed_ms"] = c.elapsed_ms;
            j["checks"].push_back(cj);
        }
        j["summary"] = Json{{"total", checks.size()},
                            {"pass", checks.size() - failures},
                            {"fail", failures}};
        return j;
    }
};

namespace detail {

class Harness {
public:
    explicit Harness(std::string suite, std::string field) {
        rep_.suite = std::move(suite);
        rep_.field = std::move(field);
    }

    void run(const std::string& id, const std::string& params,
             const std::function<std::pair<std::string, std::string>()>& body) {
        CheckResult r;
        r.id = id;
        r.params = params;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [expected, actual] = body();
            r.expected = expected;
            r.actual = actual;
            r.pass = expected == actual;
        } catch (const std::exception& e) {
            r.expected = "no exception";
            r.actual = std::string("exception: ") + e.what();
            r.pass = false;
        }
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        if (!r.pass) ++rep_.failures;
        rep_.checks.push_back(std::move(r));
    }

    VerificationReport finish() {
        std::sort(rep_.checks.begin(), rep_.checks.end(),
                  [](const CheckResult& a, const CheckResult& b) {
                      return a.id != b.id ? a.id < b.id : a.params < b.params;
                  });
        return rep_;
    }

private:
    VerificationReport rep_;
};

inline std::pair<std::string, std::string> bool_check(bool got) {
    return {"true", got ? "true" : "false"};
}

}  // namespace detail

/// The aggregated suite behind `slarc verify all`: basis counts,
/// associativity and grading samples, module dimensions, every resolution's
/// d^2 and exactness window, Ext dual computations, Cartan/BGG, functor
/// identities, cabling decompositions, the A+ battery, and dual-field
/// dimension agreement. Bounds scale with max_n / max_weight.
template <class K>
VerificationReport verify_all(int max_n, int max_weight) {
    const int B = std::max(1, max_n);
    const int W = std::max(2, max_weight);
    detail::Harness h("verify all", K::field_name());
    std::ostringstream os;

    h.run("basis.count", "m,n<=" + std::to_string(2 * B), [&] {
        bool ok = true;
        for (int m = 0; m <= 2 * B; ++m)
            for (int n = 0; n <= 2 * B; ++n) {
                if (static_cast<long long>(enumerate_basis(m, n).size()) != binom(m + n, n))
                    ok = false;
                for (int k = 0; k <= std::min(m, n); ++k)
                    if (static_cast<long long>(
                            enumerate_basis(m, n, WidthFilter::exactly(k)).size()) !=
                        binom(m, k) * binom(n, k))
                        ok = false;
            }
        return detail::bool_check(ok);
    });

    h.run("algebra.associativity", "counts<=" + std::to_string(std::min(B, 4)), [&] {
        int bound = std::min(B, 4);
        for (Flavor f : {Flavor::minus, Flavor::plus})
            for (int a = 0; a <= bound; ++a)
                for (int b = 0; b <= bound; ++b)
                    for (int c = 0; c <= bound; ++c)
                        for (int d = 0; d <= bound; ++d)
                            for (const auto& x : enumerate_basis(a, b))
                                for (const auto& y : enumerate_basis(b, c))
                                    for (const auto& z : enumerate_basis(c, d)) {
                                        auto xe = AlgebraElement<K>::from_diagram(x, f);
                                        auto ye = AlgebraElement<K>::from_diagram(y, f);
                                        auto ze = AlgebraElement<K>::from_diagram(z, f);
                                        if (!(multiply(multiply(xe, ye), ze) ==
                                              multiply(xe, multiply(ye, ze))))
                                            return detail::bool_check(false);
                                    }
        return detail::bool_check(true);
    });

    h.run("algebra.grading", "counts<=" + std::to_string(std::min(B + 1, 5)), [&] {
        int bound = std::min(B + 1, 5);
        for (int a = 0; a <= bound; ++a)
            for (int b = 0; b <= bound; ++b)
                for (int c = 0; c <= bound; ++c)
                    for (const auto& x : enumerate_basis(a, b))
                        for (const auto& y : enumerate_basis(b, c)) {
                            auto p = multiply_diagrams<K>(x, y, Flavor::minus);
                            for (const auto& [d, cf] : p.terms())
                                if (d.sarc_degree() != x.sarc_degree() + y.sarc_degree())
                                    return detail::bool_check(false);
                        }
        return detail::bool_check(true);
    });

    h.run("module.dims", "p<=" + std::to_string(W) + ",n<=" + std::to_string(2 * B), [&] {
        bool ok = true;
        for (int n = 0; n <= 2 * B; ++n)
            for (int p = 0; p <= W; ++p) {
                auto P = projective<K>(n);
                auto M = standard<K>(n);
                if (P.dim(p) != binom(p + n, n)) ok = false;
                if (static_cast<long long>(P.basis(p)->size()) != binom(p + n, n)) ok = false;
                if (M.dim(p) != binom(p, n)) ok = false;
            }
        return detail::bool_check(ok);
    });

    for (int n = 0; n <= B; ++n)
        h.run("resolution.standard", "n=" + std::to_string(n), [&, n] {
            auto r = resolve_standard<K>(n);
            if (!verify_d2(r).ok) return std::pair<std::string, std::string>{"d2=0", "d2!=0"};
            if (!check_linearity(r))
                return std::pair<std::string, std::string>{"linear", "nonlinear"};
            std::vector<int> pos;
            for (int t = 0; t <= n; ++t) pos.push_back(t);
            for (int p = 0; p <= W; ++p) {
                auto hm = homology_dims(r, p, pos);
                if (hm[0] != binom(p, n))
                    return std::pair<std::string, std::string>{"H0=C(p,n)", "H0 mismatch"};
                for (size_t i = 1; i < hm.size(); ++i)
                    if (hm[i] != 0)
                        return std::pair<std::string, std::string>{"H+=0", "H+ nonzero"};
            }
            return std::pair<std::string, std::string>{"exact", "exact"};
        });

    for (int k = 0; k <= std::min(B, 3); ++k)
        h.run("resolution.simple_by_standard", "k=" + std::to_string(k), [&, k] {
            auto r = resolve_simple_by_standard<K>(k, W - k + 1);
            if (!verify_d2(r).ok) return std::pair<std::string, std::string>{"d2=0", "d2!=0"};
            for (int p = 0; p <= W; ++p) {
                std::vector<int> pos;
                for (int t = 0; t <= p - k && t <= W - k; ++t) pos.push_back(t);
                if (pos.empty()) continue;
                auto hm = homology_dims(r, p, pos);
                if (hm[0] != (p == k ? 1 : 0))
                    return std::pair<std::string, std::string>{"H0=L_k", "H0 mismatch"};
                for (size_t i = 1; i < hm.size(); ++i)
                    if (hm[i] != 0)
                        return std::pair<std::string, std::string>{"H+=0", "H+ nonzero"};
            }
            return std::pair<std::string, std::string>{"exact", "exact"};
        });

    for (int n = 0; n <= std::min(B, 2); ++n)
        h.run("resolution.bicomplex", "n=" + std::to_string(n), [&, n] {
            int window = std::min(W, 5);
            auto Bi = build_bicomplex<K>(n, window);
            if (!verify_bicomplex(Bi).ok())
                return std::pair<std::string, std::string>{"anticommute", "violation"};
            auto T = total_complex(Bi);
            if (!check_linearity(T))
                return std::pair<std::string, std::string>{"linear", "nonlinear"};
            int maxpos = std::min(3, window - 1);
            std::vector<int> pos;
            for (int t = 0; t <= maxpos; ++t) pos.push_back(t);
            for (int p = 0; p <= std::min(W, 6); ++p) {
                auto hm = homology_dims(T, p, pos);
                if (hm[0] != (p == n ? 1 : 0))
                    return std::pair<std::string, std::string>{"H0=L_n", "H0 mismatch"};
                for (size_t i = 1; i < hm.size(); ++i)
                    if (hm[i] != 0)
                        return std::pair<std::string, std::string>{"H+=0", "H+ nonzero"};
            }
            return std::pair<std::string, std::string>{"exact", "exact"};
        });

    h.run("ext.standard_standard", "n,m<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            for (int m = 0; m <= B; ++m) {
                auto t = ext_standard_standard<K>(n, m);
                if (!t.match || !t.induced_maps_all_zero) return detail::bool_check(false);
            }
        return detail::bool_check(true);
    });

    h.run("ext.standard_simple", "n,m<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            for (int m = 0; m <= B; ++m)
                if (!ext_standard_simple<K>(n, m).match) return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("ext.simple_L0", "n<=2,t<=" + std::to_string(std::min(W, 8)), [&] {
        for (int n = 0; n <= 2; ++n)
            if (!ext_simple_simple_L0<K>(n, std::min(W, 8)).match)
                return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("homalg.dimension", "n<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            if (homological_dimension_standard<K>(n) != n) return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("homalg.bgg", "N=" + std::to_string(std::min(2 * B + 1, 9)), [&] {
        auto rep = bgg_check<K>(std::min(2 * B + 1, 9));
        return detail::bool_check(rep.reciprocity && rep.factorization);
    });

    h.run("functor.fk", "n,k<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            for (int k = 0; k <= B; ++k)
                if (!derived_Fk_standard<K>(n, k, std::min(W, 6)).verified)
                    return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("functor.res", "n<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n) {
            if (!res_projective_iso<K>(n, std::min(W, 7)).verified)
                return detail::bool_check(false);
            if (!res_standard_iso<K>(n, std::min(W, 7)).verified)
                return detail::bool_check(false);
            if (!res_simple_check<K>(n, std::min(W, 7)).verified)
                return detail::bool_check(false);
        }
        return detail::bool_check(true);
    });

    h.run("functor.ind", "n<=" + std::to_string(std::min(B, 4)), [&] {
        for (int n = 0; n <= std::min(B, 4); ++n) {
            int w = std::min(W, 7);
            if (!ind_projective_check<K>(n, w).verified) return detail::bool_check(false);
            if (!ind_standard_ses<K>(n, w).verified) return detail::bool_check(false);
            if (!ind_derived_check<K>(n, w).verified) return detail::bool_check(false);
            if (!ind_simple_check<K>(n, w).verified) return detail::bool_check(false);
        }
        return detail::bool_check(true);
    });

    h.run("cable.s_count", "n,k<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            for (int k = 1; k <= B; ++k)
                for (int i = 0; i <= n; ++i)
                    if (S_count(n, k, i) != S_count_direct(n, k, i))
                        return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("cable.decomposition", "n,k<=" + std::to_string(std::min(B, 4)), [&] {
        int bound = std::min(B, 4);
        for (int n = 0; n <= bound; ++n)
            for (int k = 1; k <= bound; ++k) {
                bool full = n <= 2 && k <= 2;
                auto rep = cable_standard_iso<K>(n, k, full ? 4 : 3, full);
                if (!rep.verified) return detail::bool_check(false);
            }
        for (int n = 0; n <= 2 * B; ++n)
            for (int k = 1; k <= 3; ++k)
                if (!cable_simple_check<K>(n, k, W)) return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("cable.weak_adjointness", "n<=" + std::to_string(B), [&] {
        for (int n = 0; n <= B; ++n)
            for (int k = 1; k <= 3; ++k) {
                if (!weak_adjointness_check(n, standard<K>(std::min(B, 3)), k))
                    return detail::bool_check(false);
                if (!weak_adjointness_check(n, projective<K>(std::min(B, 2)), k))
                    return detail::bool_check(false);
            }
        return detail::bool_check(true);
    });

    h.run("monoidal.m1_power", "n<=" + std::to_string(B), [&] {
        for (int n = 1; n <= B; ++n)
            if (!complexes_equal_by_label(m1_tensor_power<K>(n), resolve_standard<K>(n)))
                return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("monoidal.interchange", "counts<=" + std::to_string(std::min(B, 3)), [&] {
        return detail::bool_check(tensor_interchange_check<K>(std::min(B, 3)));
    });

    h.run("monoidal.tensor_standard", "n+m<=" + std::to_string(std::min(B + 1, 5)), [&] {
        for (int n = 1; n + 1 <= std::min(B + 1, 5); ++n)
            for (int m = 1; n + m <= std::min(B + 1, 5); ++m) {
                auto t = tensor_complexes(resolve_standard<K>(n), resolve_standard<K>(m));
                if (!verify_d2(t).ok) return detail::bool_check(false);
                std::vector<int> pos;
                for (int i = 0; i <= n + m; ++i) pos.push_back(i);
                for (int p = 0; p <= std::min(W, 6); ++p) {
                    auto hd = homology_dims(t, p, pos);
                    if (hd[0] != binom(p, n + m)) return detail::bool_check(false);
                    for (size_t i = 1; i < hd.size(); ++i)
                        if (hd[i] != 0) return detail::bool_check(false);
                }
            }
        return detail::bool_check(true);
    });

    h.run("k0.conversion", "degree<=10", [&] {
        for (int n = 0; n <= 10; ++n) {
            auto f = PolyClass::monomial(n);
            if (!(convert(convert(f, PolyBasis::standard), PolyBasis::projective) == f))
                return detail::bool_check(false);
        }
        return detail::bool_check(true);
    });

    h.run("k0.operators", "n<=" + std::to_string(B), [&] {
        return detail::bool_check(decat_consistency<K>(B, std::min(W, 6)));
    });

    h.run("k0.inner_product", "i,j<=" + std::to_string(2 * B), [&] {
        for (int i = 0; i <= 2 * B; ++i)
            for (int j = 0; j <= 2 * B; ++j)
                if (inner_product(PolyClass::monomial(i), PolyClass::monomial(j)) !=
                    hom_dim_projective(i, projective<K>(j)))
                    return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("k0.multiplicativity", "n+m<=" + std::to_string(2 * B), [&] {
        for (int n = 0; n <= 2 * B; ++n)
            for (int m = 0; n + m <= 2 * B; ++m) {
                auto a = convert(PolyClass::monomial(n, PolyBasis::standard),
                                 PolyBasis::projective);
                auto b = convert(PolyClass::monomial(m, PolyBasis::standard),
                                 PolyBasis::projective);
                if (!(convert(poly_mul(a, b), PolyBasis::standard) ==
                      PolyClass::monomial(n + m, PolyBasis::standard)))
                    return detail::bool_check(false);
            }
        return detail::bool_check(true);
    });

    h.run("aplus.idempotents", "n<=" + std::to_string(std::min(B, 5)), [&] {
        for (int n = 1; n <= std::min(B, 5); ++n) {
            AlgebraElement<K> sum(Flavor::plus);
            auto seqs = detail::all_sign_sequences(n);
            std::vector<AlgebraElement<K>> es;
            for (const auto& eps : seqs) es.push_back(sign_idempotent<K>(eps));
            for (size_t i = 0; i < es.size(); ++i) {
                if (!(multiply(es[i], es[i]) == es[i])) return detail::bool_check(false);
                sum += es[i];
                for (size_t j = 0; j < es.size(); ++j)
                    if (i != j && !multiply(es[i], es[j]).is_zero())
                        return detail::bool_check(false);
            }
            if (!(sum == unit_idempotent<K>(n, Flavor::plus)))
                return detail::bool_check(false);
        }
        return detail::bool_check(true);
    });

    h.run("aplus.decomposition", "n<=" + std::to_string(std::min(B + 2, 6)), [&] {
        for (int n = 0; n <= std::min(B + 2, 6); ++n) {
            auto d = decompose_projective_plus<K>(n);
            if (!d.verified || d.total() != (1LL << n)) return detail::bool_check(false);
            for (const auto& [m, c] : d.multiplicity)
                if (c != binom(n, m)) return detail::bool_check(false);
        }
        return detail::bool_check(true);
    });

    h.run("aplus.hom_table", "m,n<=" + std::to_string(std::min(B + 2, 6)), [&] {
        for (int m = 0; m <= std::min(B + 2, 6); ++m)
            for (int n = 0; n <= std::min(B + 2, 6); ++n)
                if (hom_dim_plus<K>(m, n) != (m == n ? 1 : 0))
                    return detail::bool_check(false);
        return detail::bool_check(true);
    });

    h.run("aplus.k0", "n<=" + std::to_string(std::min(B + 2, 6)), [&] {
        for (int n = 0; n <= std::min(B + 2, 6); ++n)
            if (!(k0_plus_class<K>(n) ==
                  convert(PolyClass::monomial(n, PolyBasis::standard), PolyBasis::projective)))
                return detail::bool_check(false);
        return detail::bool_check(true);
    });

    return h.finish();
}

/// Dimension tables used for the cross-field determinism claim: module
/// dimensions, resolution homology, and Ext tables, every entry independent
/// of the scalar field.
template <class K>
Json dimension_tables(int max_n, int max_weight) {
    Json j;
    Json mods = Json::array();
    for (int n = 0; n <= max_n; ++n) {
        Json row;
        row["n"] = n;
        Json dims = Json::array();
        for (int p = 0; p <= max_weight; ++p)
            dims.push_back(std::to_string(projective<K>(n).dim(p)));
        row["projective"] = dims;
        Json mdims = Json::array();
        for (int p = 0; p <= max_weight; ++p)
            mdims.push_back(std::to_string(standard<K>(n).dim(p)));
        row["standard"] = mdims;
        mods.push_back(row);
    }
    j["module_dims"] = mods;
    Json hom = Json::array();
    for (int n = 0; n <= std::min(max_n, 4); ++n) {
        auto r = resolve_standard<K>(n);
        std::vector<int> pos;
        for (int t = 0; t <= n; ++t) pos.push_back(t);
        Json row;
        row["n"] = n;
        Json per_weight = Json::array();
        for (int p = 0; p <= std::min(max_weight, 7); ++p) {
            Json hs = Json::array();
            for (long long v : homology_dims(r, p, pos)) hs.push_back(std::to_string(v));
            per_weight.push_back(hs);
        }
        row["homology"] = per_weight;
        hom.push_back(row);
    }
    j["standard_resolution_homology"] = hom;
    Json ext = Json::array();
    for (int n = 0; n <= std::min(max_n, 4); ++n)
        for (int m = 0; m <= std::min(max_n, 4); ++m) {
            auto t = ext_standard_standard<K>(n, m);
            Json row;
            row["n"] = n;
            row["m"] = m;
            Json dims = Json::array();
            for (const auto& [i, d] : t.computed) dims.push_back(std::to_string(d));
            row["ext"] = dims;
            ext.push_back(row);
        }
    j["ext_standard_standard"] = ext;
    return j;
}

}  // namespace slarc
