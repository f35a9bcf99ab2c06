// slarc: exact computations in the slarc diagram algebras from the command
// line. Subcommands mirror the library: basis, mul, module, resolve, ext,
// cartan, bgg, functor, cable, k0, aplus, render, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "slarc/slarc.hpp"

using namespace slarc;

namespace {

struct Options {
    std::string field = "q";
    bool json = false;
    int max_weight = 8;
    std::string cache_dir;
    bool no_cache = false;
    bool timings = false;

    // subcommand payloads
    std::string cmd;
    int left = 0, right = 0;
    int width = -1;
    std::string file_a, file_b;
    std::string kind = "standard";
    int n = 0, k = 1;
    bool verify_flag = false;
    int t_max = 4;
    std::string by = "standard";
    std::string kind2 = "standard";
    int n2 = 0;
    int size = 8;
    bool check_factorization = false;
    std::string apply;
    std::string op_name;
    std::string to_basis = "standard";
    std::string expr, expr2;
    bool svg = false;
    int max_n = 4;
    std::string verify_what = "all";
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("file '" + path + "' is not valid JSON");
    return j;
}

void emit(const Options& opt, const Json& j, const std::string& plain) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

std::pair<std::string, int> split_apply(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("expected KIND:N, got '" + s + "'");
    return {s.substr(0, pos), std::stoi(s.substr(pos + 1))};
}

template <class K>
int cmd_basis(const Options& opt) {
    std::optional<WidthFilter> f;
    if (opt.width >= 0) f = WidthFilter::exactly(opt.width);
    auto basis = enumerate_basis(opt.left, opt.right, f);
    Json j;
    j["left"] = opt.left;
    j["right"] = opt.right;
    if (opt.width >= 0) j["width"] = opt.width;
    j["count"] = basis.size();
    j["diagrams"] = Json::array();
    for (const auto& d : basis) j["diagrams"].push_back(diagram_to_json(d));
    std::ostringstream os;
    os << basis.size() << " diagram(s) in _" << opt.left << "B_" << opt.right;
    if (opt.width >= 0) os << " of width " << opt.width;
    os << "\n";
    for (const auto& d : basis) os << "  " << d.str() << "\n";
    emit(opt, j, os.str());
    return 0;
}

template <class K>
int cmd_mul(const Options& opt) {
    auto a = element_from_json<K>(read_json_file(opt.file_a));
    auto b = element_from_json<K>(read_json_file(opt.file_b));
    auto p = multiply(a, b);
    emit(opt, element_to_json(p), p.str() + "\n");
    return 0;
}

template <class K>
LocFinModule<K> module_by_kind(const std::string& kind, int n, int k) {
    if (kind == "projective") return projective<K>(n);
    if (kind == "standard") return standard<K>(n);
    if (kind == "simple") return simple<K>(n);
    if (kind == "truncation") return width_truncation<K>(n, k);
    throw std::invalid_argument("unknown module kind '" + kind + "'");
}

template <class K>
int cmd_module(const Options& opt) {
    auto m = module_by_kind<K>(opt.kind, opt.n, opt.k);
    Json j;
    j["module"] = m.descriptor();
    Json ws = Json::array(), ds = Json::array();
    std::ostringstream os;
    os << m.descriptor() << " dims:";
    for (int p = 0; p <= opt.max_weight; ++p) {
        ws.push_back(p);
        ds.push_back(std::to_string(m.dim(p)));
        os << " " << m.dim(p);
    }
    os << "\n";
    j["weights"] = ws;
    j["dims"] = ds;
    emit(opt, j, os.str());
    return 0;
}

template <class K>
int cmd_resolve(const Options& opt, const Cache& cache) {
    std::string params = opt.kind + ":" + std::to_string(opt.n) + ":by=" + opt.by +
                         ":t=" + std::to_string(opt.t_max) +
                         ":w=" + std::to_string(opt.max_weight) +
                         ":verify=" + (opt.verify_flag ? "1" : "0");
    std::string key = Cache::make_key("resolve", params, K::field_name());
    auto t0 = std::chrono::steady_clock::now();
    if (auto hit = cache.get(key)) {
        if (opt.timings) std::cerr << "slarc: resolve served from cache\n";
        std::cout << hit->dump(2) << "\n";
        bool ok = (*hit)["verification"].is_null() ||
                  (*hit)["verification"].value("status", "pass") == "pass";
        return ok ? 0 : 1;
    }

    FormalComplex<K> C;
    if (opt.kind == "standard") {
        C = resolve_standard<K>(opt.n);
    } else if (opt.kind == "simple" && opt.by == "standard") {
        C = resolve_simple_by_standard<K>(opt.n, opt.t_max);
    } else if (opt.kind == "simple" && opt.by == "projective") {
        C = resolve_simple_projective<K>(opt.n, opt.t_max);
    } else {
        throw std::invalid_argument("resolve: unknown construction");
    }

    Json out;
    out["complex"] = complex_to_json(C);
    bool ok = true;
    if (opt.verify_flag) {
        Json ver;
        auto d2 = verify_d2(C);
        ver["d2"] = d2.ok ? "pass" : "fail";
        ok = ok && d2.ok;
        ver["linearity"] = check_linearity(C) ? "pass" : "fail";
        Json exact = Json::array();
        int top = C.max_position();
        int maxpos = C.truncated_above ? std::min(3, top - 1) : top;
        std::vector<int> pos;
        for (int t = 0; t <= maxpos; ++t) pos.push_back(t);
        for (int p = 0; p <= opt.max_weight; ++p) {
            auto h = homology_dims(C, p, pos);
            long long expect0 = 0;
            if (opt.kind == "standard")
                expect0 = binom(p, opt.n);
            else
                expect0 = (p == opt.n) ? 1 : 0;
            bool wok = h[0] == expect0;
            for (size_t i = 1; i < h.size(); ++i) wok = wok && h[i] == 0;
            Json we;
            we["weight"] = p;
            Json hm = Json::array();
            for (long long v : h) hm.push_back(std::to_string(v));
            we["homology"] = hm;
            we["status"] = wok ? "pass" : "fail";
            exact.push_back(we);
            ok = ok && wok;
        }
        ver["exactness"] = exact;
        ver["status"] = ok ? "pass" : "fail";
        out["verification"] = ver;
    } else {
        out["verification"] = nullptr;
    }
    cache.put(key, out);
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "slarc: resolve computed in " << ms << " ms\n";
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

template <class K>
int cmd_ext(const Options& opt) {
    ExtTable t;
    if (opt.kind == "standard" && opt.kind2 == "standard")
        t = ext_standard_standard<K>(opt.n, opt.n2);
    else if (opt.kind == "standard" && opt.kind2 == "simple")
        t = ext_standard_simple<K>(opt.n, opt.n2);
    else if (opt.kind == "simple" && opt.kind2 == "simple" && opt.n2 == 0)
        t = ext_simple_simple_L0<K>(opt.n, opt.t_max);
    else
        throw std::invalid_argument("ext: unsupported pair (use standard/standard, "
                                    "standard/simple, or simple/simple with m = 0)");
    Json j;
    j["description"] = t.description;
    Json rows = Json::array();
    std::ostringstream os;
    os << t.description << "\n";
    for (const auto& [i, d] : t.computed) {
        Json r;
        r["i"] = i;
        r["computed"] = std::to_string(d);
        r["closed_form"] = std::to_string(t.closed_form.at(i));
        rows.push_back(r);
        os << "  i=" << i << ": " << d << " (closed form " << t.closed_form.at(i) << ")\n";
    }
    j["table"] = rows;
    j["induced_maps_all_zero"] = t.induced_maps_all_zero;
    j["match"] = t.match;
    os << (t.match ? "match\n" : "MISMATCH\n");
    emit(opt, j, os.str());
    return t.match ? 0 : 1;
}

template <class K>
int cmd_cartan(const Options& opt) {
    auto c = cartan_matrix(opt.size);
    Json j;
    j["size"] = opt.size;
    Json rows = Json::array();
    std::ostringstream os;
    os << "Cartan matrix (" << opt.size << "x" << opt.size << ")\n";
    for (const auto& row : c) {
        Json r = Json::array();
        for (long long v : row) r.push_back(std::to_string(v));
        rows.push_back(r);
        for (long long v : row) os << v << " ";
        os << "\n";
    }
    j["cartan"] = rows;
    bool ok = true;
    if (opt.check_factorization) {
        auto rep = bgg_check<K>(opt.size);
        ok = rep.factorization;
        j["factorization"] = ok ? "pass" : "fail";
        os << "C = m m^t: " << (ok ? "pass" : "fail") << "\n";
    }
    emit(opt, j, os.str());
    return ok ? 0 : 1;
}

template <class K>
int cmd_bgg(const Options& opt) {
    auto rep = bgg_check<K>(opt.size + 1);
    Json j;
    j["max"] = opt.size;
    j["reciprocity"] = rep.reciprocity ? "pass" : "fail";
    j["factorization"] = rep.factorization ? "pass" : "fail";
    Json mult = Json::array();
    for (const auto& row : rep.multiplicity) {
        Json r = Json::array();
        for (long long v : row) r.push_back(std::to_string(v));
        mult.push_back(r);
    }
    j["multiplicity"] = mult;
    std::ostringstream os;
    os << "BGG reciprocity up to " << opt.size << ": "
       << (rep.reciprocity ? "pass" : "fail") << "\n"
       << "Cartan factorization: " << (rep.factorization ? "pass" : "fail") << "\n";
    emit(opt, j, os.str());
    return rep.reciprocity && rep.factorization ? 0 : 1;
}

Json report_to_json(const FunctorReport& rep) {
    Json j;
    j["input"] = rep.input;
    j["output"] = rep.output;
    Json dims = Json::object();
    for (const auto& [p, d] : rep.dims) dims[std::to_string(p)] = std::to_string(d);
    j["dims"] = dims;
    j["verified"] = rep.verified;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

template <class K>
int cmd_functor(const Options& opt) {
    auto [kind, n] = split_apply(opt.apply);
    FunctorReport rep;
    if (opt.op_name == "fk") {
        if (kind == "projective") {
            auto m = apply_Fk<K>(n, opt.k);
            rep.input = "P_" + std::to_string(n);
            rep.output = m.descriptor();
            for (int p = 0; p <= opt.max_weight; ++p) rep.dims[p] = m.dim(p);
            rep.verified = true;
        } else if (kind == "standard") {
            rep = derived_Fk_standard<K>(n, opt.k, opt.max_weight);
        } else {
            throw std::invalid_argument("functor fk: apply to projective:N or standard:N");
        }
    } else if (opt.op_name == "res") {
        if (kind == "projective") rep = res_projective_iso<K>(n, opt.max_weight);
        else if (kind == "standard") rep = res_standard_iso<K>(n, opt.max_weight);
        else if (kind == "simple") rep = res_simple_check<K>(n, opt.max_weight);
        else throw std::invalid_argument("functor res: unknown kind");
    } else if (opt.op_name == "ind") {
        if (kind == "projective") rep = ind_projective_check<K>(n, opt.max_weight);
        else if (kind == "standard") rep = ind_standard_ses<K>(n, opt.max_weight);
        else if (kind == "simple") rep = ind_simple_check<K>(n, opt.max_weight);
        else throw std::invalid_argument("functor ind: unknown kind");
    } else {
        throw std::invalid_argument("unknown functor '" + opt.op_name + "'");
    }
    std::ostringstream os;
    os << rep.input << " -> " << rep.output << "  ["
       << (rep.verified ? "verified" : "FAILED") << "]\n";
    for (const auto& [p, d] : rep.dims) os << "  weight " << p << ": " << d << "\n";
    emit(opt, report_to_json(rep), os.str());
    return rep.verified ? 0 : 1;
}

template <class K>
int cmd_cable(const Options& opt) {
    if (opt.kind != "standard")
        throw std::invalid_argument("cable: only standard modules are decomposed");
    bool full = opt.n <= 2 && opt.k <= 2;
    auto rep = cable_standard_iso<K>(opt.n, opt.k, full ? 4 : 3, full);
    Json j = report_to_json(rep);
    Json s = Json::object();
    for (int i = (opt.n + opt.k - 1) / opt.k; i <= opt.n; ++i)
        s[std::to_string(i)] = std::to_string(S_count(opt.n, opt.k, i));
    j["S"] = s;
    std::ostringstream os;
    os << rep.input << " ~ " << rep.output << "  ["
       << (rep.verified ? "verified" : "FAILED") << "]\n";
    emit(opt, j, os.str());
    return rep.verified ? 0 : 1;
}

template <class K>
int cmd_k0(const Options& opt) {
    Json j;
    std::ostringstream os;
    if (opt.op_name == "convert") {
        auto f = parse_poly(opt.expr);
        auto g = convert(f, opt.to_basis == "standard" ? PolyBasis::standard
                                                       : PolyBasis::projective);
        j = poly_to_json(g);
        os << g.str() << "\n";
    } else if (opt.op_name == "inner") {
        long long v = inner_product(parse_poly(opt.expr), parse_poly(opt.expr2));
        j["inner"] = std::to_string(v);
        os << v << "\n";
    } else if (opt.op_name == "op") {
        auto f = parse_poly(opt.expr);
        PolyClass g;
        if (opt.to_basis == "res") g = op_Res(f);
        else if (opt.to_basis == "ind") g = op_Ind(f);
        else if (opt.to_basis == "fk") g = op_Fk(f, opt.k);
        else if (opt.to_basis == "cable") g = op_cable(f, opt.k);
        else throw std::invalid_argument("k0 op: unknown operator '" + opt.to_basis + "'");
        j = poly_to_json(g);
        os << g.str() << "\n";
    } else {
        throw std::invalid_argument("k0: unknown action");
    }
    emit(opt, j, os.str());
    return 0;
}

template <class K>
int cmd_aplus(const Options& opt) {
    Json j;
    std::ostringstream os;
    bool ok = true;
    if (opt.op_name == "decompose") {
        auto d = decompose_projective_plus<K>(opt.n);
        ok = d.verified;
        j["n"] = d.n;
        Json mult = Json::object();
        for (const auto& [m, c] : d.multiplicity) mult[std::to_string(m)] = std::to_string(c);
        j["multiplicity"] = mult;
        j["verified"] = d.verified;
        os << "P_" << opt.n << " decomposes with multiplicities:";
        for (const auto& [m, c] : d.multiplicity) os << " " << m << ":" << c;
        os << (d.verified ? "  [verified]\n" : "  [FAILED]\n");
    } else if (opt.op_name == "homtable") {
        Json rows = Json::array();
        os << "Hom table up to " << opt.size << "\n";
        for (int m = 0; m <= opt.size; ++m) {
            Json r = Json::array();
            for (int n = 0; n <= opt.size; ++n) {
                long long v = hom_dim_plus<K>(m, n);
                if (v != (m == n ? 1 : 0)) ok = false;
                r.push_back(std::to_string(v));
                os << v << " ";
            }
            rows.push_back(r);
            os << "\n";
        }
        j["hom"] = rows;
        j["diagonal"] = ok;
    } else if (opt.op_name == "k0") {
        auto f = k0_plus_class<K>(opt.n);
        j = poly_to_json(f);
        os << f.str() << "\n";
    } else {
        throw std::invalid_argument("aplus: unknown action");
    }
    emit(opt, j, os.str());
    return ok ? 0 : 1;
}

template <class K>
int cmd_render(const Options& opt) {
    Diagram d = diagram_from_json(read_json_file(opt.file_a));
    if (opt.svg)
        std::cout << render_svg(d);
    else
        std::cout << render_text(d);
    return 0;
}

template <class K>
int cmd_verify(const Options& opt) {
    if (opt.verify_what != "all")
        throw std::invalid_argument("verify: only 'all' is provided");
    auto rep = verify_all<K>(opt.max_n, opt.max_weight);
    if (opt.json) {
        std::cout << rep.to_json(opt.timings).dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << " (" << c.params
                      << ")";
            if (!c.pass) std::cout << "  expected " << c.expected << ", got " << c.actual;
            if (opt.timings) std::cout << "  [" << c.elapsed_ms << " ms]";
            std::cout << "\n";
        }
        std::cout << rep.checks.size() - rep.failures << "/" << rep.checks.size()
                  << " checks passed\n";
    }
    return rep.failures == 0 ? 0 : 1;
}

template <class K>
int dispatch(const Options& opt, const Cache& cache) {
    if (opt.cmd == "basis") return cmd_basis<K>(opt);
    if (opt.cmd == "mul") return cmd_mul<K>(opt);
    if (opt.cmd == "module") return cmd_module<K>(opt);
    if (opt.cmd == "resolve") return cmd_resolve<K>(opt, cache);
    if (opt.cmd == "ext") return cmd_ext<K>(opt);
    if (opt.cmd == "cartan") return cmd_cartan<K>(opt);
    if (opt.cmd == "bgg") return cmd_bgg<K>(opt);
    if (opt.cmd == "functor") return cmd_functor<K>(opt);
    if (opt.cmd == "cable") return cmd_cable<K>(opt);
    if (opt.cmd == "k0") return cmd_k0<K>(opt);
    if (opt.cmd == "aplus") return cmd_aplus<K>(opt);
    if (opt.cmd == "render") return cmd_render<K>(opt);
    if (opt.cmd == "verify") return cmd_verify<K>(opt);
    throw std::invalid_argument("no subcommand given (try --help)");
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact computations in the slarc diagram algebras"};
    app.require_subcommand(0, 1);
    app.add_option("--field", opt.field, "scalar field: q (exact rationals) or fp:<prime>");
    app.add_flag("--json", opt.json, "machine-readable JSON on stdout");
    app.add_option("--max-weight", opt.max_weight, "weight cutoff for module tables");
    app.add_option("--cache-dir", opt.cache_dir, "directory for the result cache");
    app.add_flag("--no-cache", opt.no_cache, "bypass the result cache");
    app.add_flag("--timings", opt.timings, "report elapsed times (stderr / report field)");

    auto* basis = app.add_subcommand("basis", "enumerate a diagram basis");
    basis->add_option("--left", opt.left)->required();
    basis->add_option("--right", opt.right)->required();
    basis->add_option("--width", opt.width);

    auto* mul = app.add_subcommand("mul", "multiply two algebra elements from JSON files");
    mul->add_option("a", opt.file_a)->required();
    mul->add_option("b", opt.file_b)->required();

    auto* module = app.add_subcommand("module", "weight dimension tables");
    module->add_option("action", opt.op_name)->check(CLI::IsMember({"dims"}))->required();
    module->add_option("--kind", opt.kind);
    module->add_option("--n", opt.n)->required();
    module->add_option("--k", opt.k);

    auto* resolve = app.add_subcommand("resolve", "construct and verify resolutions");
    resolve->add_option("kind", opt.kind)->check(CLI::IsMember({"standard", "simple"}))
        ->required();
    resolve->add_option("n", opt.n)->required();
    resolve->add_flag("--verify", opt.verify_flag);
    resolve->add_option("--by", opt.by)->check(CLI::IsMember({"standard", "projective"}));
    resolve->add_option("--t-max", opt.t_max);

    auto* ext = app.add_subcommand("ext", "Ext tables, two routes");
    ext->add_option("kind1", opt.kind)->required();
    ext->add_option("n1", opt.n)->required();
    ext->add_option("kind2", opt.kind2)->required();
    ext->add_option("n2", opt.n2)->required();
    ext->add_option("--t-max", opt.t_max);

    auto* cartan = app.add_subcommand("cartan", "Cartan matrix from basis counts");
    cartan->add_option("--size", opt.size);
    cartan->add_flag("--check-factorization", opt.check_factorization);

    auto* bgg = app.add_subcommand("bgg", "BGG reciprocity check");
    bgg->add_option("--max", opt.size);

    auto* functor = app.add_subcommand("functor", "apply and verify functors");
    functor->add_option("name", opt.op_name)->check(CLI::IsMember({"fk", "res", "ind"}))
        ->required();
    functor->add_option("--k", opt.k);
    functor->add_option("--apply", opt.apply)->required();

    auto* cable = app.add_subcommand("cable", "cabled module decomposition");
    cable->add_option("--k", opt.k)->required();
    cable->add_option("kind", opt.kind)->required();
    cable->add_option("n", opt.n)->required();

    auto* k0 = app.add_subcommand("k0", "Grothendieck-group computations");
    k0->add_option("action", opt.op_name)->check(CLI::IsMember({"convert", "op", "inner"}))
        ->required();
    k0->add_option("--to", opt.to_basis);
    k0->add_option("--name", opt.to_basis);
    k0->add_option("--k", opt.k);
    k0->add_option("expr", opt.expr)->required();
    k0->add_option("expr2", opt.expr2);

    auto* aplus = app.add_subcommand("aplus", "A+ structure");
    aplus->add_option("action", opt.op_name)
        ->check(CLI::IsMember({"decompose", "homtable", "k0"}))
        ->required();
    aplus->add_option("n", opt.n);
    aplus->add_option("--max", opt.size);

    auto* render = app.add_subcommand("render", "render a diagram from JSON");
    render->add_option("file", opt.file_a)->required();
    render->add_flag("--svg", opt.svg);

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("what", opt.verify_what);
    verify->add_option("--max-n", opt.max_n);
    verify->add_option("--max-weight", opt.max_weight);

    for (auto* sc : {basis, mul, module, resolve, ext, cartan, bgg, functor, cable, k0,
                     aplus, render, verify})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    for (auto* sc : {basis, mul, module, resolve, ext, cartan, bgg, functor, cable, k0,
                     aplus, render, verify})
        if (sc->parsed()) opt.cmd = sc->get_name();

    try {
        Cache cache = Cache::configure(opt.cache_dir, opt.no_cache);
        if (opt.field == "q") return dispatch<Rat>(opt, cache);
        if (opt.field.rfind("fp:", 0) == 0) {
            Fp::set_modulus(static_cast<uint32_t>(std::stoul(opt.field.substr(3))));
            return dispatch<Fp>(opt, cache);
        }
        if (opt.field == "fp") return dispatch<Fp>(opt, cache);
        throw std::invalid_argument("unknown field '" + opt.field + "' (use q or fp:<prime>)");
    } catch (const std::exception& e) {
        std::cerr << "slarc: " << e.what() << "\n";
        return 2;
    }
}
