#pragma once

#include <string>

#include "json.hpp"
#include "slarc/algebra.hpp"
#include "slarc/complex.hpp"
#include "slarc/diagram.hpp"
#include "slarc/grothendieck.hpp"
#include "slarc/scalar.hpp"

namespace slarc {

// Insertion-ordered JSON keeps output byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json diagram_to_json(const Diagram& d) {
    Json j;
    j["left"] = d.left;
    j["right"] = d.right;
    j["larc_left"] = d.larc_left_list();
    j["larc_right"] = d.larc_right_list();
    return j;
}

inline Diagram diagram_from_json(const Json& j) {
    return validate(j.at("left").get<int>(), j.at("right").get<int>(),
                    j.at("larc_left").get<std::vector<int>>(),
                    j.at("larc_right").get<std::vector<int>>());
}

/// Coefficients travel as {"num": "...", "den": "..."} with string-encoded
/// integers; the prime field uses its residue over denominator "1".
template <class K>
struct ScalarIO;

template <>
struct ScalarIO<Rat> {
    static Json to_json(const Rat& v) {
        return Json{{"num", v.num_str()}, {"den", v.den_str()}};
    }
    static Rat from_json(const Json& j) {
        return Rat::from_string(j.at("num").get<std::string>(),
                                j.at("den").get<std::string>());
    }
};

template <>
struct ScalarIO<Fp> {
    static Json to_json(const Fp& v) {
        return Json{{"num", std::to_string(v.value())}, {"den", "1"}};
    }
    static Fp from_json(const Json& j) {
        if (j.at("den").get<std::string>() != "1")
            throw std::invalid_argument("prime-field scalar with non-unit denominator");
        return Fp(std::stol(j.at("num").get<std::string>()));
    }
};

template <class K>
Json element_to_json(const AlgebraElement<K>& e) {
    Json j;
    j["flavor"] = flavor_name(e.flavor());
    j["terms"] = Json::array();
    for (const auto& [d, c] : e.terms())
        j["terms"].push_back(Json{{"coeff", ScalarIO<K>::to_json(c)},
                                  {"diagram", diagram_to_json(d)}});
    return j;
}

template <class K>
AlgebraElement<K> element_from_json(const Json& j) {
    std::string fl = j.at("flavor").get<std::string>();
    if (fl != "minus" && fl != "plus")
        throw std::invalid_argument("unknown flavor '" + fl + "'");
    AlgebraElement<K> e(fl == "minus" ? Flavor::minus : Flavor::plus);
    for (const auto& t : j.at("terms"))
        e.add_term(diagram_from_json(t.at("diagram")),
                   ScalarIO<K>::from_json(t.at("coeff")));
    return e;
}

template <class K>
Json complex_to_json(const FormalComplex<K>& C) {
    Json terms = Json::object();
    for (const auto& [t, summands] : C.terms) {
        Json arr = Json::array();
        for (const auto& s : summands) {
            Json sj;
            sj[s.kind == TermKind::projective ? "proj" : "std"] = s.index;
            sj["label"] = s.label;
            arr.push_back(sj);
        }
        terms[std::to_string(t)] = arr;
    }
    Json diffs = Json::object();
    for (const auto& [t, ents] : C.diffs) {
        size_t rows = C.term(t - 1).size(), cols = C.term(t).size();
        // entries sharing a cell accumulate into one algebra element
        std::map<std::pair<int, int>, AlgebraElement<K>> cells;
        for (const auto& e : ents) {
            auto it = cells.find({e.row, e.col});
            if (it == cells.end())
                cells.emplace(std::make_pair(e.row, e.col), e.val);
            else
                it->second += e.val;
        }
        Json mat = Json::array();
        for (size_t r = 0; r < rows; ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < cols; ++c) row.push_back(nullptr);
            mat.push_back(row);
        }
        for (const auto& [cell, val] : cells)
            if (!val.is_zero()) mat[cell.first][cell.second] = element_to_json(val);
        diffs[std::to_string(t)] = mat;
    }
    Json j;
    j["flavor"] = flavor_name(C.flavor);
    j["augmentation"] = C.augmentation;
    j["truncated_above"] = C.truncated_above;
    j["terms"] = terms;
    j["diffs"] = diffs;
    return j;
}

template <class K>
FormalComplex<K> complex_from_json(const Json& j) {
    FormalComplex<K> C;
    C.flavor = j.at("flavor").get<std::string>() == "plus" ? Flavor::plus : Flavor::minus;
    C.augmentation = j.value("augmentation", std::string{});
    C.truncated_above = j.value("truncated_above", false);
    for (const auto& [key, arr] : j.at("terms").items()) {
        int t = std::stoi(key);
        for (const auto& sj : arr) {
            FormalSummand s;
            if (sj.contains("proj")) {
                s.kind = TermKind::projective;
                s.index = sj.at("proj").template get<int>();
            } else {
                s.kind = TermKind::standard_mod;
                s.index = sj.at("std").template get<int>();
            }
            s.label = sj.value("label", std::string{});
            C.terms[t].push_back(s);
        }
    }
    for (const auto& [key, mat] : j.at("diffs").items()) {
        int t = std::stoi(key);
        for (size_t r = 0; r < mat.size(); ++r)
            for (size_t c = 0; c < mat[r].size(); ++c)
                if (!mat[r][c].is_null())
                    C.diffs[t].push_back(FormalEntry<K>{
                        static_cast<int>(r), static_cast<int>(c),
                        element_from_json<K>(mat[r][c])});
    }
    return C;
}

inline Json poly_to_json(const PolyClass& f) {
    Json j;
    j["basis"] = f.basis == PolyBasis::projective ? "x" : "x-1";
    j["coeffs"] = Json::array();
    for (long long c : f.c) j["coeffs"].push_back(std::to_string(c));
    j["pretty"] = f.str();
    return j;
}

inline PolyClass poly_from_json(const Json& j) {
    PolyClass f;
    f.basis = j.at("basis").get<std::string>() == "x" ? PolyBasis::projective
                                                      : PolyBasis::standard;
    for (const auto& c : j.at("coeffs"))
        f.c.push_back(std::stoll(c.get<std::string>()));
    f.trim();
    return f;
}

}  // namespace slarc
