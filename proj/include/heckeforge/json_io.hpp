#pragma once

#include <string>

#include <json.hpp>

#include "heckeforge/aha.hpp"
#include "heckeforge/drinfeld.hpp"
#include "heckeforge/functor.hpp"
#include "heckeforge/heckemodule.hpp"
#include "heckeforge/matrix.hpp"
#include "heckeforge/ratfunc.hpp"

namespace heckeforge {

using nlohmann::json;

// ---- scalars ----

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::object();
        if (e.q) exp["q"] = e.q;
        if (e.eta) exp["eta"] = e.eta;
        if (e.u) exp["u"] = e.u;
        if (e.a) exp["a"] = e.a;
        terms.push_back(json{{"coeff", rational_to_string(c)}, {"exp", exp}});
    }
    return terms;
}

inline LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("laurent polynomial JSON must be an array of terms");
    LaurentPoly p;
    for (const auto& t : j) {
        Exponents e;
        if (t.contains("exp")) {
            const auto& x = t.at("exp");
            e.q = x.value("q", 0);
            e.eta = x.value("eta", 0);
            e.u = x.value("u", 0);
            e.a = x.value("a", 0);
        }
        p.add_term(e, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational function JSON must carry num and den");
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

// ---- Hecke elements ----

inline json to_json(const AhaElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back(json{{"upows", m.upows}, {"word", m.word}, {"coeff", to_json(c)}});
    return json{{"l", e.rank()}, {"terms", terms}};
}

inline AhaElement aha_from_json(const json& j) {
    const int l = j.at("l").get<int>();
    AhaElement e(l);
    for (const auto& t : j.at("terms")) {
        const std::vector<int> upows = t.at("upows").get<std::vector<int>>();
        const std::vector<int> word = t.at("word").get<std::vector<int>>();
        Permutation w = Permutation::from_word(l, word);
        if (w.canonical_word() != word)
            throw ParseError("permutation word is not the canonical reduced word");
        e.add_term(NormalMonomial(upows, w), ratfunc_from_json(t.at("coeff")));
    }
    return e;
}

// ---- matrices and representations ----

inline json rows_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix rows_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j.at(r).size() != cols) throw ParseError("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = ratfunc_from_json(j.at(r).at(c));
    }
    return m;
}

inline json repmatrix_to_json(const Matrix& m, int n, int legs) {
    return json{{"n", n}, {"legs", legs}, {"rows", rows_to_json(m)}};
}

inline json to_json(const UqRep& rep) {
    json cartan_pos = json::array(), cartan_neg = json::array();
    json epos = json::array(), eneg = json::array();
    for (const auto& m : rep.qe_pos) cartan_pos.push_back(rows_to_json(m));
    for (const auto& m : rep.qe_neg) cartan_neg.push_back(rows_to_json(m));
    for (const auto& m : rep.e_pos) epos.push_back(rows_to_json(m));
    for (const auto& m : rep.e_neg) eneg.push_back(rows_to_json(m));
    return json{{"n", rep.n},         {"legs", rep.legs},      {"qe_pos", cartan_pos},
                {"qe_neg", cartan_neg}, {"e_pos", epos},        {"e_neg", eneg}};
}

inline UqRep uqrep_from_json(const json& j) {
    UqRep rep;
    rep.n = j.at("n").get<int>();
    rep.legs = j.at("legs").get<int>();
    for (const auto& m : j.at("qe_pos")) rep.qe_pos.push_back(rows_from_json(m));
    for (const auto& m : j.at("qe_neg")) rep.qe_neg.push_back(rows_from_json(m));
    for (const auto& m : j.at("e_pos")) rep.e_pos.push_back(rows_from_json(m));
    for (const auto& m : j.at("e_neg")) rep.e_neg.push_back(rows_from_json(m));
    return rep;
}

inline json to_json(const DrinfeldianRep& rep) {
    return json{{"uq", to_json(rep.uq)},
                {"xi", rows_to_json(rep.xi)},
                {"h_delta", "identity"}};
}

inline DrinfeldianRep drinfeldian_from_json(const json& j) {
    DrinfeldianRep rep;
    rep.uq = uqrep_from_json(j.at("uq"));
    rep.xi = rows_from_json(j.at("xi"));
    return rep;
}

// ---- Hecke modules and functor bundles ----

inline json to_json(const HeckeModule& m) {
    json sig = json::array(), uu = json::array();
    for (const auto& s : m.sigma) sig.push_back(rows_to_json(s));
    for (const auto& u : m.u) uu.push_back(rows_to_json(u));
    return json{{"l", m.l}, {"dim", m.dim}, {"sigma", sig}, {"u", uu}};
}

inline HeckeModule module_from_json(const json& j) {
    HeckeModule m;
    m.l = j.at("l").get<int>();
    m.dim = j.at("dim").get<std::size_t>();
    for (const auto& s : j.at("sigma")) m.sigma.push_back(rows_from_json(s));
    for (const auto& u : j.at("u")) m.u.push_back(rows_from_json(u));
    if (m.sigma.size() + 1 != static_cast<std::size_t>(m.l) ||
        m.u.size() != static_cast<std::size_t>(m.l))
        throw ParseError("module generator counts do not match l");
    for (const auto& mat : m.sigma)
        if (mat.rows() != m.dim || mat.cols() != m.dim) throw ParseError("module matrix shape");
    for (const auto& mat : m.u)
        if (mat.rows() != m.dim || mat.cols() != m.dim) throw ParseError("module matrix shape");
    return m;
}

inline json to_json(const FunctorResult& r) {
    return json{{"quotient",
                 json{{"ambient_dim", r.quotient.ambient_dim},
                      {"dim", r.quotient.dim},
                      {"coset_columns", r.quotient.coset_columns},
                      {"relation_basis", rows_to_json(r.quotient.relation_basis)},
                      {"projection", rows_to_json(r.quotient.projection)},
                      {"section", rows_to_json(r.quotient.section)}}},
                {"rep", to_json(r.rep)},
                {"level_warning", r.level_warning}};
}

}  // namespace heckeforge
