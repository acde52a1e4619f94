#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptl/exactfield/irreducible.hpp"
#include "ptl/io/expr.hpp"
#include "ptl/polyalg/curve.hpp"
#include "ptl/projlin/projmatrix.hpp"
#include "ptl/twistlab/cocycle.hpp"

namespace ptl {

using json = nlohmann::json;

struct FixtureError : Error {
    using Error::Error;
};

inline const VarsPtr& xyz_vars() {
    static const VarsPtr v = make_vars({"X", "Y", "Z"});
    return v;
}

// "[A : B : C]": row i holds the coefficients of the linear form in slot i.
template <class Base>
SquareMatrix<Base> parse_map(const FieldPtr<Base>& K, const std::string& text,
                             const std::map<std::string, Element<Base>>& constants = {}) {
    auto open = text.find('['), close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("substitution must be written [A : B : C]");
    std::vector<std::string> slots;
    std::string cur;
    for (std::size_t i = open + 1; i < close; ++i) {
        if (text[i] == ':') {
            slots.push_back(cur);
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    slots.push_back(cur);
    if (slots.size() != 3) throw ParseError("substitution needs three slots: " + text);
    SquareMatrix<Base> M(3, std::vector<Element<Base>>(3, Element<Base>::zero(K)));
    for (std::size_t i = 0; i < 3; ++i) {
        auto f = parse_poly(K, xyz_vars(), slots[i], constants);
        for (auto& [m, c] : f.terms()) {
            if (m[0] + m[1] + m[2] != 1) throw ParseError("slot '" + slots[i] + "' is not a linear form");
            for (std::size_t j = 0; j < 3; ++j)
                if (m[j]) M[i][j] = c;
        }
    }
    return M;
}

// A matrix given as "rows" (strings), "map" ([A : B : C]), or "diagonal";
// a bare string or array stands for map or rows.
template <class Base>
SquareMatrix<Base> parse_matrix(const FieldPtr<Base>& K, const json& j,
                                const std::map<std::string, Element<Base>>& constants = {}) {
    if (j.is_string()) return parse_map(K, j.get<std::string>(), constants);
    const json* rows = nullptr;
    if (j.is_array()) rows = &j;
    else if (j.contains("rows")) rows = &j["rows"];
    else if (j.contains("map")) return parse_map(K, j["map"].get<std::string>(), constants);
    else if (j.contains("diagonal")) {
        auto& d = j["diagonal"];
        SquareMatrix<Base> M(d.size(), std::vector<Element<Base>>(d.size(), Element<Base>::zero(K)));
        for (std::size_t i = 0; i < d.size(); ++i) M[i][i] = parse_element(K, d[i].get<std::string>(), constants);
        return M;
    } else {
        throw FixtureError("matrix needs rows, map or diagonal");
    }
    SquareMatrix<Base> M;
    for (auto& r : *rows) {
        std::vector<Element<Base>> row;
        for (auto& e : r) row.push_back(parse_element(K, e.get<std::string>(), constants));
        M.push_back(std::move(row));
    }
    for (auto& row : M)
        if (row.size() != M.size()) throw FixtureError("matrix is not square");
    if (M.empty()) throw FixtureError("matrix is empty");
    return M;
}

inline IrreducibilityWitness parse_witness(const json& j) {
    IrreducibilityWitness w;
    auto kind = j.value("kind", std::string("none"));
    if (kind == "prime_reduction") w.kind = IrreducibilityWitness::Kind::prime_reduction;
    else if (kind == "rabin") w.kind = IrreducibilityWitness::Kind::rabin;
    else if (kind == "cyclotomic") w.kind = IrreducibilityWitness::Kind::cyclotomic;
    else if (kind != "none") throw FixtureError("unknown witness kind " + kind);
    w.prime = j.value("prime", std::uint64_t{0});
    w.cyclotomic_n = j.value("n", std::uint64_t{0});
    if (j.contains("images")) w.images = j["images"].get<std::vector<std::uint64_t>>();
    return w;
}

inline std::filesystem::path default_fixture_dir() {
    if (const char* env = std::getenv("PTL_FIXTURES"); env && *env) return env;
#ifdef PTL_FIXTURE_DIR
    return PTL_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

// Fixture directory with cached number fields.
class FixtureBundle {
  public:
    explicit FixtureBundle(std::filesystem::path dir = default_fixture_dir()) : dir_(std::move(dir)) {
        if (!std::filesystem::is_directory(dir_)) throw FixtureError("fixture directory " + dir_.string() + " not found");
        if (!std::filesystem::exists(dir_ / "fields.json"))
            throw FixtureError("fixture directory " + dir_.string() + " has no fields.json");
    }

    const std::filesystem::path& dir() const { return dir_; }

    json load(const std::filesystem::path& rel) const { return load_file(rel.is_absolute() ? rel : dir_ / rel); }

    static json load_file(const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) throw FixtureError("cannot open " + p.string());
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(p.string() + ": " + e.what());
        }
    }

    FieldPtr<Rationals> field(const std::string& name) {
        if (auto it = fields_.find(name); it != fields_.end()) return it->second;
        if (!all_fields_) all_fields_ = load("fields.json");
        if (!all_fields_->contains(name)) throw FixtureError("unknown field '" + name + "'");
        auto K = Tower<Rationals>::make_base(Rationals{});
        for (auto& lv : (*all_fields_)[name]["levels"]) {
            auto var = lv["name"].get<std::string>();
            auto f = parse_poly(K, make_vars({var}), lv["minpoly"].get<std::string>());
            std::vector<Element<Rationals>> coeffs(static_cast<std::size_t>(f.degree()) + 1, Element<Rationals>::zero(K));
            for (auto& [m, c] : f.terms()) coeffs[m[0]] = c;
            std::map<std::string, std::string> meta;
            if (lv.contains("meta"))
                for (auto& [k, v] : lv["meta"].items()) meta[k] = v.get<std::string>();
            K = adjoin(K, var, coeffs, parse_witness(lv.value("witness", json::object())), meta);
        }
        fields_[name] = K;
        return K;
    }

    std::string field_anchor(const std::string& name) {
        field(name);
        return (*all_fields_)[name].value("anchor", name);
    }

    std::map<std::string, Element<Rationals>> constants(const FieldPtr<Rationals>& K, const json& j) {
        std::map<std::string, Element<Rationals>> out;
        if (j.contains("constants"))
            for (auto& [k, v] : j["constants"].items()) out.emplace(k, parse_element(K, v.get<std::string>()));
        return out;
    }

    // A curve document: inline object, or the name of curves/<name>.json.
    PlaneCurve<Rationals> curve(const json& j) {
        if (j.is_string()) return curve(load("curves/" + j.get<std::string>() + ".json"));
        auto K = field(j.at("field").get<std::string>());
        return PlaneCurve<Rationals>(parse_poly(K, xyz_vars(), j.at("form").get<std::string>(), constants(K, j)));
    }
    PlaneCurve<Rationals> curve(const std::string& name) { return curve(json(name)); }

    // Entry of matrices.json over its declared field.
    SquareMatrix<Rationals> matrix(const std::string& name) {
        if (!matrices_) matrices_ = load("matrices.json");
        if (!matrices_->contains(name)) throw FixtureError("unknown matrix '" + name + "'");
        auto& j = (*matrices_)[name];
        return parse_matrix(field(j.at("field").get<std::string>()), j);
    }
    json matrix_doc(const std::string& name) {
        if (!matrices_) matrices_ = load("matrices.json");
        if (!matrices_->contains(name)) throw FixtureError("unknown matrix '" + name + "'");
        return (*matrices_)[name];
    }

    json equations(const std::string& name) {
        if (!equations_) equations_ = load("equations.json");
        if (!equations_->contains(name)) throw FixtureError("unknown equation list '" + name + "'");
        return (*equations_)[name];
    }

  private:
    std::filesystem::path dir_;
    std::map<std::string, FieldPtr<Rationals>> fields_;
    std::optional<json> all_fields_, matrices_, equations_;
};

inline Word parse_word(const json& j, const std::vector<std::string>& names) {
    Word w;
    for (auto& s : j) {
        auto t = s.get<std::string>();
        int e = 1;
        if (auto p = t.find("^-1"); p != std::string::npos) {
            e = -1;
            t = t.substr(0, p);
        }
        auto it = std::find(names.begin(), names.end(), t);
        if (it == names.end()) throw FixtureError("relation uses unknown generator " + t);
        w.push_back({static_cast<std::size_t>(it - names.begin()), e});
    }
    return w;
}

template <class Base>
GaloisPresentation<Base> parse_presentation(const FieldPtr<Base>& K, const json& j) {
    GaloisPresentation<Base> P;
    P.field = K;
    for (auto& g : j.at("generators")) {
        std::vector<Element<Base>> im;
        for (auto& s : g.at("images")) im.push_back(parse_element(K, s.get<std::string>()));
        P.names.push_back(g.at("name").get<std::string>());
        P.maps.emplace_back(K, im, g.at("order").get<std::size_t>(), P.names.back());
    }
    for (auto& r : j.at("relations")) P.relations.push_back(parse_word(r, P.names));
    return P;
}

// Cocycle document: field, generators, relations, values, optional curve.
inline Cocycle<Rationals> load_cocycle(FixtureBundle& fx, const json& j) {
    auto K = fx.field(j.at("field").get<std::string>());
    Cocycle<Rationals> xi;
    xi.presentation = parse_presentation(K, j);
    for (auto& name : xi.presentation.names) {
        if (!j.at("values").contains(name)) throw FixtureError("no cocycle value for " + name);
        xi.values.emplace_back(parse_matrix(K, j["values"][name]));
    }
    if (j.contains("curve")) {
        auto C = fx.curve(j["curve"]);
        xi.curve = PlaneCurve<Rationals>(C.form().embed(K));
    }
    return xi;
}

}  // namespace ptl
