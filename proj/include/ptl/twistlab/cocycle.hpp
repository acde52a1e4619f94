#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptl/autgrp/automorphism.hpp"
#include "ptl/exactfield/galois.hpp"
#include "ptl/projlin/projmatrix.hpp"

namespace ptl {

// A word in the generators: (generator index, +1 or -1) letters.
using Word = std::vector<std::pair<std::size_t, int>>;

// A finite Galois group given by generators (as field automorphisms) and
// defining relations.
template <class Base>
struct GaloisPresentation {
    FieldPtr<Base> field;
    std::vector<std::string> names;
    std::vector<GaloisMap<Base>> maps;
    std::vector<Word> relations;

    GaloisMap<Base> evaluate(const Word& w) const {
        auto acc = GaloisMap<Base>::identity(field);
        for (auto [g, e] : w) acc = acc.compose(e > 0 ? maps.at(g) : maps.at(g).inverse());
        return acc;
    }

    std::string word_string(const Word& w) const {
        std::string s;
        for (auto [g, e] : w) s += names.at(g) + (e < 0 ? "^-1" : "");
        return s.empty() ? "1" : s;
    }

    GaloisReport verify() const {
        GaloisReport rep;
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (!maps[i].verified()) {
                rep.ok = false;
                rep.failures.push_back("generator " + names[i] + " is not a valid automorphism");
            }
        if (!rep.ok) return rep;
        for (auto& r : relations)
            if (!evaluate(r).fixes_generators()) {
                rep.ok = false;
                rep.failures.push_back("relation " + word_string(r) + " does not act trivially");
            }
        return rep;
    }
};

// Cyclic group of order m generated by g.
template <class Base>
GaloisPresentation<Base> cyclic_presentation(const GaloisMap<Base>& g, std::string name = "sigma") {
    GaloisPresentation<Base> P;
    P.field = g.field();
    P.names = {std::move(name)};
    P.maps = {g};
    P.relations = {Word(g.order(), {0, 1})};
    return P;
}

template <class Base>
struct Cocycle {
    GaloisPresentation<Base> presentation;
    std::vector<ProjMatrix<Base>> values;
    // Optional ambient group: values must be members, or automorphisms of the curve.
    const MatrixGroup<Base>* ambient = nullptr;
    std::optional<PlaneCurve<Base>> curve;
};

struct CocycleReport {
    bool ok = true;
    std::vector<std::string> lines;
};

struct CocycleAmbientError : Error {
    using Error::Error;
};

// Twisted product along a word: xi_{gh} = xi_g * g(xi_h), with
// xi_{g^-1} = g^-1(xi_g)^-1.
template <class Base>
ProjMatrix<Base> cocycle_on_word(const Cocycle<Base>& xi, const Word& w) {
    const auto& P = xi.presentation;
    auto K = P.field;
    std::size_t n = xi.values.front().dim();
    auto val = ProjMatrix<Base>::identity(K, n);
    auto acc = GaloisMap<Base>::identity(K);
    for (auto [g, e] : w) {
        const auto& s = P.maps.at(g);
        if (e > 0) {
            val = val * galois_on_matrix(acc, xi.values.at(g).embed(K));
            acc = acc.compose(s);
        } else {
            auto sinv = s.inverse();
            auto f = galois_on_matrix(sinv, xi.values.at(g).embed(K)).inverse();
            val = val * galois_on_matrix(acc, f);
            acc = acc.compose(sinv);
        }
    }
    return val;
}

template <class Base>
CocycleReport verify_cocycle(const Cocycle<Base>& xi) {
    CocycleReport rep;
    const auto& P = xi.presentation;
    if (xi.values.size() != P.maps.size()) throw PreconditionError("one cocycle value per generator is required");
    auto pv = P.verify();
    if (!pv.ok) throw PreconditionError("presentation does not verify: " + pv.failures.front());
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        if (xi.ambient && !xi.ambient->contains(xi.values[i].embed(xi.ambient->elements().front().field())))
            throw CocycleAmbientError("value at " + P.names[i] + " lies outside the ambient group");
        if (xi.curve && !is_automorphism(*xi.curve, xi.values[i]))
            throw CocycleAmbientError("value at " + P.names[i] + " is not an automorphism of the curve");
    }
    for (auto& r : P.relations) {
        auto v = cocycle_on_word(xi, r);
        bool id = v.is_identity();
        rep.lines.push_back("relation " + P.word_string(r) + ": " + (id ? "trivial" : "product " + v.to_string()));
        if (!id) rep.ok = false;
    }
    return rep;
}

}  // namespace ptl
