#pragma once

#include <string>
#include <vector>

#include "ptl/twistlab/cocycle.hpp"

namespace ptl {

template <class Base>
struct Twist {
    PlaneCurve<Base> model;      // over the base field k
    Element<Base> scale;         // F o M = scale * model
    Cocycle<Base> cocycle;       // sigma -> M sigma(M)^-1
};

struct TwistError : Error {
    using Error::Error;
};

// Lexicographically first monomial: the largest exponent vector in lex order.
template <class Base>
Element<Base> lex_first_coefficient(const MultiPoly<Base>& F) {
    const auto* best = &F.terms().front();
    for (auto& t : F.terms())
        if (compare_monomials(t.first, best->first, F.nvars(), TermOrder::lex) > 0) best = &t;
    return best->second;
}

// The k-model F o M of the twist split by M, with the induced cocycle on the
// presentation of Gal(L/k). Here k is the prefix of M's field of depth k_depth.
template <class Base>
Twist<Base> twist_from_splitting(const PlaneCurve<Base>& C, const ProjMatrix<Base>& M,
                                 const GaloisPresentation<Base>& gal, const FieldPtr<Base>& k,
                                 const MatrixGroup<Base>* ambient = nullptr) {
    auto G = substitute_linear(C.form(), M);
    auto lam = lex_first_coefficient(G);
    auto normalized = G.scaled(lam.inverse());
    auto rational = normalized.restrict_to(k);
    if (!rational) throw TwistError("F o M is not proportional to a form over the base field");
    Cocycle<Base> xi;
    xi.presentation = gal;
    auto Ml = M.embed(gal.field);
    for (auto& s : gal.maps) xi.values.push_back(Ml * galois_on_matrix(s, Ml).inverse());
    xi.ambient = ambient;
    auto CL = PlaneCurve<Base>(C.form().embed(gal.field));
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        if (!is_automorphism(CL, xi.values[i]))
            throw TwistError("induced cocycle value at " + gal.names[i] + " is not an automorphism");
        if (ambient && !ambient->contains(xi.values[i]))
            throw TwistError("induced cocycle value at " + gal.names[i] + " leaves the attached group");
    }
    return Twist<Base>{PlaneCurve<Base>(*rational), lam, std::move(xi)};
}

template <class Base>
Twist<Base> diagonal_twist(const PlaneCurve<Base>& C, const ProjMatrix<Base>& D,
                           const GaloisPresentation<Base>& gal, const FieldPtr<Base>& k) {
    if (!D.is_diagonal()) throw PreconditionError("diagonal twist needs a diagonal matrix");
    return twist_from_splitting(C, D, gal, k);
}

}  // namespace ptl
