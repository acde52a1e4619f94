#pragma once

#include <optional>
#include <vector>

#include "ptl/polyalg/multipoly.hpp"

namespace ptl {

template <class Base>
using SquareMatrix = std::vector<std::vector<Element<Base>>>;

// The larger of two fields when one is a prefix of the other.
template <class Base>
FieldPtr<Base> common_field(const FieldPtr<Base>& a, const FieldPtr<Base>& b) {
    if (a == b || a->contains_prefix(*b)) return a;
    if (b->contains_prefix(*a)) return b;
    throw FieldMismatch();
}

// F o M: variable i is replaced by sum_j M[i][j] * variable j.
template <class Base>
MultiPoly<Base> substitute_linear(const MultiPoly<Base>& F, const SquareMatrix<Base>& M) {
    std::size_t n = F.nvars();
    if (M.size() != n) throw PreconditionError("matrix dimension does not match the variable count");
    for (auto& row : M)
        if (row.size() != n) throw PreconditionError("matrix is not square");
    auto K = common_field(F.field(), M[0][0].field());
    std::vector<MultiPoly<Base>> forms;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename MultiPoly<Base>::Term> t;
        for (std::size_t j = 0; j < n; ++j) {
            if (M[i][j].is_zero()) continue;
            Exponents e{};
            e[j] = 1;
            t.push_back({e, M[i][j].embed(K)});
        }
        forms.push_back(MultiPoly<Base>::from_terms(K, F.vars(), std::move(t), F.order()));
    }
    return F.embed(K).compose(forms);
}

// lambda with F = lambda * G, when it exists.
template <class Base>
std::optional<Element<Base>> proportionality(const MultiPoly<Base>& F, const MultiPoly<Base>& G) {
    if (!(*F.vars() == *G.vars())) throw PreconditionError("inconsistent variable sets");
    if (F.is_zero() && G.is_zero()) throw PreconditionError("proportionality of two zero forms");
    if (G.is_zero()) return std::nullopt;
    auto K = common_field(F.field(), G.field());
    if (F.is_zero()) return Element<Base>::zero(K);
    if (F.size() != G.size()) return std::nullopt;
    auto Fe = F.embed(K);
    auto Ge = G.embed(K);
    if (Fe.order() != Ge.order()) Fe = Fe.with_order(Ge.order());
    auto lambda = Fe.lead_coeff() / Ge.lead_coeff();
    for (std::size_t i = 0; i < Fe.size(); ++i) {
        if (Fe.terms()[i].first != Ge.terms()[i].first) return std::nullopt;
        if (!(Fe.terms()[i].second == lambda * Ge.terms()[i].second)) return std::nullopt;
    }
    return lambda;
}

}  // namespace ptl
