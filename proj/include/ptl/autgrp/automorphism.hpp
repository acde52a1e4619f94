#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/polyalg/curve.hpp"
#include "ptl/projlin/projmatrix.hpp"

namespace ptl {

// lambda with F o M = lambda F when M preserves the curve.
template <class Base>
std::optional<Element<Base>> is_automorphism(const PlaneCurve<Base>& C, const ProjMatrix<Base>& M) {
    if (M.dim() != 3) throw PreconditionError("plane curve automorphisms are 3x3");
    return proportionality(substitute_linear(C.form(), M), C.form());
}

struct GroupOrderReport {
    bool ok = false;
    std::size_t order = 0;
    std::vector<std::string> failures;
};

template <class Base>
GroupOrderReport verify_group_order(const PlaneCurve<Base>& C, const std::vector<ProjMatrix<Base>>& gens,
                                    std::size_t claimed, std::size_t cap = 10000) {
    GroupOrderReport rep;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!is_automorphism(C, gens[i])) rep.failures.push_back("generator " + std::to_string(i + 1) + " " +
                                                                  gens[i].to_string() + " is not an automorphism");
    if (!rep.failures.empty()) return rep;
    try {
        auto G = group_closure(gens, cap, C.field(), 3);
        rep.order = G.order();
    } catch (const GroupCapExceeded& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    if (rep.order != claimed)
        rep.failures.push_back("closure has order " + std::to_string(rep.order) + ", claimed " +
                               std::to_string(claimed));
    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace ptl
