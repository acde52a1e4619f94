#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ptl/polyalg/multipoly.hpp"

namespace ptl {

template <class Base>
struct GroebnerBasis {
    std::vector<MultiPoly<Base>> polys;
    TermOrder order = TermOrder::grevlex;
    bool reduced = false;
};

// Full remainder of f on division by the polynomials in G.
template <class Base>
MultiPoly<Base> reduce_by(MultiPoly<Base> f, const std::vector<MultiPoly<Base>>& G) {
    using P = MultiPoly<Base>;
    P rem(f.field(), f.vars(), f.order());
    std::size_t n = f.nvars();
    std::vector<typename P::Term> rest;
    while (!f.is_zero()) {
        const auto& [m, c] = f.terms().front();
        const P* div = nullptr;
        for (auto& g : G)
            if (!g.is_zero() && divides(g.lead_exp(), m, n)) {
                div = &g;
                break;
            }
        if (div) {
            f = f - div->mul_term(c / div->lead_coeff(), m - div->lead_exp());
        } else {
            rest.push_back(f.terms().front());
            f = f - P::monomial(c, m, f.vars(), f.order());
        }
    }
    return P::from_terms(rem.field(), rem.vars(), std::move(rest), rem.order());
}

template <class Base>
MultiPoly<Base> normal_form(const MultiPoly<Base>& f, const GroebnerBasis<Base>& B) {
    return reduce_by(f.order() == B.order ? f : f.with_order(B.order), B.polys);
}

template <class Base>
MultiPoly<Base> s_polynomial(const MultiPoly<Base>& f, const MultiPoly<Base>& g) {
    auto l = lcm(f.lead_exp(), g.lead_exp());
    return f.mul_term(g.lead_coeff(), l - f.lead_exp()) - g.mul_term(f.lead_coeff(), l - g.lead_exp());
}

// Buchberger's algorithm with normal selection and the product and chain
// criteria. The output is reduced and monic, sorted by leading monomial.
template <class Base>
GroebnerBasis<Base> buchberger(std::vector<MultiPoly<Base>> gens, TermOrder ord = TermOrder::grevlex,
                               bool reduce = true) {
    using P = MultiPoly<Base>;
    if (gens.empty()) throw PreconditionError("empty generator list");
    for (auto& g : gens) gens.front().check(g);
    std::size_t n = gens.front().nvars();
    std::vector<P> G;
    for (auto& g : gens) {
        auto h = g.with_order(ord);
        if (!h.is_zero()) G.push_back(h.monic());
    }
    GroebnerBasis<Base> out;
    out.order = ord;
    if (G.empty()) {
        out.reduced = true;
        return out;
    }
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
    while (!pending.empty()) {
        auto best = pending.begin();
        Exponents bl = lcm(G[best->first].lead_exp(), G[best->second].lead_exp());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = lcm(G[it->first].lead_exp(), G[it->second].lead_exp());
            if (compare_monomials(l, bl, n, ord) < 0) {
                best = it;
                bl = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        const auto& li = G[i].lead_exp();
        const auto& lj = G[j].lead_exp();
        bool coprime = true;
        for (std::size_t v = 0; v < n; ++v)
            if (li[v] && lj[v]) coprime = false;
        if (coprime) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (divides(G[k].lead_exp(), bl, n) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
        }
        if (chain) continue;
        auto r = reduce_by(s_polynomial(G[i], G[j]), G);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pending.insert({k, G.size() - 1});
    }
    if (reduce) {
        std::vector<P> minimal;
        for (std::size_t a = 0; a < G.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < G.size() && !drop; ++b) {
                if (a == b) continue;
                if (divides(G[b].lead_exp(), G[a].lead_exp(), n) &&
                    (G[b].lead_exp() != G[a].lead_exp() || b < a))
                    drop = true;
            }
            if (!drop) minimal.push_back(G[a]);
        }
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<P> others;
            for (std::size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(minimal[b]);
            minimal[a] = reduce_by(minimal[a], others).monic();
        }
        std::sort(minimal.begin(), minimal.end(), [n, ord](const P& a, const P& b) {
            return compare_monomials(a.lead_exp(), b.lead_exp(), n, ord) < 0;
        });
        G = std::move(minimal);
        out.reduced = true;
    }
    out.polys = std::move(G);
    return out;
}

// True when every S-pair of B reduces to zero.
template <class Base>
bool is_groebner(const GroebnerBasis<Base>& B) {
    for (std::size_t j = 0; j < B.polys.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!reduce_by(s_polynomial(B.polys[i], B.polys[j]), B.polys).is_zero()) return false;
    return true;
}

template <class Base>
bool ideal_contains(const GroebnerBasis<Base>& B, const std::vector<MultiPoly<Base>>& fs) {
    for (auto& f : fs)
        if (!normal_form(f, B).is_zero()) return false;
    return true;
}

// Ideal equality through Groebner bases of both sides.
template <class Base>
bool ideal_equal(const std::vector<MultiPoly<Base>>& A, const std::vector<MultiPoly<Base>>& B) {
    auto GA = buchberger(A), GB = buchberger(B);
    return ideal_contains(GB, A) && ideal_contains(GA, B);
}

}  // namespace ptl
