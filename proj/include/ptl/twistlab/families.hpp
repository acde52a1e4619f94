#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ptl/autgrp/automorphism.hpp"
#include "ptl/autgrp/diagonal.hpp"
#include "ptl/exactfield/finite.hpp"
#include "ptl/polyalg/smooth.hpp"
#include "ptl/twistlab/h1.hpp"

namespace ptl {

// first:  a X^d + Y^d + b X Z^(d-1)        (cyclic diagonal Aut of order d(d-1))
// second: X^d + a Y^(d-1) Z + b X Z^(d-1)  (cyclic diagonal Aut of order (d-1)^2)
enum class Family { first = 1, second = 2 };

template <class Base>
MultiPoly<Base> family_form(const FieldPtr<Base>& K, unsigned d, Family fam, const Element<Base>& a,
                            const Element<Base>& b) {
    auto V = make_vars({"X", "Y", "Z"});
    using P = MultiPoly<Base>;
    auto mono = [&](const Element<Base>& c, unsigned x, unsigned y, unsigned z) {
        Exponents e{};
        e[0] = static_cast<std::uint16_t>(x);
        e[1] = static_cast<std::uint16_t>(y);
        e[2] = static_cast<std::uint16_t>(z);
        return P::monomial(c, e, V);
    };
    auto one = Element<Base>::one(K);
    if (fam == Family::first) return mono(a, d, 0, 0) + mono(one, 0, d, 0) + mono(b, 1, 0, d - 1);
    return mono(one, d, 0, 0) + mono(a, 0, d - 1, 1) + mono(b, 1, 0, d - 1);
}

struct FamilyClass {
    std::size_t id = 0;
    Fq a, b;
    std::size_t size = 0;
    std::string equation;
    SmoothCertificate smooth;
    bool trivial = false;
    // Contains a pair with both parameters outside the relevant power classes.
    bool literal_member = false;
};

struct FamilyClassReport {
    unsigned d = 0;
    std::uint64_t q = 0;
    Family family = Family::first;
    std::vector<FamilyClass> classes;
    // Class count under the relation exactly as printed (see README).
    std::size_t printed_relation_count = 0;
    std::size_t literal_count = 0;

    std::size_t count() const { return classes.size(); }
    std::size_t nontrivial_count() const { return classes.size() - 1; }
};

inline void check_family_characteristic(unsigned d, std::uint64_t q) {
    if (d < 4) throw PreconditionError("degree must be at least 4");
    auto pp = prime_power(q);
    if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
    std::uint64_t bound = static_cast<std::uint64_t>(d - 1) * (d - 2) + 1;
    if (pp->first <= bound)
        throw PreconditionError("characteristic " + std::to_string(pp->first) + " must exceed " +
                                std::to_string(bound));
}

namespace detail {

struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

// Classes of parameter pairs (a, b) in (F_q^*)^2 up to F_q-rational diagonal
// changes of coordinates, found by substituting diag(g,1,1), diag(1,g,1),
// diag(1,1,g) for a primitive g and renormalizing.
inline FamilyClassReport family_classes_fq(unsigned d, std::uint64_t q, Family fam) {
    check_family_characteristic(d, q);
    auto K = make_finite_field(q);
    std::vector<Fq> units;
    std::map<Fq, std::size_t> index;
    for (mpz_class i = 1; i < K->order(); ++i) {
        index.emplace(element_at(K, i), units.size());
        units.push_back(element_at(K, i));
    }
    std::size_t m = units.size();
    Fq g = units.front();
    for (auto& u : units)
        if (element_order(u) == m) {
            g = u;
            break;
        }
    auto node = [&](std::size_t ia, std::size_t ib) { return ia * m + ib; };
    auto one = Fq::one(K), zero = Fq::zero(K);
    std::vector<SquareMatrix<PrimeField>> moves;
    for (std::size_t k = 0; k < 3; ++k) {
        SquareMatrix<PrimeField> D(3, std::vector<Fq>(3, zero));
        for (std::size_t i = 0; i < 3; ++i) D[i][i] = i == k ? g : one;
        moves.push_back(D);
    }
    Exponents ea{}, eb{}, en{};
    if (fam == Family::first) {
        ea[0] = static_cast<std::uint16_t>(d);
        en[1] = static_cast<std::uint16_t>(d);
    } else {
        ea[1] = static_cast<std::uint16_t>(d - 1);
        ea[2] = 1;
        en[0] = static_cast<std::uint16_t>(d);
    }
    eb[0] = 1;
    eb[2] = static_cast<std::uint16_t>(d - 1);

    detail::UnionFind uf(m * m), printed(m * m);
    for (std::size_t ia = 0; ia < m; ++ia)
        for (std::size_t ib = 0; ib < m; ++ib) {
            auto F = family_form(K, d, fam, units[ia], units[ib]);
            for (auto& D : moves) {
                auto G = substitute_linear(F, D);
                auto s = G.coefficient(en).inverse();
                uf.unite(node(ia, ib), node(index.at(G.coefficient(ea) * s), index.at(G.coefficient(eb) * s)));
            }
            // The relation as printed, with (q, q') = (g, 1) and (1, g).
            const Fq& a = units[ia];
            const Fq& b = units[ib];
            if (fam == Family::first) {
                printed.unite(node(ia, ib), node(index.at(g.pow(static_cast<long>(d)) * a), index.at(g * b)));
                printed.unite(node(ia, ib), node(ia, index.at(g.pow(static_cast<long>(d - 1)) * b)));
            } else {
                auto gd1 = g.pow(static_cast<long>(d - 1));
                printed.unite(node(ia, ib), node(index.at(gd1 * a), index.at(gd1 * b)));
                printed.unite(node(ia, ib), node(index.at(g * a), ib));
            }
        }

    FamilyClassReport rep;
    rep.d = d;
    rep.q = q;
    rep.family = fam;
    std::map<std::size_t, std::size_t> slot;
    std::size_t trivial_root = uf.find(node(index.at(one), index.at(one)));
    unsigned pa = fam == Family::first ? d : d - 1, pb = d - 1;
    for (std::size_t ia = 0; ia < m; ++ia)
        for (std::size_t ib = 0; ib < m; ++ib) {
            std::size_t r = uf.find(node(ia, ib));
            auto it = slot.find(r);
            if (it == slot.end()) {
                it = slot.emplace(r, rep.classes.size()).first;
                FamilyClass c;
                c.id = rep.classes.size() + 1;
                c.a = units[ia];
                c.b = units[ib];
                c.trivial = r == trivial_root;
                rep.classes.push_back(c);
            }
            auto& c = rep.classes[it->second];
            ++c.size;
            if (!nth_power_class(units[ia], pa) && !nth_power_class(units[ib], pb)) c.literal_member = true;
        }
    std::set<std::size_t> proots;
    for (std::size_t x = 0; x < m * m; ++x) proots.insert(printed.find(x));
    rep.printed_relation_count = proots.size();
    for (auto& c : rep.classes) {
        auto F = family_form(K, d, fam, c.a, c.b);
        c.equation = F.to_string();
        c.smooth = is_smooth(PlaneCurve<PrimeField>(F));
        rep.literal_count += c.literal_member;
    }
    return rep;
}

struct FamilyH1 {
    DiagonalAutoSet diagonal;
    std::size_t extension_degree = 1;
    std::size_t group_order = 0;
    H1Result h1;
};

// Frobenius twisted-conjugacy classes of the diagonal automorphism group of
// the base member (a = b = 1), realized over F_q(zeta_n).
inline FamilyH1 family_h1_fq(unsigned d, std::uint64_t q, Family fam) {
    check_family_characteristic(d, q);
    auto K = make_finite_field(q);
    auto one = Fq::one(K);
    PlaneCurve<PrimeField> C(family_form(K, d, fam, one, one));
    FamilyH1 out;
    out.diagonal = enumerate_diagonal_autos(C);
    auto [L, z] = cyclotomic_extension(K, out.diagonal.n);
    out.extension_degree = L->dimension() / K->dimension();
    PlaneCurve<PrimeField> CL(C.form().embed(L));
    std::vector<ProjMatrix<PrimeField>> gens;
    for (auto [a, b] : out.diagonal.generators) {
        auto M = ProjMatrix<PrimeField>::diagonal({Fq::one(L), z.pow(static_cast<long>(a)), z.pow(static_cast<long>(b))});
        if (!is_automorphism(CL, M)) throw Error("diagonal solution is not an automorphism");
        gens.push_back(M);
    }
    auto A = group_closure(gens, 10000, L, 3);
    out.group_order = A.order();
    auto frob = frobenius(L, K->depth());
    out.h1 = h1_frobenius<PrimeField>(A, [&](const ProjMatrix<PrimeField>& x) { return galois_on_matrix(frob, x); });
    return out;
}

}  // namespace ptl
