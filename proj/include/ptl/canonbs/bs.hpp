#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptl/canonbs/veronese.hpp"
#include "ptl/exactfield/galois.hpp"
#include "ptl/polyalg/groebner.hpp"
#include "ptl/projlin/projmatrix.hpp"

namespace ptl {

// Phi on w1..w10, extended by the identity on the parameter a.
template <class Base>
SquareMatrix<Base> pad_parameter(const SquareMatrix<Base>& phi) {
    if (phi.size() != 10) throw PreconditionError("expected a 10x10 matrix");
    auto K = phi[0][0].field();
    for (auto& row : phi) {
        if (row.size() != 10) throw PreconditionError("expected a 10x10 matrix");
        for (auto& e : row) K = common_field(K, e.field());
    }
    SquareMatrix<Base> M(11, std::vector<Element<Base>>(11, Element<Base>::zero(K)));
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) M[i][j] = phi[i][j].embed(K);
    M[10][10] = Element<Base>::one(K);
    return M;
}

template <class Base>
QuadricSystem<Base> substitute_p9(const QuadricSystem<Base>& S, const SquareMatrix<Base>& phi,
                                  Provenance tag = Provenance::bs_generated) {
    auto M = pad_parameter(phi);
    if (determinant(M).is_zero()) throw PreconditionError("substitution matrix is singular");
    QuadricSystem<Base> out{M[0][0].field(), {}, {}, tag};
    for (std::size_t i = 0; i < S.size(); ++i) out.add(substitute_linear(S.forms[i], M), S.labels[i]);
    return out;
}

// g = f0 + c f1 + c^2 f2 along the top level c of its coefficient field,
// with the f_i over the parent field.
template <class Base>
std::array<MultiPoly<Base>, 3> descent_split(const MultiPoly<Base>& g) {
    auto L = g.field();
    if (L->depth() == 0 || L->degree() != 3) throw PreconditionError("coefficients are not in a cubic top level");
    auto k = L->parent();
    std::array<std::vector<typename MultiPoly<Base>::Term>, 3> parts;
    for (auto& [m, c] : g.terms())
        for (std::size_t j = 0; j < 3; ++j) {
            auto cj = c.top_coeff(j);
            if (!cj.is_zero()) parts[j].push_back({m, cj});
        }
    std::array<MultiPoly<Base>, 3> out;
    for (std::size_t j = 0; j < 3; ++j)
        out[j] = MultiPoly<Base>::from_terms(k, g.vars(), std::move(parts[j]), g.order());
    return out;
}

// f0 + (zeta^j c) f1 + (zeta^j c)^2 f2.
template <class Base>
MultiPoly<Base> descent_reassemble(const std::array<MultiPoly<Base>, 3>& f, const FieldPtr<Base>& L,
                                   const Element<Base>& zeta, unsigned j = 0) {
    auto c = L->generator() * zeta.embed(L).pow(static_cast<long>(j));
    return f[0].embed(L) + f[1].embed(L).scaled(c) + f[2].embed(L).scaled(c * c);
}

struct DescentCheck {
    bool reassembly = false;
    bool ideals_equal = false;
};

// The conjugate reassemblies g0, g1, g2 generate the same ideal as f0, f1,
// f2. For forms of one degree this is equality of their spans, which is
// what `by_span` tests; otherwise Groebner bases are compared.
template <class Base>
DescentCheck check_descent(const MultiPoly<Base>& g, const std::array<MultiPoly<Base>, 3>& f,
                           const Element<Base>& zeta, bool by_span = true) {
    auto L = g.field();
    DescentCheck out;
    out.reassembly = descent_reassemble(f, L, zeta, 0) == g;
    std::vector<MultiPoly<Base>> gs, fs;
    for (unsigned j = 0; j < 3; ++j) {
        auto gj = descent_reassemble(f, L, zeta, j);
        if (!gj.is_zero()) gs.push_back(gj);
    }
    for (auto& fi : f)
        if (!fi.is_zero()) fs.push_back(fi.embed(L));
    if (gs.empty() || fs.empty()) {
        out.ideals_equal = gs.empty() && fs.empty();
        return out;
    }
    if (by_span) {
        QuadricCoords qc(2);
        auto a = qc.span(gs, L), b = qc.span(fs, L);
        out.ideals_equal = a.rank() == b.rank() && a.contains_space(b);
    } else {
        out.ideals_equal = ideal_equal(gs, fs);
    }
    return out;
}

// Fixture inputs for the P^9 pipeline. L = k(c) with c^3 in k and k
// containing a primitive cube root of unity `zeta`.
template <class Base>
struct BsInputs {
    FieldPtr<Base> L;
    Element<Base> zeta;
    SquareMatrix<Base> phi;
    std::vector<MultiPoly<Base>> printed;
    std::vector<std::string> printed_labels;
    std::optional<MultiPoly<Base>> printed_extra;
};

struct BsReport {
    std::size_t generated_dim = 0;
    std::size_t printed_dim = 0;
    std::size_t union_dim = 0;
    std::vector<std::string> printed_outside;
    bool spans_equal = false;
    bool descent_ok = true;
    bool galois_closed = false;
    bool pullback_ok = true;
    std::vector<std::string> lines;
};

template <class Base>
struct BsResult {
    QuadricSystem<Base> system;
    BsReport report;
};

namespace detail {

template <class Base>
GaloisMap<Base> cube_root_shift(const FieldPtr<Base>& L, const Element<Base>& zeta) {
    std::vector<Element<Base>> im;
    for (std::size_t l = 1; l < L->depth(); ++l) im.push_back(L->generator(l));
    im.push_back(zeta.embed(L) * L->generator());
    return GaloisMap<Base>(L, im, 3, "sigma");
}

template <class Base>
MultiPoly<Base> apply_galois(const GaloisMap<Base>& s, const MultiPoly<Base>& f) {
    return f.map_coeffs([&](const Element<Base>& c) { return s(c); }, s.field());
}

// Descends every member of S (over L) and collects the nonzero parts.
template <class Base>
QuadricSystem<Base> descend_all(const QuadricSystem<Base>& S, const Element<Base>& zeta, bool& ok) {
    auto k = S.field->parent();
    QuadricSystem<Base> out{k, {}, {}, S.provenance};
    for (std::size_t i = 0; i < S.size(); ++i) {
        auto f = descent_split(S.forms[i]);
        auto chk = check_descent(S.forms[i], f, zeta);
        ok = ok && chk.reassembly && chk.ideals_equal;
        for (std::size_t j = 0; j < 3; ++j)
            if (!f[j].is_zero()) out.add(f[j], S.labels[i] + "." + std::to_string(j));
    }
    return out;
}

}  // namespace detail

// Substitutes phi into the Veronese quadrics, descends to k, and compares
// the span with the printed list.
template <class Base>
BsResult<Base> build_bs(const BsInputs<Base>& in) {
    auto L = in.L;
    auto k = L->parent();
    BsResult<Base> res;
    auto& rep = res.report;
    auto subst = substitute_p9(veronese_quadrics(k), in.phi);
    if (!subst.field->same_as(*L)) {
        // phi may have entries in k only (control runs); lift to L.
        for (auto& f : subst.forms) f = f.embed(L);
        subst.field = L;
    }
    res.system = detail::descend_all(subst, in.zeta, rep.descent_ok);
    res.system.provenance = Provenance::bs_generated;

    QuadricCoords qc(0);
    auto gen = qc.span(res.system.forms, k);
    rep.generated_dim = gen.rank();
    rep.lines.push_back("generated quadrics: " + std::to_string(res.system.size()) + ", span dimension " +
                        std::to_string(rep.generated_dim));

    auto sigma = detail::cube_root_shift(L, in.zeta);
    std::vector<MultiPoly<Base>> orbit;
    for (auto& f : subst.forms) {
        orbit.push_back(f);
        orbit.push_back(detail::apply_galois(sigma, f));
        orbit.push_back(detail::apply_galois(sigma, detail::apply_galois(sigma, f)));
    }
    auto orbit_span = qc.span(orbit, L), genL = qc.span(res.system.forms, L);
    rep.galois_closed = orbit_span.rank() == genL.rank() && orbit_span.contains_space(genL);
    rep.lines.push_back(std::string("span of sigma-conjugates equals the descended span: ") +
                        (rep.galois_closed ? "yes" : "no"));

    auto inv = pad_parameter(mat_inverse(in.phi));
    for (std::size_t i = 0; i < res.system.size(); ++i) {
        auto back = veronese_pullback(substitute_linear(res.system.forms[i].embed(L), inv));
        if (!back.is_zero()) {
            rep.pullback_ok = false;
            rep.lines.push_back(res.system.labels[i] + " does not vanish on the Veronese image after phi^-1");
        }
    }

    if (!in.printed.empty()) {
        auto pr = qc.span(in.printed, k);
        rep.printed_dim = pr.rank();
        auto uni = qc.span(res.system.forms, k);
        for (auto& f : in.printed) uni.insert(qc.vec(f, k));
        rep.union_dim = uni.rank();
        for (std::size_t i = 0; i < in.printed.size(); ++i)
            if (!gen.contains(qc.vec(in.printed[i], k)))
                rep.printed_outside.push_back(i < in.printed_labels.size() ? in.printed_labels[i]
                                                                           : std::to_string(i + 1));
        rep.spans_equal = rep.generated_dim == rep.printed_dim && rep.union_dim == rep.generated_dim;
        rep.lines.push_back("printed equations: " + std::to_string(in.printed.size()) + ", span dimension " +
                            std::to_string(rep.printed_dim) + "; union dimension " + std::to_string(rep.union_dim));
        std::string out;
        for (auto& s : rep.printed_outside) out += (out.empty() ? "" : ", ") + s;
        rep.lines.push_back("printed equations outside the generated span: " + (out.empty() ? "none" : out));
        rep.lines.push_back(std::string("spans equal: ") + (rep.spans_equal ? "yes" : "no"));
    }
    return res;
}

struct TwistReport {
    std::size_t extra_components = 0;
    bool matches_printed = false;
    std::vector<std::string> lines;
};

template <class Base>
struct TwistResult {
    QuadricSystem<Base> system;
    BsReport bs;
    TwistReport report;
};

// build_bs plus the descended image of the degree relation. The printed
// extra equation is compared modulo the surface's quadrics (and their
// multiples by a when a is symbolic).
template <class Base>
TwistResult<Base> build_twist_p9(const BsInputs<Base>& in, const std::optional<Element<Base>>& a) {
    auto k = in.L->parent();
    if (a) check_parameter(*a);
    auto bs = build_bs(in);
    TwistResult<Base> res;
    res.bs = bs.report;
    res.system = bs.system;
    res.system.provenance = Provenance::twist;
    QuadricSystem<Base> rel{k, {}, {}, Provenance::twist};
    rel.add(degree_relation(k, a), "D");
    auto subst = substitute_p9(rel, in.phi);
    if (!subst.field->same_as(*in.L)) {
        for (auto& f : subst.forms) f = f.embed(in.L);
        subst.field = in.L;
    }
    bool ok = true;
    auto extra = detail::descend_all(subst, in.zeta, ok);
    res.report.extra_components = extra.size();
    for (std::size_t i = 0; i < extra.size(); ++i) res.system.add(extra.forms[i], extra.labels[i]);

    std::vector<MultiPoly<Base>> base = bs.system.forms;
    if (!a) {
        auto av = p9_parse(k, "a");
        for (auto& f : bs.system.forms) base.push_back(f * av);
    }
    QuadricCoords qc(a ? 0 : 1);
    auto lhs = qc.span(base, k), rhs = lhs;
    for (auto& f : extra.forms) lhs.insert(qc.vec(f, k));
    if (in.printed_extra) {
        auto pe = *in.printed_extra;
        if (a) {
            std::vector<MultiPoly<Base>> args;
            for (std::size_t i = 0; i < 10; ++i) args.push_back(MultiPoly<Base>::variable(k, p9_vars(), i));
            args.push_back(MultiPoly<Base>::constant(a->embed(k), p9_vars()));
            pe = pe.embed(k).compose(args);
        }
        rhs.insert(qc.vec(pe, k));
        res.report.matches_printed = lhs.rank() == rhs.rank() && lhs.contains_space(rhs);
    }
    for (std::size_t i = 0; i < extra.size(); ++i) {
        bool inside = qc.span(base, k).contains(qc.vec(extra.forms[i], k));
        res.report.lines.push_back("component " + extra.labels[i] + ": " +
                                   (inside ? "in the surface span" : "new") + ": " + extra.forms[i].to_string());
    }
    res.report.lines.push_back(std::string("extra equation matches the printed form modulo the surface: ") +
                               (res.report.matches_printed ? "yes" : "no"));
    return res;
}

}  // namespace ptl
