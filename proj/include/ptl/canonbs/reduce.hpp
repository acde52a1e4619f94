#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/canonbs/veronese.hpp"
#include "ptl/cycalg/cyclic.hpp"
#include "ptl/exactfield/finite.hpp"
#include "ptl/io/fixtures.hpp"
#include "ptl/polyalg/smooth.hpp"
#include "ptl/projlin/projmatrix.hpp"

namespace ptl {

// Fixture data for the reduction of the P^9 twist to a plane model over F_q.
struct HasseInputs {
    // 3x3 isomorphism in eta (eta^3 = zeta3) and zeta3.
    std::vector<std::vector<std::string>> phi_rows;
    // Printed plane model in x, y, z, a and zeta3.
    std::string printed_model;
    // Maps generating the automorphism group of C_a, in zeta3.
    std::vector<std::string> group_maps;
    std::size_t group_order = 54;
    // Integer whose cube class in F_q decides the reduction of the cocycle.
    long radicand = 7;
};

// One choice of the image of zeta3 in F_q.
struct ZetaChoiceReport {
    std::string zeta;
    unsigned e = 0;
    // Exponent s with pi(eta) = zeta^s eta, i.e. (q - 1)/3 mod 3.
    unsigned frobenius_shift = 0;
    bool trivial_twist = false;
    bool eta_in_base = false;
    bool extrapolated = false;
    bool model_over_base = false;
    bool printed_proportional = false;
    bool printed_proportional_symbolic = false;
    std::vector<std::string> model_diff;
    bool in_group = false;
    bool matches_companion = false;
    bool matches_printed_companion = false;
    bool cocycle_trivial = false;
    bool smooth = false;
    std::string xi;
    std::optional<MultiPoly<PrimeField>> model;

    // Everything the construction itself guarantees; the printed model is
    // compared separately.
    bool verified() const {
        if (trivial_twist) return true;
        if (eta_in_base) return model_over_base && cocycle_trivial && smooth;
        return model_over_base && in_group && matches_companion && smooth;
    }
};

struct ReductionReport {
    std::uint64_t q = 0;
    std::string a;
    std::size_t group_order = 0;
    std::vector<ZetaChoiceReport> choices;
    std::vector<std::string> lines;

    std::size_t verified_count() const {
        std::size_t n = 0;
        for (auto& c : choices) n += c.verified();
        return n;
    }
    // The choice that verifies, when exactly one does.
    const ZetaChoiceReport* selected() const {
        if (verified_count() != 1) return nullptr;
        for (auto& c : choices)
            if (c.verified()) return &c;
        return nullptr;
    }
    // The unique verified choice, else the first verified one.
    const ZetaChoiceReport* best() const {
        if (auto s = selected()) return s;
        for (auto& c : choices)
            if (c.verified()) return &c;
        return nullptr;
    }
};

namespace detail {

inline Fq reduce_rational(const FqPtr& K, const mpq_class& x) {
    std::uint64_t p = K->characteristic();
    mpz_class P = static_cast<unsigned long>(p);
    mpz_class num = x.get_num() % P, den = x.get_den() % P;
    if (num < 0) num += P;
    if (den == 0) throw PreconditionError("denominator of " + x.get_str() + " vanishes modulo " + std::to_string(p));
    return Fq::from_int(K, num.get_si()) * Fq::from_int(K, den.get_si()).inverse();
}

inline std::optional<Fq> cube_root_in(const Fq& x) {
    auto K = x.field();
    for (mpz_class i = 0; i < K->order(); ++i) {
        auto y = element_at(K, i);
        if (y * y * y == x) return y;
    }
    return std::nullopt;
}

// Sextic of C_a with a symbolic, composed with phi (identity on a).
inline MultiPoly<PrimeField> sextic_pullback(const FqPtr& E, const SquareMatrix<PrimeField>& phi) {
    SquareMatrix<PrimeField> M(4, std::vector<Fq>(4, Fq::zero(E)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) M[i][j] = phi[i][j].embed(E);
    M[3][3] = Fq::one(E);
    return substitute_linear(sextic_form<PrimeField>(E, std::nullopt), M);
}

inline MultiPoly<PrimeField> specialize_plane(const MultiPoly<PrimeField>& G, const Fq& a) {
    auto K = G.field();
    std::vector<MultiPoly<PrimeField>> args;
    for (std::size_t i = 0; i < 3; ++i) args.push_back(MultiPoly<PrimeField>::variable(K, xyz_vars(), i));
    args.push_back(MultiPoly<PrimeField>::constant(a.embed(K), xyz_vars()));
    return G.compose(args);
}

// Scales both forms to coefficient 1 at the leading monomial of `computed`
// and lists the monomials where they disagree.
inline std::vector<std::string> model_diff(const MultiPoly<PrimeField>& computed, const MultiPoly<PrimeField>& printed) {
    std::vector<std::string> out;
    if (computed.is_zero()) return {"computed model is zero"};
    auto m0 = computed.lead_exp();
    auto pc = printed.coefficient(m0);
    if (pc.is_zero()) return {"printed model lacks the leading monomial of the computed one"};
    auto A = computed.scaled(computed.lead_coeff().inverse());
    auto B = printed.scaled(pc.inverse());
    auto D = A - B;
    for (auto& [m, c] : D.terms()) {
        auto mono = MultiPoly<PrimeField>::monomial(Fq::one(A.field()), m, A.vars()).to_string();
        if (mono.rfind("1 * ", 0) == 0) mono = mono.substr(4);
        out.push_back(mono + ": printed " + B.coefficient(m).to_string() + ", computed " + A.coefficient(m).to_string());
    }
    return out;
}

}  // namespace detail

// Reduces the plane model of the twist to F_q and checks it. Every order-3
// element of F_q is tried as the image of zeta3, in enumeration order.
inline ReductionReport reduce_and_verify_fq(const HasseInputs& in, const mpq_class& a, std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
    if (pp->first <= 21) throw PreconditionError("characteristic " + std::to_string(pp->first) + " is not above 21");
    if (q % 3 != 1) throw PreconditionError("q = " + std::to_string(q) + " is not 1 mod 3");
    auto K = make_finite_field(q);
    auto aq = detail::reduce_rational(K, a);
    for (long bad : {-10L, -2L, -1L, 0L, 2L})
        if (aq == Fq::from_int(K, bad))
            throw ExcludedParameter("a reduces to the excluded value " + std::to_string(bad) + " modulo " +
                                    std::to_string(pp->first));

    ReductionReport rep;
    rep.q = q;
    rep.a = a.get_str();
    mpz_class third = (K->order() - 1) / 3;
    auto r7 = Fq::from_int(K, in.radicand).pow(third);
    unsigned s = static_cast<unsigned>(mpz_class(third % 3).get_ui());

    for (auto& zeta : elements_of_order(K, 3)) {
        ZetaChoiceReport ch;
        ch.zeta = zeta.to_string();
        ch.frobenius_shift = s;
        if (r7.is_one()) ch.e = 0;
        else if (r7 == zeta) ch.e = 1;
        else ch.e = 2;
        ch.extrapolated = ch.e == 2;
        std::map<std::string, Fq> zc{{"zeta3", zeta}};

        std::vector<ProjMatrix<PrimeField>> gens;
        for (auto& g : in.group_maps) gens.emplace_back(parse_map(K, g, zc));
        auto grp = group_closure(gens, 10 * in.group_order);
        rep.group_order = grp.order();

        if (ch.e == 0) {
            ch.trivial_twist = true;
            rep.choices.push_back(std::move(ch));
            continue;
        }

        FqPtr E;
        std::map<std::string, Fq> consts;
        if (auto root = detail::cube_root_in(zeta)) {
            E = K;
            ch.eta_in_base = true;
            consts["eta"] = *root;
        } else {
            IrreducibilityWitness w;
            w.kind = IrreducibilityWitness::Kind::rabin;
            E = adjoin(K, "eta", {-zeta, Fq::zero(K), Fq::zero(K), Fq::one(K)}, w);
        }
        consts["zeta3"] = zeta.embed(E);
        SquareMatrix<PrimeField> phi;
        for (auto& row : in.phi_rows) {
            std::vector<Fq> r;
            for (auto& s_ : row) r.push_back(parse_element(E, s_, consts));
            phi.push_back(std::move(r));
        }
        if (phi.size() != 3 || phi[0].size() != 3) throw FixtureError("eta-matrix must be 3x3");
        if (determinant(phi).is_zero()) throw PreconditionError("eta-matrix is singular");

        auto G = detail::sextic_pullback(E, phi);
        G = G.scaled(G.lead_coeff().inverse());
        auto Gk = G.restrict_to(K);
        ch.model_over_base = Gk.has_value();

        auto printed = parse_poly(K, plane_vars(), in.printed_model, zc);
        if (Gk) {
            ch.model_diff = detail::model_diff(*Gk, printed);
            ch.printed_proportional_symbolic = ch.model_diff.empty();
            auto Ga = detail::specialize_plane(*Gk, aq);
            auto Pa = detail::specialize_plane(printed, aq);
            ch.printed_proportional = !Pa.is_zero() && Ga.scaled(Ga.lead_coeff().inverse()) ==
                                                           Pa.scaled(Pa.lead_coeff().inverse());
            ch.model = Ga.scaled(Ga.lead_coeff().inverse());
            ch.smooth = is_smooth(PlaneCurve<PrimeField>(*ch.model)).smooth;
        }

        ProjMatrix<PrimeField> P(phi);
        auto pi = frobenius(E, K->depth());
        auto xi = P * galois_on_matrix(pi, P).inverse();
        ch.xi = xi.to_string();
        ch.cocycle_trivial = xi == ProjMatrix<PrimeField>::identity(E, 3);
        if (auto xik = xi.restrict_to(K)) {
            ch.in_group = grp.contains(*xik);
            auto C = companion_matrix(zeta);
            ch.matches_companion = *xik == C.pow(ch.e);
            ch.matches_printed_companion = *xik == companion_matrix(zeta.pow(ch.e)).pow(ch.e);
        }
        rep.choices.push_back(std::move(ch));
    }

    rep.lines.push_back("q = " + std::to_string(q) + ", a = " + rep.a + ", reduced group order " +
                        std::to_string(rep.group_order));
    for (auto& ch : rep.choices) {
        std::string l = "zeta3 -> " + ch.zeta + ": e = " + std::to_string(ch.e);
        if (ch.trivial_twist) {
            l += ", " + std::to_string(in.radicand) + " is a cube, trivial twist";
        } else {
            l += std::string(ch.eta_in_base ? ", eta in F_q" : ", eta of degree 3") +
                 ", model over F_q: " + (ch.model_over_base ? "yes" : "no") +
                 ", cocycle " + (ch.cocycle_trivial ? "trivial" : "nontrivial") +
                 ", in group: " + (ch.in_group ? "yes" : "no") +
                 ", companion^e: " + (ch.matches_companion ? "yes" : "no") +
                 ", smooth: " + (ch.smooth ? "yes" : "no") +
                 ", proportional to printed: " + (ch.printed_proportional ? "yes" : "no");
            if (ch.extrapolated) l += " (e = 2 extrapolated)";
        }
        l += ch.verified() ? " [verified]" : " [not verified]";
        rep.lines.push_back(l);
        for (auto& d : ch.model_diff) rep.lines.push_back("  differs at " + d);
    }
    return rep;
}

}  // namespace ptl
