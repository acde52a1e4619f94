#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptl/io/expr.hpp"
#include "ptl/polyalg/linspan.hpp"

namespace ptl {

// Coordinates w1..w10 of P^9 followed by the curve parameter a, which is
// an ordinary variable when the parameter is kept symbolic.
inline const VarsPtr& p9_vars() {
    static const VarsPtr v = make_vars({"w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9", "w10", "a"});
    return v;
}
inline const VarsPtr& plane_vars() {
    static const VarsPtr v = make_vars({"x", "y", "z", "a"});
    return v;
}
inline constexpr std::size_t kParamVar = 10;

struct VeroneseFrame {
    // Exponents of x, y, z in w1..w10.
    static constexpr std::array<std::array<unsigned, 3>, 10> exponents{{
        {1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0},
        {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2},
    }};
};

template <class Base>
std::array<Element<Base>, 10> veronese_embed(const std::array<Element<Base>, 3>& p) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) throw PreconditionError("zero triple");
    std::array<Element<Base>, 10> out;
    for (std::size_t i = 0; i < 10; ++i) {
        auto& e = VeroneseFrame::exponents[i];
        out[i] = p[0].pow(static_cast<long>(e[0])) * p[1].pow(static_cast<long>(e[1])) *
                 p[2].pow(static_cast<long>(e[2]));
    }
    return out;
}

// The cubic monomials in x, y, z (variables of plane_vars()).
template <class Base>
std::vector<MultiPoly<Base>> veronese_forms(const FieldPtr<Base>& K) {
    std::vector<MultiPoly<Base>> out;
    for (auto& e : VeroneseFrame::exponents) {
        Exponents x{};
        for (std::size_t i = 0; i < 3; ++i) x[i] = static_cast<std::uint16_t>(e[i]);
        out.push_back(MultiPoly<Base>::monomial(Element<Base>::one(K), x, plane_vars()));
    }
    return out;
}

enum class Provenance { veronese, bs_generated, bs_paper, twist };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::veronese: return "veronese";
        case Provenance::bs_generated: return "bs-generated";
        case Provenance::bs_paper: return "bs-paper";
        default: return "twist";
    }
}

// Forms in p9_vars() of degree 2 in w1..w10; the parameter a may occur.
template <class Base>
struct QuadricSystem {
    FieldPtr<Base> field;
    std::vector<MultiPoly<Base>> forms;
    std::vector<std::string> labels;
    Provenance provenance = Provenance::veronese;

    void add(MultiPoly<Base> f, std::string label) {
        for (auto& [m, c] : f.terms()) {
            unsigned d = 0;
            for (std::size_t i = 0; i < 10; ++i) d += m[i];
            if (d != 2) throw PreconditionError(label + " is not a quadric in w1..w10");
        }
        forms.push_back(std::move(f));
        labels.push_back(std::move(label));
    }
    std::size_t size() const { return forms.size(); }
};

// Coordinates for forms of degree 2 in w1..w10 and degree <= max_a in a.
class QuadricCoords {
  public:
    explicit QuadricCoords(unsigned max_a = 1) : w_(10, 2), max_a_(max_a) {}
    std::size_t size() const { return w_.size() * (max_a_ + 1); }
    std::size_t at(Exponents e) const {
        unsigned da = e[kParamVar];
        if (da > max_a_) throw PreconditionError("parameter degree exceeds the coordinate range");
        e[kParamVar] = 0;
        return da * w_.size() + w_.at(e);
    }

    template <class Base>
    std::vector<Element<Base>> vec(const MultiPoly<Base>& f, const FieldPtr<Base>& K) const {
        std::vector<Element<Base>> v(size(), Element<Base>::zero(K));
        for (auto& [m, c] : f.terms()) v[at(m)] = c.embed(K);
        return v;
    }
    template <class Base>
    RowSpace<Base> span(const std::vector<MultiPoly<Base>>& fs, const FieldPtr<Base>& K) const {
        RowSpace<Base> rs(K, size());
        for (auto& f : fs) rs.insert(vec(f, K));
        return rs;
    }

  private:
    MonomialIndex w_;
    unsigned max_a_;
};

template <class Base>
MultiPoly<Base> p9_parse(const FieldPtr<Base>& K, const std::string& text) {
    return parse_poly(K, p9_vars(), text);
}

// Parses "lhs = rhs" (or a bare form) into lhs - rhs.
template <class Base>
MultiPoly<Base> parse_equation(const FieldPtr<Base>& K, const VarsPtr& vars, const std::string& text,
                               const std::map<std::string, Element<Base>>& constants = {}) {
    auto eq = text.find('=');
    if (eq == std::string::npos) return parse_poly(K, vars, text, constants);
    if (text.find('=', eq + 1) != std::string::npos) throw ParseError("more than one '=' in equation");
    return parse_poly(K, vars, text.substr(0, eq), constants) - parse_poly(K, vars, text.substr(eq + 1), constants);
}

// The 13 binomial quadrics cutting out the Veronese surface.
template <class Base>
QuadricSystem<Base> veronese_quadrics(const FieldPtr<Base>& K) {
    static const char* const eqs[13] = {
        "w4*w9 - w7^2",  "w4*w6 - w10^2", "w4*w1 - w7*w10", "w4*w5 - w9*w10", "w4*w8 - w6*w7",
        "w4*w2 - w7*w9", "w4*w3 - w6*w10", "w3*w10 - w6^2", "w2*w7 - w9^2",  "w6*w9 - w1^2",
        "w3*w5 - w8^2",  "w2*w3 - w5*w8",  "w2*w8 - w5^2",
    };
    QuadricSystem<Base> S{K, {}, {}, Provenance::veronese};
    for (std::size_t i = 0; i < 13; ++i) S.add(p9_parse(K, eqs[i]), "V" + std::to_string(i + 1));
    return S;
}

// w2^2 + w3^2 + w4^2 + a (w5 w8 + w6 w10 + w7 w9); symbolic when a is absent.
template <class Base>
MultiPoly<Base> degree_relation(const FieldPtr<Base>& K, const std::optional<Element<Base>>& a) {
    auto rel = p9_parse(K, "w2^2 + w3^2 + w4^2");
    auto mix = p9_parse(K, "w5*w8 + w6*w10 + w7*w9");
    if (a) return rel + mix.scaled(a->embed(K));
    return rel + mix * p9_parse(K, "a");
}

// x^6 + y^6 + z^6 + a (x^3 y^3 + y^3 z^3 + x^3 z^3) in plane_vars().
template <class Base>
MultiPoly<Base> sextic_form(const FieldPtr<Base>& K, const std::optional<Element<Base>>& a) {
    auto base = parse_poly(K, plane_vars(), "x^6 + y^6 + z^6");
    auto mix = parse_poly(K, plane_vars(), "x^3*y^3 + y^3*z^3 + x^3*z^3");
    if (a) return base + mix.scaled(a->embed(K));
    return base + mix * parse_poly(K, plane_vars(), "a");
}

struct ExcludedParameter : PreconditionError {
    using PreconditionError::PreconditionError;
};

template <class Base>
void check_parameter(const Element<Base>& a) {
    for (long bad : {-10L, -2L, -1L, 0L, 2L})
        if (a == Element<Base>::from_int(a.field(), bad)) {
            std::string msg = "a = " + std::to_string(bad) + " is excluded";
            if (bad == 2) msg += ": the sextic is (x^3 + y^3 + z^3)^2, singular along a cubic";
            throw ExcludedParameter(msg);
        }
}

// The 13 Veronese quadrics followed by the degree relation (label "D").
template <class Base>
QuadricSystem<Base> canonical_ideal(const FieldPtr<Base>& K, const std::optional<Element<Base>>& a) {
    if (a) check_parameter(*a);
    auto S = veronese_quadrics(K);
    S.add(degree_relation(K, a), "D");
    return S;
}

// Substitutes the Veronese monomials for w1..w10; a is kept.
template <class Base>
MultiPoly<Base> veronese_pullback(const MultiPoly<Base>& f) {
    auto args = veronese_forms(f.field());
    args.push_back(parse_poly(f.field(), plane_vars(), "a"));
    return f.compose(args);
}

struct CanonicalReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// All forms but the last pull back to 0; the last pulls back to the sextic.
template <class Base>
CanonicalReport verify_canonical(const QuadricSystem<Base>& S, const std::optional<Element<Base>>& a) {
    CanonicalReport rep;
    if (S.size() == 0) throw PreconditionError("empty system");
    for (std::size_t i = 0; i + 1 < S.size(); ++i)
        if (!veronese_pullback(S.forms[i]).is_zero()) {
            rep.ok = false;
            rep.failures.push_back(S.labels[i] + " does not vanish on the Veronese surface");
        }
    auto last = veronese_pullback(S.forms.back());
    if (!(last == sextic_form(S.field, a).embed(last.field()))) {
        rep.ok = false;
        rep.failures.push_back(S.labels.back() + " does not pull back to the sextic");
    }
    return rep;
}

}  // namespace ptl
