#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "ptl/exactfield/residue.hpp"
#include "ptl/polyalg/curve.hpp"
#include "ptl/polyalg/groebner.hpp"

namespace ptl {

struct SmoothCertificate {
    bool smooth = false;
    unsigned bound = 0;
    // Least N with v^N in the Jacobian ideal, per variable (0 if not found).
    std::vector<unsigned> exponents;
    std::string corroboration;

    unsigned witnessed_N() const {
        unsigned n = 0;
        for (auto e : exponents) n = std::max(n, e);
        return n;
    }
};

namespace detail {

// Searches P^2(F_p) for a common zero of the partials of a curve reduced
// modulo a degree-one prime; returns a description or "".
inline std::string singular_point_mod(const MultiPoly<Rationals>& F, std::uint64_t p) {
    auto img = find_residue_prime(F.field(), p);
    if (!img) return "";
    auto hom = residue_hom(F.field(), p, *img);
    MultiPoly<PrimeField> Fp(hom.target(), F.vars());
    try {
        Fp = F.template map_to<PrimeField>([&](const Element<Rationals>& c) { return hom(c); }, hom.target());
    } catch (const PreconditionError&) {
        return "";
    }
    if (Fp.degree() != F.degree()) return "";
    std::vector<MultiPoly<PrimeField>> parts{Fp.derivative(0), Fp.derivative(1), Fp.derivative(2)};
    auto K = hom.target();
    auto el = [&](std::uint64_t v) { return Element<PrimeField>::from_int(K, static_cast<long>(v)); };
    auto test = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        std::vector<Element<PrimeField>> pt{el(x), el(y), el(z)};
        for (auto& d : parts)
            if (!d.evaluate(pt).is_zero()) return false;
        return true;
    };
    auto fmt = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return "common zero of the partials at (" + std::to_string(x) + ":" + std::to_string(y) + ":" +
               std::to_string(z) + ") mod " + std::to_string(p);
    };
    if (test(1, 0, 0)) return fmt(1, 0, 0);
    for (std::uint64_t x = 0; x < p; ++x)
        if (test(x, 1, 0)) return fmt(x, 1, 0);
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
            if (test(x, y, 1)) return fmt(x, y, 1);
    return "";
}

}  // namespace detail

// Jacobian criterion: the curve is smooth iff X^N, Y^N, Z^N all lie in the
// ideal of the partials for some N <= bound (default 3(d-1)-2).
template <class Base>
SmoothCertificate is_smooth(const PlaneCurve<Base>& C, unsigned bound = 0) {
    unsigned d = C.degree();
    std::uint64_t ch = C.field()->characteristic();
    if (ch != 0 && d % ch == 0) throw PreconditionError("characteristic divides the degree");
    SmoothCertificate cert;
    cert.bound = bound ? bound : 3 * (d - 1) - 2;
    const auto& F = C.form();
    auto B = buchberger(std::vector<MultiPoly<Base>>{F.derivative(0), F.derivative(1), F.derivative(2)});
    cert.smooth = true;
    for (std::size_t v = 0; v < 3; ++v) {
        unsigned found = 0;
        for (unsigned N = 1; N <= cert.bound && !found; ++N) {
            Exponents e{};
            e[v] = static_cast<std::uint16_t>(N);
            auto m = MultiPoly<Base>::monomial(Element<Base>::one(F.field()), e, F.vars());
            if (normal_form(m, B).is_zero()) found = N;
        }
        cert.exponents.push_back(found);
        if (!found) cert.smooth = false;
    }
    if constexpr (std::is_same_v<Base, Rationals>) {
        if (!cert.smooth) {
            for (std::uint64_t p = 5; p < 200 && cert.corroboration.empty(); ++p) {
                if (!is_prime(p) || d % p == 0) continue;
                cert.corroboration = detail::singular_point_mod(F, p);
            }
        }
    }
    return cert;
}

}  // namespace ptl
