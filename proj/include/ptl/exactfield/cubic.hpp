#pragma once

#include <array>
#include <optional>
#include <string>

#include "ptl/exactfield/finite.hpp"

namespace ptl {

enum class InertVerdict { inert, split, undecided };

inline const char* to_string(InertVerdict v) {
    switch (v) {
        case InertVerdict::inert: return "inert";
        case InertVerdict::split: return "split";
        default: return "undecided";
    }
}

struct InertResult {
    InertVerdict verdict = InertVerdict::undecided;
    // Regular generator (c0 + c1 t + c2 t^2) / den and its characteristic polynomial.
    std::array<long, 3> combo{};
    long den = 1;
    std::array<mpq_class, 4> charpoly{};
    std::string detail;
};

namespace detail {

// Characteristic polynomial (low to high, monic) of multiplication by x
// in Q[t]/(f) for a cubic f.
inline std::array<mpq_class, 4> charpoly3(const Element<Rationals>& x) {
    auto K = x.field();
    std::array<std::array<mpq_class, 3>, 3> M;
    Element<Rationals> col = x, t = K->generator();
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) M[r][c] = col.coeffs()[r];
        col = col * t;
    }
    mpq_class tr = M[0][0] + M[1][1] + M[2][2];
    mpq_class tr2 = 0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) tr2 += M[i][k] * M[k][i];
    mpq_class det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    return {-det, (tr * tr - tr2) / 2, -tr, 1};
}

}  // namespace detail

// Decides whether p is inert in Q(t)/(f) for a monic integer cubic f, by
// searching for a generator whose characteristic polynomial is p-integral
// and squarefree mod p; its factorization mod p then mirrors that of p.
// `discriminant` is the attested field discriminant.
inline InertResult is_inert_cubic(const std::array<long, 4>& f, std::uint64_t p, const mpz_class& discriminant,
                                  long coeff_bound = 5, long den_bound = 8) {
    if (f[3] != 1) throw PreconditionError("cubic must be monic");
    if (!is_prime(p)) throw PreconditionError("p must be prime");
    if (discriminant % static_cast<unsigned long>(p) == 0)
        throw PreconditionError("p divides the field discriminant");
    auto Q = Tower<Rationals>::make_base(Rationals{});
    auto K = Q->extend_unchecked("t", int_poly(Q, {f[0], f[1], f[2], 1}), {});
    auto Fp = prime_field(p);
    auto t = K->generator(), t2 = t * t;
    InertResult res;
    std::vector<long> vals{0};
    for (long v = 1; v <= coeff_bound; ++v) {
        vals.push_back(v);
        vals.push_back(-v);
    }
    for (long den = 1; den <= den_bound; ++den) {
        for (long c2 : vals)
            for (long c1 : vals) {
                if (c1 == 0 && c2 == 0) continue;
                for (long c0 : vals) {
                    if (std::gcd(std::gcd(std::abs(c0), std::abs(c1)), std::gcd(std::abs(c2), den)) != 1) continue;
                    auto x = (Element<Rationals>::from_int(K, c0) + Element<Rationals>::from_int(K, c1) * t +
                              Element<Rationals>::from_int(K, c2) * t2) *
                             Element<Rationals>::from_rational(K, mpq_class(1, den));
                    auto cp = detail::charpoly3(x);
                    bool integral = true;
                    for (auto& c : cp)
                        if (c.get_den() % static_cast<unsigned long>(p) == 0) integral = false;
                    if (!integral) continue;
                    std::vector<Fq> red;
                    for (auto& c : cp) red.push_back(Fq::from_rational(Fp, c));
                    UPoly<PrimeField> g(Fp, red);
                    if (gcd(g, g.derivative()).degree() != 0) continue;
                    res.combo = {c0, c1, c2};
                    res.den = den;
                    res.charpoly = cp;
                    bool irr = rabin_irreducible(g);
                    res.verdict = irr ? InertVerdict::inert : InertVerdict::split;
                    res.detail = std::string("characteristic polynomial of (") + std::to_string(c0) + " + " +
                                 std::to_string(c1) + "*t + " + std::to_string(c2) + "*t^2)/" + std::to_string(den) +
                                 " is squarefree mod " + std::to_string(p) + " and " +
                                 (irr ? "irreducible" : "reducible") + " there";
                    return res;
                }
            }
    }
    res.detail = "no regular generator within the search bound";
    return res;
}

}  // namespace ptl
