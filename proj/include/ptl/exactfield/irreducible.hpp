#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptl/exactfield/hom.hpp"
#include "ptl/exactfield/upoly.hpp"

namespace ptl {

// Rabin's test over a finite tower field.
template <class Base>
bool rabin_irreducible(const UPoly<Base>& f) {
    auto K = f.field();
    if (!K->is_finite()) throw PreconditionError("Rabin test needs a finite field");
    long n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    UPoly<Base> m = f.monic();
    mpz_class Q = K->order();
    auto x = UPoly<Base>::x(K);
    // frob[k] = x^(Q^k) mod m
    std::vector<UPoly<Base>> frob{x % m};
    for (long k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), Q, m));
    if (!(frob[n] == x % m)) return false;
    for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
        auto g = gcd(frob[n / static_cast<long>(r)] - x, m);
        if (g.degree() != 0) return false;
    }
    return true;
}

// Build the depth-0 prime field tower F_p.
inline FieldPtr<PrimeField> prime_field(std::uint64_t p) { return Tower<PrimeField>::make_base(PrimeField(p)); }

namespace detail {

// Maps a rational tower to F_p by sending the generators to given residues.
inline TowerHom<Rationals, PrimeField> residue_map(const FieldPtr<Rationals>& K, std::uint64_t p,
                                                   const std::vector<std::uint64_t>& images) {
    auto Fp = prime_field(p);
    std::vector<Element<PrimeField>> im;
    for (auto v : images) im.push_back(Element<PrimeField>::from_int(Fp, static_cast<long>(v % p)));
    return TowerHom<Rationals, PrimeField>(K, Fp, std::move(im));
}

inline std::vector<mpq_class> cyclotomic_rational(std::uint64_t n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    using V = std::vector<mpq_class>;
    auto divide = [](V a, const V& b) {
        long db = static_cast<long>(b.size()) - 1;
        V q(a.size() - b.size() + 1);
        for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
            mpq_class c = a[k] / b.back();
            q[k - db] = c;
            for (long j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
        }
        return q;
    };
    V num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) num = divide(num, cyclotomic_rational(d));
    return num;
}

}  // namespace detail

// Checks that `images` define a degree-one prime of K above p at which every
// level's minimal polynomial has a simple root. Returns a failure message or "".
inline std::string check_residue_prime(const FieldPtr<Rationals>& K, std::uint64_t p,
                                       const std::vector<std::uint64_t>& images) {
    if (images.size() != K->depth()) return "wrong number of generator residues";
    for (std::size_t l = 1; l <= K->depth(); ++l) {
        std::vector<std::uint64_t> lower(images.begin(), images.begin() + static_cast<long>(l - 1));
        auto lv = K->prefix(l);
        auto hom = detail::residue_map(lv->parent(), p, lower);
        auto Fp = hom.target();
        std::vector<Element<PrimeField>> red;
        try {
            for (auto& c : lv->minpoly()) red.push_back(hom(c));
        } catch (const PreconditionError&) {
            return "minimal polynomial of " + lv->generator_name() + " is not integral at " + std::to_string(p);
        }
        UPoly<PrimeField> m(Fp, red);
        auto r = Element<PrimeField>::from_int(Fp, static_cast<long>(images[l - 1] % p));
        if (!m.eval(r).is_zero()) return "residue of " + lv->generator_name() + " is not a root mod " + std::to_string(p);
        if (m.derivative().eval(r).is_zero())
            return "residue of " + lv->generator_name() + " is a repeated root mod " + std::to_string(p);
    }
    return "";
}

// Certifies irreducibility of a minimal polynomial over K. Over finite
// fields the Rabin test decides; over rational towers a witness is required.
inline std::string certify_irreducible(const FieldPtr<PrimeField>& K, const std::vector<Element<PrimeField>>& minpoly,
                                       IrreducibilityWitness& w) {
    w.kind = IrreducibilityWitness::Kind::rabin;
    if (!rabin_irreducible(UPoly<PrimeField>(K, minpoly))) return "minimal polynomial is reducible";
    return "";
}

inline std::string certify_irreducible(const FieldPtr<Rationals>& K, const std::vector<Element<Rationals>>& minpoly,
                                       IrreducibilityWitness& w) {
    using Kind = IrreducibilityWitness::Kind;
    if (w.kind == Kind::cyclotomic) {
        if (K->depth() != 0) return "cyclotomic witness is only valid over Q";
        auto phi = detail::cyclotomic_rational(w.cyclotomic_n);
        if (phi.size() != minpoly.size()) return "polynomial is not the cyclotomic polynomial of the declared order";
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (minpoly[i].scalar_part() != phi[i] || !minpoly[i].is_scalar())
                return "polynomial is not the cyclotomic polynomial of the declared order";
        return "";
    }
    if (w.kind != Kind::prime_reduction) return "missing irreducibility witness";
    std::uint64_t p = w.prime;
    if (!is_prime(p)) return "witness modulus is not prime";
    if (auto msg = check_residue_prime(K, p, w.images); !msg.empty()) return msg;
    auto hom = detail::residue_map(K, p, w.images);
    std::vector<Element<PrimeField>> red;
    try {
        for (auto& c : minpoly) red.push_back(hom(c));
    } catch (const PreconditionError&) {
        return "polynomial is not integral at the witness prime";
    }
    if (!rabin_irreducible(UPoly<PrimeField>(hom.target(), red)))
        return "reduction mod " + std::to_string(p) + " is reducible";
    return "";
}

// Validating field extension: K[t]/(minpoly). Coefficients low to high, monic.
template <class Base>
FieldPtr<Base> adjoin(const FieldPtr<Base>& K, std::string name, const std::vector<Element<Base>>& minpoly,
                      IrreducibilityWitness w = {}, std::map<std::string, std::string> meta = {}) {
    if (minpoly.size() < 3) throw PreconditionError("minimal polynomial of " + name + " must have degree at least 2");
    if (!minpoly.back().is_one()) throw PreconditionError("minimal polynomial of " + name + " must be monic");
    if (auto msg = certify_irreducible(K, minpoly, w); !msg.empty())
        throw PreconditionError("cannot adjoin " + name + ": " + msg);
    return K->extend_unchecked(std::move(name), minpoly, std::move(w), std::move(meta));
}

template <class Base>
std::vector<Element<Base>> int_poly(const FieldPtr<Base>& K, const std::vector<long>& c) {
    std::vector<Element<Base>> out;
    for (long v : c) out.push_back(Element<Base>::from_int(K, v));
    return out;
}

}  // namespace ptl
