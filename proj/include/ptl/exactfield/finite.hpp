#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ptl/exactfield/galois.hpp"
#include "ptl/exactfield/irreducible.hpp"

namespace ptl {

using FqPtr = FieldPtr<PrimeField>;
using Fq = Element<PrimeField>;

// The element whose flat coefficients are the base-p digits of `index`.
inline Fq element_at(const FqPtr& K, mpz_class index) {
    std::uint64_t p = K->characteristic();
    std::vector<std::uint64_t> c(K->dimension(), 0);
    for (std::size_t i = 0; i < c.size() && index > 0; ++i) {
        c[i] = mpz_mod(index, p);
        index /= static_cast<unsigned long>(p);
    }
    return Fq(K, std::move(c));
}

// Monic irreducible polynomial of degree n over K, the first in the
// enumeration order of its lower coefficients.
inline std::vector<Fq> find_irreducible(const FqPtr& K, std::size_t n) {
    mpz_class Q = K->order(), total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= Q;
    for (mpz_class idx = 0; idx < total; ++idx) {
        std::vector<Fq> c;
        mpz_class r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class digit = r % Q;
            r /= Q;
            c.push_back(element_at(K, digit));
        }
        c.push_back(Fq::one(K));
        if (c[0].is_zero()) continue;
        if (rabin_irreducible(UPoly<PrimeField>(K, c))) return c;
    }
    throw Error("no irreducible polynomial found");
}

// F_q for a prime power q; q = p^f with f > 1 is built as F_p[g]/(m).
inline FqPtr make_finite_field(std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
    auto Fp = prime_field(pp->first);
    if (pp->second == 1) return Fp;
    return adjoin(Fp, "g", find_irreducible(Fp, pp->second));
}

inline mpz_class field_size(const FqPtr& K) { return K->order(); }

// Multiplicative order of a nonzero element of a finite field.
inline mpz_class element_order(const Fq& x) {
    if (x.is_zero()) throw PreconditionError("zero has no multiplicative order");
    mpz_class n = x.field()->order() - 1, ord = n;
    // Factor the group order by trial division; sizes here stay small.
    mpz_class m = n;
    std::vector<mpz_class> primes;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    for (auto& r : primes) {
        while (ord % r == 0 && x.pow(ord / r).is_one()) ord /= r;
    }
    return ord;
}

// x is an n-th power in K* iff x^((Q-1)/gcd(n,Q-1)) = 1.
inline bool nth_power_class(const Fq& x, std::uint64_t n) {
    if (!x.field()->is_finite()) throw PreconditionError("n-th power test needs a finite field");
    if (x.is_zero()) throw PreconditionError("n-th power class of zero");
    if (n == 0) throw PreconditionError("n must be positive");
    mpz_class qm1 = x.field()->order() - 1, g;
    mpz_class nn = static_cast<unsigned long>(n);
    mpz_gcd(g.get_mpz_t(), nn.get_mpz_t(), qm1.get_mpz_t());
    return x.pow(qm1 / g).is_one();
}

// All elements of exact order n in K*, in enumeration order. Only for
// fields small enough to enumerate.
inline std::vector<Fq> elements_of_order(const FqPtr& K, std::uint64_t n) {
    std::vector<Fq> out;
    mpz_class Q = K->order(), nn = static_cast<unsigned long>(n);
    if ((Q - 1) % nn != 0) return out;
    for (mpz_class i = 1; i < Q; ++i) {
        Fq x = element_at(K, i);
        if (element_order(x) == nn) out.push_back(x);
    }
    return out;
}

// A primitive n-th root of unity in K, found by powering enumerated elements.
inline std::optional<Fq> root_of_unity(const FqPtr& K, std::uint64_t n) {
    mpz_class Q = K->order(), nn = static_cast<unsigned long>(n);
    if ((Q - 1) % nn != 0) return std::nullopt;
    for (mpz_class i = 1; i < Q; ++i) {
        Fq y = element_at(K, i).pow((Q - 1) / nn);
        if (element_order(y) == nn) return y;
    }
    return std::nullopt;
}

// Frobenius of K relative to its prefix of depth `over`: x -> x^|K_over|.
inline GaloisMap<PrimeField> frobenius(const FqPtr& K, std::size_t over = 0) {
    auto sub = K->prefix(over);
    mpz_class q = sub->order();
    std::vector<Fq> im;
    for (std::size_t l = 1; l <= K->depth(); ++l) {
        Fq g = K->generator(l);
        im.push_back(l <= over ? g : g.pow(q));
    }
    std::size_t m = K->dimension() / sub->dimension();
    return GaloisMap<PrimeField>(K, std::move(im), m, "frob");
}

// K(zeta_n) and a primitive n-th root of unity in it.
inline std::pair<FqPtr, Fq> cyclotomic_extension(const FqPtr& K, std::uint64_t n, const std::string& name = "u") {
    if (n % K->characteristic() == 0) throw PreconditionError("root of unity order divisible by the characteristic");
    mpz_class Q = K->order(), acc = Q % static_cast<unsigned long>(n);
    std::size_t m = 1;
    while (acc != 1 % n) {
        acc = (acc * Q) % static_cast<unsigned long>(n);
        ++m;
    }
    FqPtr L = m == 1 ? K : adjoin(K, name, find_irreducible(K, m));
    auto z = root_of_unity(L, n);
    if (!z) throw Error("no root of unity found");
    return {L, *z};
}

}  // namespace ptl
