#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptl/exactfield/cubic.hpp"
#include "ptl/exactfield/intarith.hpp"
#include "ptl/io/expr.hpp"
#include "ptl/twistlab/cocycle.hpp"

namespace ptl {

// The degree-3 cyclic algebra (chi, a): L/k cyclic cubic with generator
// sigma, k = L->prefix(k_depth), a in k*.
template <class Base>
struct CyclicAlgebraSpec {
    FieldPtr<Base> L;
    GaloisMap<Base> sigma;
    std::size_t k_depth = 0;
    Element<Base> a;
    std::string name;

    FieldPtr<Base> k() const { return L->prefix(k_depth); }

    void validate() const {
        if (!L) throw PreconditionError("cyclic algebra without an extension field");
        if (k_depth > L->depth()) throw PreconditionError("base field deeper than the extension");
        if (L->dimension() != 3 * L->prefix(k_depth)->dimension())
            throw PreconditionError("extension is not of degree 3 over the base field");
        if (!sigma.verified()) throw PreconditionError("generator is not a verified automorphism");
        if (sigma.order() != 3) throw PreconditionError("generator does not have order 3");
        for (std::size_t l = 1; l <= k_depth; ++l)
            if (!(sigma.images()[l - 1] == L->generator(l)))
                throw PreconditionError("generator does not fix the base field");
        if (a.is_zero()) throw PreconditionError("a must be nonzero");
        if (!a.restrict_to(k())) throw PreconditionError("a does not lie in the base field");
    }

    std::string describe() const {
        return "(chi_{" + L->generator_names().back() + "}, " + a.to_string() + ")";
    }
};

template <class Base>
ProjMatrix<Base> companion_matrix(const Element<Base>& a) {
    auto K = a.field();
    auto o = Element<Base>::one(K), z = Element<Base>::zero(K);
    return ProjMatrix<Base>(SquareMatrix<Base>{{z, z, a}, {o, z, z}, {z, o, z}});
}

template <class Base>
Cocycle<Base> pgl3_cocycle_of(const CyclicAlgebraSpec<Base>& A) {
    A.validate();
    Cocycle<Base> xi;
    xi.presentation = cyclic_presentation(A.sigma);
    xi.values = {companion_matrix(A.a.embed(A.L))};
    return xi;
}

enum class NormVerdict { trivial, nontrivial, undecided };

inline const char* to_string(NormVerdict v) {
    switch (v) {
        case NormVerdict::trivial: return "trivial";
        case NormVerdict::nontrivial: return "nontrivial";
        default: return "undecided";
    }
}

template <class Base>
struct NormResult {
    NormVerdict verdict = NormVerdict::undecided;
    std::optional<Element<Base>> witness;
    // Name of the local test that fired, with its certified facts.
    std::string obstruction;
    std::vector<std::string> facts;
    std::uint64_t prime = 0;
    std::size_t searched = 0;
};

namespace detail {

inline std::optional<mpq_class> rational_cube_root(const mpq_class& q) {
    mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
    mpq_class r(neg ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

// Primes dividing numerator or denominator; parts beyond 64 bits are skipped.
inline std::vector<std::uint64_t> primes_of(const mpq_class& q) {
    std::vector<std::uint64_t> ps;
    for (mpz_class n : {mpz_class(abs(q.get_num())), mpz_class(q.get_den())})
        if (n.fits_ulong_p())
            for (auto p : prime_divisors(n.get_ui())) ps.push_back(p);
    return ps;
}

// Monic integer minimal polynomial of the top level over Q, low to high.
inline std::optional<std::array<long, 4>> integer_cubic(const FieldPtr<Rationals>& L) {
    if (L->depth() != 1 || L->degree() != 3) return std::nullopt;
    auto m = L->minpoly();
    std::array<long, 4> f{0, 0, 0, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        auto c = m[i].coeffs()[0];
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        f[i] = c.get_num().get_si();
    }
    return f;
}

inline bool inert_prime_test(const CyclicAlgebraSpec<Rationals>& A, NormResult<Rationals>& res) {
    if (A.k_depth != 0) return false;
    auto f = integer_cubic(A.L);
    auto disc_s = A.L->meta("discriminant");
    if (!f || !disc_s) return false;
    mpz_class disc(*disc_s);
    mpq_class a = A.a.coeffs()[0];
    for (auto p : primes_of(a)) {
        long v = valuation(a, p);
        if (v % 3 == 0) continue;
        if (disc % static_cast<unsigned long>(p) == 0) continue;
        auto r = is_inert_cubic(*f, p, disc);
        if (r.verdict != InertVerdict::inert) continue;
        res.verdict = NormVerdict::nontrivial;
        res.obstruction = "inert-prime test";
        res.prime = p;
        res.facts.push_back(std::to_string(p) + " does not divide the discriminant " + disc.get_str());
        res.facts.push_back(r.detail);
        res.facts.push_back("v_" + std::to_string(p) + "(a) = " + std::to_string(v) + ", not divisible by 3");
        return true;
    }
    return false;
}

// L = k(m^(1/3)) over k = Q(zeta3): a prime l = 1 mod 3 with v_l(m) prime to 3
// gives primes of k totally and tamely ramified in L; there a unit is a
// local norm exactly when its residue is a cube.
inline bool ramified_unit_test(const CyclicAlgebraSpec<Rationals>& A, NormResult<Rationals>& res) {
    if (A.k_depth != 1 || A.L->depth() != 2) return false;
    auto k = A.k();
    auto km = k->minpoly();
    if (!(km[0].coeffs()[0] == 1 && km[1].coeffs()[0] == 1)) return false;
    auto Lm = A.L->minpoly();
    if (!Lm[1].is_zero() || !Lm[2].is_zero()) return false;
    auto mk = -Lm[0];
    if (!mk.is_scalar()) return false;
    mpq_class m = mk.coeffs()[0];
    if (m.get_den() != 1 || m == 0) return false;
    auto ak = *A.a.restrict_to(k);
    mpq_class a0 = ak.coeffs()[0], a1 = ak.coeffs()[1];
    for (auto l : primes_of(mpq_class(m.get_num()))) {
        if (l % 3 != 1) continue;
        long v = valuation(m, l);
        if (v % 3 == 0) continue;
        if (a0.get_den() % static_cast<unsigned long>(l) == 0 || a1.get_den() % static_cast<unsigned long>(l) == 0)
            continue;
        auto Fl = prime_field(l);
        for (std::uint64_t r = 2; r < l; ++r) {
            if ((mulmod(r, r, l) + r + 1) % l != 0) continue;
            auto ahat = Fq::from_rational(Fl, a0) + Fq::from_rational(Fl, a1) * Fq::from_int(Fl, static_cast<long>(r));
            if (ahat.is_zero()) continue;
            if (nth_power_class(ahat, 3)) continue;
            res.verdict = NormVerdict::nontrivial;
            res.obstruction = "ramified-unit test";
            res.prime = l;
            res.facts.push_back(std::to_string(l) + " = 1 mod 3 and v_" + std::to_string(l) + "(" + m.get_str() +
                                ") = " + std::to_string(v) + ", so the prime (" + std::to_string(l) + ", " +
                                k->generator_name() + " - " + std::to_string(r) + ") is totally ramified");
            res.facts.push_back("a reduces to " + ahat.to_string() + ", not a cube mod " + std::to_string(l));
            return true;
        }
    }
    return false;
}

// Calls f on every integer vector of length n with sum |v_i| = h.
inline bool for_each_l1(std::size_t n, long h, const std::function<bool(const std::vector<long>&)>& f) {
    std::vector<long> v(n, 0);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
        if (i + 1 == n) {
            v[i] = left;
            if (f(v)) return true;
            if (left != 0) {
                v[i] = -left;
                if (f(v)) return true;
            }
            return false;
        }
        for (long x = 0; x <= left; ++x) {
            v[i] = x;
            if (rec(i + 1, left - x)) return true;
            if (x != 0) {
                v[i] = -x;
                if (rec(i + 1, left - x)) return true;
            }
        }
        return false;
    };
    return rec(0, h);
}

}  // namespace detail

// Decides whether a is a norm from L. Local obstructions are tried first;
// then integer vectors x in the flat basis are enumerated by increasing L1
// height up to `bound`, accepting x / r whenever N(x) / a = r^3 with r
// rational. `work_cap` limits the number of norms evaluated.
template <class Base>
NormResult<Base> norm_triviality(const CyclicAlgebraSpec<Base>& A, long bound = 50, std::size_t work_cap = 200000) {
    A.validate();
    NormResult<Base> res;
    if constexpr (std::is_same_v<Base, Rationals>) {
        if (detail::inert_prime_test(A, res)) return res;
        if (detail::ramified_unit_test(A, res)) return res;
    }
    auto L = A.L;
    auto a = A.a.embed(L);
    auto ainv = a.inverse();
    auto Q = L->prefix(0);
    std::size_t n = L->dimension();
    bool done = false;
    for (long h = 1; h <= bound && !done; ++h) {
        detail::for_each_l1(n, h, [&](const std::vector<long>& v) {
            if (res.searched >= work_cap) {
                done = true;
                return true;
            }
            ++res.searched;
            std::vector<typename Base::value_type> c;
            for (long x : v) c.push_back(L->base().from_int(x));
            Element<Base> x(L, c);
            auto r = norm_cyclic(A.sigma, x) * ainv;
            if (r.is_one()) {
                res.witness = x;
            } else if constexpr (std::is_same_v<Base, Rationals>) {
                auto rq = r.restrict_to(Q);
                if (!rq || rq->is_zero()) return false;
                auto cr = detail::rational_cube_root(rq->coeffs()[0]);
                if (!cr) return false;
                res.witness = x * Element<Base>::from_rational(L, 1 / *cr);
            } else {
                return false;
            }
            done = true;
            return true;
        });
    }
    if (res.witness) {
        if (!(norm_cyclic(A.sigma, *res.witness) == a)) throw Error("norm witness failed re-verification");
        res.verdict = NormVerdict::trivial;
        res.facts.push_back("N(" + res.witness->to_string() + ") = " + A.a.to_string());
        return res;
    }
    res.facts.push_back("no witness among " + std::to_string(res.searched) + " candidates; no local test applies");
    return res;
}

// Recognizes the class of a cocycle inflated from a cyclic cubic quotient.
// Generator `gen` must restrict to an order-3 automorphism of
// L = field->prefix(L_depth) fixing k = prefix(k_depth); the remaining
// generators must have trivial value and fix L. After the optional
// k-rational change of basis P, the value must be the identity (giving
// a = 1) or a monomial 3-cycle with entries in k, and a is the product
// of its entries.
template <class Base>
std::optional<CyclicAlgebraSpec<Base>> classify_standard_sigma_image(const Cocycle<Base>& xi, std::size_t gen,
                                                                     std::size_t L_depth, std::size_t k_depth,
                                                                     const std::optional<ProjMatrix<Base>>& P = {},
                                                                     std::string* why = nullptr) {
    auto fail = [&](std::string s) -> std::optional<CyclicAlgebraSpec<Base>> {
        if (why) *why = std::move(s);
        return std::nullopt;
    };
    if (!verify_cocycle(xi).ok) throw PreconditionError("cocycle does not verify");
    const auto& pres = xi.presentation;
    auto M = pres.field;
    auto L = M->prefix(L_depth);
    auto k = M->prefix(k_depth);
    if (xi.values.at(0).dim() != 3) return fail("values are not 3x3");
    for (std::size_t h = 0; h < pres.maps.size(); ++h) {
        for (std::size_t l = 1; l <= L_depth; ++l) {
            auto im = pres.maps[h].images()[l - 1];
            if (h != gen && !(im == M->generator(l))) return fail(pres.names[h] + " acts nontrivially on L");
        }
        if (h != gen && !xi.values[h].is_identity())
            return fail("value at " + pres.names[h] + " is nontrivial; not inflated from the cyclic quotient");
    }
    std::vector<Element<Base>> im;
    for (std::size_t l = 1; l <= L_depth; ++l) {
        auto r = pres.maps[gen].images()[l - 1].restrict_to(L);
        if (!r) return fail("generator does not preserve L");
        im.push_back(*r);
    }
    GaloisMap<Base> s(L, im, 3, pres.names[gen]);
    CyclicAlgebraSpec<Base> spec{L, s, k_depth, Element<Base>::one(k), ""};
    try {
        auto tmp = spec;
        tmp.validate();
    } catch (const PreconditionError& e) {
        return fail(std::string("not a cyclic cubic quotient: ") + e.what());
    }
    auto v = xi.values[gen].embed(M);
    if (P) {
        for (auto& row : P->rows())
            for (auto& e : row)
                if (!e.restrict_to(k)) return fail("change of basis is not k-rational");
        v = P->embed(M).inverse() * v * P->embed(M);
    }
    if (v.is_identity()) return spec;
    // Monomial 3-cycle: one nonzero per row, in a cyclic column pattern.
    std::vector<std::size_t> col(3);
    Element<Base> prod = Element<Base>::one(k);
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t nz = 0;
        for (std::size_t j = 0; j < 3; ++j)
            if (!v(i, j).is_zero()) {
                ++nz;
                col[i] = j;
            }
        if (nz != 1) return fail("value is not monomial");
        auto e = v(i, col[i]).restrict_to(k);
        if (!e) return fail("value has entries outside k");
        prod = prod * *e;
    }
    bool cyc = col[0] != 0 && col[col[0]] != col[0] && col[col[col[0]]] == 0;
    if (!cyc) return fail("monomial pattern is not a 3-cycle");
    spec.a = prod;
    return spec;
}

}  // namespace ptl
