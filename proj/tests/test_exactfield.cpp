#include <gtest/gtest.h>

#include <array>
#include <random>

#include "ptl/exactfield/cubic.hpp"
#include "ptl/exactfield/finite.hpp"
#include "ptl/exactfield/galois.hpp"
#include "ptl/exactfield/irreducible.hpp"
#include "ptl/io/expr.hpp"

using namespace ptl;
using Q = Element<Rationals>;

namespace {

FieldPtr<Rationals> rationals() { return Tower<Rationals>::make_base(Rationals{}); }

FieldPtr<Rationals> zeta3_field() {
    auto B = rationals();
    return adjoin(B, "zeta3", int_poly(B, {1, 1, 1}), {IrreducibilityWitness::Kind::prime_reduction, 2, {}});
}

FieldPtr<Rationals> qf_field() {
    auto B = rationals();
    return adjoin(B, "t", int_poly(B, {-64, 0, 12, 1}), {IrreducibilityWitness::Kind::prime_reduction, 5, {}});
}

// a + b w with w^2 = -1 - w.
struct Eisenstein {
    mpq_class a, b;
    Eisenstein operator*(const Eisenstein& o) const { return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b}; }
    Eisenstein operator+(const Eisenstein& o) const { return {a + o.a, b + o.b}; }
};

Q from_pair(const FieldPtr<Rationals>& K, const Eisenstein& e) { return Q(K, {e.a, e.b}); }

// Residues mod p of a polynomial in eta modulo eta^3 - c.
std::array<std::uint64_t, 3> mul_mod_cubic(const std::array<std::uint64_t, 3>& u, const std::array<std::uint64_t, 3>& v,
                                           std::uint64_t c, std::uint64_t p) {
    std::array<std::uint64_t, 5> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i + j] = (r[i + j] + u[i] * v[j]) % p;
    for (int k = 4; k >= 3; --k) r[k - 3] = (r[k - 3] + r[k] * c) % p;
    return {r[0], r[1], r[2]};
}

mpq_class det3(const std::array<std::array<mpq_class, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool has_root_mod(const std::array<long, 4>& f, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        long long v = 0;
        for (int i = 3; i >= 0; --i) v = (v * static_cast<long long>(x) + f[i]) % static_cast<long long>(p);
        if ((v % static_cast<long long>(p) + static_cast<long long>(p)) % static_cast<long long>(p) == 0) return true;
    }
    return false;
}

}  // namespace

TEST(Tower, EisensteinArithmeticMatchesPairModel) {
    auto K = zeta3_field();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 200; ++i) {
        Eisenstein x{d(rng), d(rng)}, y{d(rng), d(rng)};
        EXPECT_EQ(from_pair(K, x) * from_pair(K, y), from_pair(K, x * y));
        EXPECT_EQ(from_pair(K, x) + from_pair(K, y), from_pair(K, x + y));
        if (x.a != 0 || x.b != 0) {
            EXPECT_TRUE((from_pair(K, x) * from_pair(K, x).inverse()).is_one());
        }
    }
}

TEST(Tower, ZeroHasNoInverse) {
    auto K = zeta3_field();
    EXPECT_THROW(Q::zero(K).inverse(), DivisionByZero);
}

TEST(Tower, MixedFieldsRejected) {
    auto a = Q::one(zeta3_field()), b = Q::one(qf_field());
    EXPECT_THROW(a + b, FieldMismatch);
}

TEST(Tower, EmbedAndRestrictRoundTrip) {
    auto k = zeta3_field();
    auto L = adjoin(k, "c", int_poly(k, {-7, 0, 0, 1}), {IrreducibilityWitness::Kind::prime_reduction, 13, {3}});
    auto z = k->generator();
    auto up = z.embed(L);
    ASSERT_TRUE(up.restrict_to(k).has_value());
    EXPECT_EQ(*up.restrict_to(k), z);
    EXPECT_FALSE(L->generator().restrict_to(k).has_value());
    auto c = L->generator();
    EXPECT_EQ(c * c * c, Q::from_int(L, 7));
}

TEST(Irreducible, ReducibleMinpolyRejected) {
    auto B = rationals();
    EXPECT_THROW(adjoin(B, "t", int_poly(B, {-8, 0, 0, 1}), {IrreducibilityWitness::Kind::prime_reduction, 5, {}}),
                 PreconditionError);
    EXPECT_THROW(adjoin(B, "t", int_poly(B, {1, 0, 1}), {IrreducibilityWitness::Kind::prime_reduction, 5, {}}),
                 PreconditionError);
}

TEST(Irreducible, RabinAgreesWithRootSearchInLowDegree) {
    auto F7 = prime_field(7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c) {
                std::vector<Element<PrimeField>> co{Element<PrimeField>::from_int(F7, c),
                                                    Element<PrimeField>::from_int(F7, b),
                                                    Element<PrimeField>::from_int(F7, a), Element<PrimeField>::one(F7)};
                bool rabin = rabin_irreducible(UPoly<PrimeField>(F7, co));
                EXPECT_EQ(rabin, !has_root_mod({c, b, a, 1}, 7)) << a << " " << b << " " << c;
            }
}

TEST(FiniteField, CubicExtensionMatchesPolynomialModel) {
    auto F31 = prime_field(31);
    auto zeta = Element<PrimeField>::from_int(F31, 5);
    IrreducibilityWitness w;
    w.kind = IrreducibilityWitness::Kind::rabin;
    auto E = adjoin(F31, "eta", {-zeta, Element<PrimeField>::zero(F31), Element<PrimeField>::zero(F31),
                                 Element<PrimeField>::one(F31)}, w);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> d(0, 30);
    for (int i = 0; i < 200; ++i) {
        std::array<std::uint64_t, 3> u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)};
        Element<PrimeField> x(E, {u[0], u[1], u[2]}), y(E, {v[0], v[1], v[2]});
        auto r = mul_mod_cubic(u, v, 5, 31);
        EXPECT_EQ(x * y, Element<PrimeField>(E, {r[0], r[1], r[2]}));
    }
    EXPECT_EQ(E->order(), mpz_class(29791));
}

TEST(FiniteField, CubeClassesMatchTable) {
    for (std::uint64_t p : {31, 43, 157}) {
        auto K = prime_field(p);
        std::vector<bool> cube(p, false);
        for (std::uint64_t x = 1; x < p; ++x) cube[x * x % p * x % p] = true;
        for (std::uint64_t x = 1; x < p; ++x)
            EXPECT_EQ(nth_power_class(Element<PrimeField>::from_int(K, static_cast<long>(x)), 3), cube[x]) << p << " " << x;
    }
}

TEST(FiniteField, OrderThreeElementsInEnumerationOrder) {
    auto els = elements_of_order(prime_field(31), 3);
    ASSERT_EQ(els.size(), 2u);
    EXPECT_EQ(els[0], Element<PrimeField>::from_int(prime_field(31), 5));
    EXPECT_EQ(els[1], Element<PrimeField>::from_int(prime_field(31), 25));
    EXPECT_TRUE(elements_of_order(prime_field(29), 3).empty());
}

TEST(FiniteField, PrimePowerFieldFrobenius) {
    auto K = make_finite_field(125);
    EXPECT_EQ(K->order(), mpz_class(125));
    auto fr = frobenius(K);
    EXPECT_TRUE(fr.verified());
    EXPECT_EQ(fr.order(), 3u);
    auto g = K->generator();
    EXPECT_EQ(fr(g), g.pow(5));
    EXPECT_EQ(element_order(g.pow(124)), mpz_class(1));
}

TEST(Galois, DescentGeneratorVerified) {
    auto K = qf_field();
    GaloisMap<Rationals> s(K, {parse_element(K, "[-8, 2, 1/4]")}, 3, "sigma");
    EXPECT_TRUE(s.verified());
    EXPECT_TRUE(s.compose(s).compose(s).fixes_generators());
    EXPECT_FALSE(s.fixes_generators());
    GaloisMap<Rationals> bad(K, {K->generator() + Q::one(K)}, 3, "bad");
    EXPECT_FALSE(bad.verified());
}

TEST(Galois, NormEqualsDeterminantOfMultiplication) {
    auto K = qf_field();
    GaloisMap<Rationals> s(K, {parse_element(K, "[-8, 2, 1/4]")}, 3, "sigma");
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 100; ++i) {
        Q x(K, {mpq_class(d(rng)), mpq_class(d(rng)), mpq_class(d(rng))});
        std::array<std::array<mpq_class, 3>, 3> m;
        Q col = x;
        for (int c = 0; c < 3; ++c) {
            for (int r = 0; r < 3; ++r) m[r][c] = col.coeffs()[r];
            col = col * K->generator();
        }
        EXPECT_EQ(norm_cyclic(s, x), Q::from_rational(K, det3(m)));
    }
}

TEST(Cubic, InertVerdictAgreesWithRootCount) {
    struct Case {
        std::array<long, 4> f;
        long disc;
    };
    for (auto [f, disc] : {Case{{-1, -2, 1, 1}, 49}, Case{{1, -3, 0, 1}, 81}}) {
        for (std::uint64_t p = 2; p < 60; ++p) {
            if (!is_prime(p) || disc % static_cast<long>(p) == 0) continue;
            auto res = is_inert_cubic(f, p, mpz_class(disc));
            ASSERT_NE(res.verdict, InertVerdict::undecided) << p;
            EXPECT_EQ(res.verdict == InertVerdict::inert, !has_root_mod(f, p)) << p;
        }
    }
}

TEST(Cubic, DescentFieldTwoIsInert) {
    auto res = is_inert_cubic({-64, 0, 12, 1}, 2, mpz_class(81));
    EXPECT_EQ(res.verdict, InertVerdict::inert);
    EXPECT_THROW(is_inert_cubic({-64, 0, 12, 1}, 3, mpz_class(81)), PreconditionError);
}

TEST(IntArith, ValuationAndPrimes) {
    EXPECT_EQ(valuation(mpq_class(72, 5), 2), 3);
    EXPECT_EQ(valuation(mpq_class(72, 5), 5), -1);
    EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
    EXPECT_EQ(mult_order_mod(3, 7), 6u);
    EXPECT_EQ(mult_order_mod(3, 7, true), 3u);
}
