#include <gtest/gtest.h>

#include "ptl/autgrp/automorphism.hpp"
#include "ptl/autgrp/diagonal.hpp"
#include "ptl/io/fixtures.hpp"

using namespace ptl;
using PM = ProjMatrix<Rationals>;

namespace {

FixtureBundle& fx() {
    static FixtureBundle b;
    return b;
}

PlaneCurve<Rationals> curve_over(const FieldPtr<Rationals>& K, const std::string& s) {
    return PlaneCurve<Rationals>(parse_poly(K, xyz_vars(), s));
}

// Pairs (a, b) mod N such that diag(1, z^a, z^b) scales every monomial of
// F by the same root of unity, z of order N.
std::size_t brute_diagonal_count(const MultiPoly<Rationals>& F, long N) {
    std::size_t count = 0;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            long ref = -1;
            bool ok = true;
            for (auto& [m, c] : F.terms()) {
                long w = (a * m[1] + b * m[2]) % N;
                if (ref < 0) ref = w;
                else if (w != ref) {
                    ok = false;
                    break;
                }
            }
            count += ok;
        }
    return count;
}

}  // namespace

TEST(Diagonal, CountsMatchBruteForce) {
    auto Q = Tower<Rationals>::make_base(Rationals{});
    auto K = fx().field("k_zeta3");
    struct Case {
        FieldPtr<Rationals> f;
        std::string form;
        // A multiple of the exponent of the diagonal group.
        long N;
    };
    std::vector<Case> cases{
        {Q, "X^6 + Y^6 + Z^6", 60},
        {K, "X^6 + Y^6 + Z^6 + 3*(X^3*Y^3 + Y^3*Z^3 + X^3*Z^3)", 60},
        {Q, "X^4*Y + Y^4*Z + X*Z^4 + X^3*Y^2 + Y^3*Z^2 + X^2*Z^3", 60},
        {Q, "X^4 + Y^4 + Z^4", 60},
        // s = s^4 t = t^4 forces s^13 = 1.
        {Q, "X^4*Y + Y^4*Z + Z^4*X", 39},
    };
    for (auto& c : cases) {
        auto F = parse_poly(c.f, xyz_vars(), c.form);
        auto D = enumerate_diagonal_autos(F);
        EXPECT_EQ(D.order(), brute_diagonal_count(F, c.N)) << c.form;
        EXPECT_EQ(D.order(), D.d1 * D.d2) << c.form;
    }
}

TEST(Diagonal, FermatSexticStructure) {
    auto D = enumerate_diagonal_autos(curve_over(Tower<Rationals>::make_base(Rationals{}), "X^6 + Y^6 + Z^6"));
    EXPECT_EQ(D.order(), 36u);
    EXPECT_EQ(D.d1, 6u);
    EXPECT_FALSE(D.cyclic());
    EXPECT_TRUE(D.contains(1, 5));
}

TEST(Automorphism, FermatSexticGroupOrder) {
    auto K = fx().field("k_zeta3");
    auto C = curve_over(K, "X^6 + Y^6 + Z^6");
    std::vector<PM> gens{PM(parse_map(K, "[Y : X : Z]")), PM(parse_map(K, "[Y : Z : X]")),
                         PM(parse_map(K, "[X : Y : (1 + zeta3)*Z]"))};
    // Permutations times the 36 diagonal automorphisms.
    auto diag = enumerate_diagonal_autos(C);
    auto rep = verify_group_order(C, gens, 6 * diag.order());
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.order, 216u);
    EXPECT_FALSE(verify_group_order(C, gens, 72).ok);
}

TEST(Automorphism, GeneratorsOfCaPreserveTheCurve) {
    auto K = fx().field("k_zeta3");
    auto doc = FixtureBundle::load_file(fx().dir() / "curves" / "c_a3.json");
    auto C = fx().curve(doc);
    for (auto n : {"R", "T", "U"}) EXPECT_TRUE(is_automorphism(C, PM(fx().matrix(n))).has_value()) << n;
    EXPECT_FALSE(is_automorphism(C, PM(parse_map(K, "[X : Y : 2*Z]"))).has_value());
    auto lam = is_automorphism(C, PM(parse_map(K, "[X : Y : zeta3*Z]")));
    ASSERT_TRUE(lam.has_value());
    EXPECT_TRUE(lam->is_one());
}

TEST(Automorphism, NonGeneratorRejected) {
    auto K = fx().field("k_zeta3");
    auto C = curve_over(K, "X^6 + Y^6 + Z^6");
    auto rep = verify_group_order(C, {PM(parse_map(K, "[X + Y : Y : Z]"))}, 1);
    EXPECT_FALSE(rep.ok);
    ASSERT_FALSE(rep.failures.empty());
}
