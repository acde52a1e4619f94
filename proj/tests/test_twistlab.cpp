#include <gtest/gtest.h>

#include <set>

#include "ptl/autgrp/automorphism.hpp"
#include "ptl/exactfield/finite.hpp"
#include "ptl/io/fixtures.hpp"
#include "ptl/twistlab/families.hpp"
#include "ptl/twistlab/h1.hpp"
#include "ptl/twistlab/obstruction.hpp"
#include "ptl/twistlab/twist.hpp"

using namespace ptl;
using Q = Element<Rationals>;
using PM = ProjMatrix<Rationals>;

namespace {

FixtureBundle& fx() {
    static FixtureBundle b;
    return b;
}

CocycleReport check_fixture(const std::string& name) {
    auto doc = FixtureBundle::load_file(fx().dir() / "cocycles" / (name + ".json"));
    return verify_cocycle(load_cocycle(fx(), doc));
}

}  // namespace

TEST(Cocycle, FixturesVerifyAsRecorded) {
    EXPECT_TRUE(check_fixture("section2").ok);
    EXPECT_TRUE(check_fixture("trivial").ok);
    EXPECT_FALSE(check_fixture("broken").ok);
}

TEST(Cocycle, TwistOfFermatByCubeRoot) {
    auto L = fx().field("L_cbrt7");
    auto k = L->parent();
    auto z = L->generator(1), c = L->generator(2);
    GaloisMap<Rationals> s(L, {z, z * c}, 3, "sigma");
    auto gal = cyclic_presentation(s);
    PlaneCurve<Rationals> C(parse_poly(k, xyz_vars(), "X^6 + Y^6 + Z^6"));
    auto D = PM::diagonal({Q::one(L), Q::one(L), c});
    auto tw = diagonal_twist(C, D, gal, k);
    EXPECT_EQ(tw.model.form(), parse_poly(k, xyz_vars(), "X^6 + Y^6 + 49*Z^6"));
    EXPECT_TRUE(verify_cocycle(tw.cocycle).ok);
    // M sigma(M)^-1 = diag(1, 1, zeta3^-1).
    EXPECT_EQ(tw.cocycle.values.front(), PM::diagonal({Q::one(L), Q::one(L), z * z}));
    EXPECT_TRUE(is_smooth(tw.model).smooth);
}

TEST(Cocycle, NonRationalSplittingRejected) {
    auto L = fx().field("L_cbrt7");
    auto k = L->parent();
    auto z = L->generator(1), c = L->generator(2);
    GaloisMap<Rationals> s(L, {z, z * c}, 3, "sigma");
    PlaneCurve<Rationals> C(parse_poly(k, xyz_vars(), "X^6 + Y^6 + Z^6 + X^5*Y"));
    auto M = PM::diagonal({Q::one(L), c, Q::one(L)});
    EXPECT_THROW(twist_from_splitting(C, M, cyclic_presentation(s), k), TwistError);
}

TEST(H1, AbelianCountEqualsIndexOfLangImage) {
    for (std::uint64_t q : {7ull, 13ull, 31ull, 41ull}) {
        auto K = make_finite_field(q);
        for (std::uint64_t n : {3ull, 5ull}) {
            if (q % n == 0) continue;
            auto [L, zn] = cyclotomic_extension(K, n);
            auto one = Fq::one(L);
            auto A = group_closure<PrimeField>({ProjMatrix<PrimeField>::diagonal({one, zn, one}),
                                                ProjMatrix<PrimeField>::diagonal({one, one, zn})},
                                               10000, L, 3);
            auto frob = frobenius(L, K->depth());
            auto pi = [&](const ProjMatrix<PrimeField>& x) { return galois_on_matrix(frob, x); };
            auto h = h1_frobenius<PrimeField>(A, pi);
            // Oracle: for abelian A the classes are cosets of {a^-1 pi(a)}.
            std::set<ProjMatrix<PrimeField>> lang;
            for (auto& a : A.elements()) lang.insert(a.inverse() * pi(a));
            EXPECT_EQ(h.count() * lang.size(), A.order()) << q << " " << n;
            ASSERT_TRUE(h.coinvariants.has_value());
            EXPECT_EQ(*h.coinvariants, h.count());
        }
    }
}

TEST(H1, TrivialActionGivesConjugacyClasses) {
    auto K = make_finite_field(7);
    auto S3 = group_closure<PrimeField>({ProjMatrix<PrimeField>(parse_map(K, "[Y : X : Z]")),
                                         ProjMatrix<PrimeField>(parse_map(K, "[Y : Z : X]"))});
    auto h = h1_frobenius<PrimeField>(S3, [](const ProjMatrix<PrimeField>& x) { return x; });
    EXPECT_EQ(h.count(), 3u);
    EXPECT_FALSE(h.coinvariants.has_value());
}

TEST(Families, BruteForceAgreesWithH1) {
    for (std::uint64_t q : {31ull, 41ull, 61ull}) {
        for (auto fam : {Family::first, Family::second}) {
            auto brute = family_classes_fq(5, q, fam);
            auto h = family_h1_fq(5, q, fam);
            EXPECT_EQ(brute.count(), h.h1.count()) << q;
            std::size_t total = 0;
            for (auto& c : brute.classes) total += c.size;
            EXPECT_EQ(total, (q - 1) * (q - 1)) << q;
        }
    }
}

TEST(Families, SmallCharacteristicRejected) {
    EXPECT_THROW(family_classes_fq(5, 7, Family::first), PreconditionError);
    EXPECT_THROW(family_classes_fq(5, 12, Family::first), PreconditionError);
    EXPECT_THROW(family_classes_fq(3, 31, Family::first), PreconditionError);
}

TEST(Obstruction, ClassifierTable) {
    EXPECT_EQ(obstruction_classifier(5, FieldKind::general).verdict, PlaneVerdict::must_be_plane);
    EXPECT_EQ(obstruction_classifier(6, FieldKind::finite).verdict, PlaneVerdict::must_be_plane);
    EXPECT_EQ(obstruction_classifier(6, FieldKind::real).verdict, PlaneVerdict::must_be_plane);
    EXPECT_EQ(obstruction_classifier(6, FieldKind::general, true).verdict, PlaneVerdict::must_be_plane);
    EXPECT_EQ(obstruction_classifier(6, FieldKind::general).verdict, PlaneVerdict::possibly_obstructed);
    EXPECT_EQ(obstruction_classifier(9, FieldKind::general, false).verdict, PlaneVerdict::possibly_obstructed);
    EXPECT_THROW(obstruction_classifier(3, FieldKind::general), PreconditionError);
}
