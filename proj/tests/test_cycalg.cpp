#include <gtest/gtest.h>

#include <array>

#include "ptl/cycalg/cyclic.hpp"
#include "ptl/io/loaders.hpp"

using namespace ptl;
using Q = Element<Rationals>;
using PM = ProjMatrix<Rationals>;

namespace {

FixtureBundle& fx() {
    static FixtureBundle b;
    return b;
}

json norm_doc(const std::string& name) { return FixtureBundle::load_file(fx().dir() / "norm" / (name + ".json")); }

// Top-level coordinate i of x as an element of the parent field.
Q block(const Q& x, std::size_t i) {
    auto k = x.field()->parent();
    std::size_t dk = k->dimension();
    std::vector<mpq_class> c(x.coeffs().begin() + i * dk, x.coeffs().begin() + (i + 1) * dk);
    return Q(k, c);
}

// Relative norm as the determinant of multiplication by x on the power basis.
Q norm_by_determinant(const Q& x, std::size_t k_depth) {
    auto L = x.field();
    EXPECT_EQ(L->depth(), k_depth + 1);
    auto t = L->generator();
    std::array<std::array<Q, 3>, 3> m;
    Q col = x;
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t r = 0; r < 3; ++r) m[r][c] = block(col, r);
        col = col * t;
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// x / y is the cube of a rational number.
bool rational_cube_ratio(const Q& x, const Q& y) {
    auto r = (x * y.inverse()).restrict_to(x.field()->prefix(0));
    if (!r) return false;
    mpq_class v = r->coeffs()[0];
    mpz_class n, d;
    if (!mpz_root(n.get_mpz_t(), v.get_num().get_mpz_t(), 3)) return false;
    if (!mpz_root(d.get_mpz_t(), v.get_den().get_mpz_t(), 3)) return false;
    return true;
}

}  // namespace

TEST(Norm, FixtureVerdicts) {
    for (auto name : {"cbrt7_7", "cbrt7_8", "cbrt7_zeta3", "cos7_3", "qf_1", "qf_2"}) {
        auto doc = norm_doc(name);
        auto A = load_cyclic_algebra(fx(), doc);
        auto res = norm_triviality(A);
        EXPECT_EQ(std::string(to_string(res.verdict)), doc.at("expect").get<std::string>()) << name;
        if (res.verdict == NormVerdict::trivial) {
            ASSERT_TRUE(res.witness.has_value());
            EXPECT_EQ(norm_by_determinant(*res.witness, A.k_depth), A.a.restrict_to(A.k()).value()) << name;
        } else {
            EXPECT_FALSE(res.obstruction.empty()) << name;
            EXPECT_NE(res.prime, 0u) << name;
        }
    }
}

TEST(Norm, ObstructionPrimes) {
    auto qf2 = norm_triviality(load_cyclic_algebra(fx(), norm_doc("qf_2")));
    EXPECT_EQ(qf2.prime, 2u);
    auto cos3 = norm_triviality(load_cyclic_algebra(fx(), norm_doc("cos7_3")));
    EXPECT_EQ(cos3.prime, 3u);
    auto z = norm_triviality(load_cyclic_algebra(fx(), norm_doc("cbrt7_zeta3")));
    EXPECT_EQ(z.prime, 7u);
}

TEST(Norm, SpecValidation) {
    auto doc = norm_doc("cbrt7_7");
    doc["a"] = "cbrt7";
    EXPECT_THROW(load_cyclic_algebra(fx(), doc), PreconditionError);
    doc["a"] = "0";
    EXPECT_THROW(load_cyclic_algebra(fx(), doc), PreconditionError);
    doc = norm_doc("cbrt7_7");
    doc["sigma"] = json::array({"zeta3^2", "cbrt7"});
    EXPECT_THROW(load_cyclic_algebra(fx(), doc), PreconditionError);
}

TEST(Cocycle, CompanionCocycleVerifies) {
    for (auto name : {"cbrt7_7", "cbrt7_zeta3", "cos7_3", "qf_2"}) {
        auto A = load_cyclic_algebra(fx(), norm_doc(name));
        auto xi = pgl3_cocycle_of(A);
        EXPECT_TRUE(verify_cocycle(xi).ok) << name;
        auto back = classify_standard_sigma_image(xi, 0, A.L->depth(), A.k_depth);
        ASSERT_TRUE(back.has_value()) << name;
        // The value is projective, so a is recovered up to cubes.
        EXPECT_TRUE(rational_cube_ratio(back->a, A.a.restrict_to(A.k()).value())) << name << " " << back->a;
    }
}

TEST(Cocycle, ClassifyAfterRationalChangeOfBasis) {
    auto A = load_cyclic_algebra(fx(), norm_doc("qf_2"));
    auto xi = pgl3_cocycle_of(A);
    auto k = A.k();
    auto P = PM(parse_map(k, "[X + Y : Y : Z - 3*X]"));
    auto conj = xi;
    auto PL = P.embed(A.L);
    conj.values[0] = PL.inverse() * xi.values[0] * PL;
    ASSERT_TRUE(verify_cocycle(conj).ok);
    std::string why;
    EXPECT_FALSE(classify_standard_sigma_image<Rationals>(conj, 0, 1, 0, std::nullopt, &why).has_value());
    EXPECT_FALSE(why.empty());
    auto back = classify_standard_sigma_image<Rationals>(conj, 0, 1, 0, std::optional<PM>(P.inverse()));
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(rational_cube_ratio(back->a, Q::from_int(k, 2))) << back->a;
}

TEST(Cocycle, PlaneObstructionFixtureIsChiThree) {
    auto doc = FixtureBundle::load_file(fx().dir() / "cocycles" / "plane_obstruction_p3.json");
    auto xi = load_cocycle(fx(), doc);
    std::string why;
    auto spec = classify_standard_sigma_image<Rationals>(xi, 0, 1, 0, std::nullopt, &why);
    ASSERT_TRUE(spec.has_value()) << why;
    EXPECT_EQ(spec->a, Q::from_int(spec->k(), 3));
    EXPECT_EQ(norm_triviality(*spec).verdict, NormVerdict::nontrivial);
}
