#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ptl/cycalg/cyclic.hpp"
#include "ptl/io/fixtures.hpp"
#include "ptl/projlin/projmatrix.hpp"

using namespace ptl;
using Q = Element<Rationals>;
using PM = ProjMatrix<Rationals>;

namespace {

FixtureBundle& fx() {
    static FixtureBundle b;
    return b;
}

FieldPtr<Rationals> kz() { return fx().field("k_zeta3"); }

PM random_matrix(std::mt19937_64& rng, const FieldPtr<Rationals>& K) {
    std::uniform_int_distribution<int> c(-4, 4);
    for (;;) {
        SquareMatrix<Rationals> m(3, std::vector<Q>(3, Q::zero(K)));
        for (auto& r : m)
            for (auto& x : r) {
                std::vector<mpq_class> co(K->dimension());
                for (auto& v : co) v = c(rng);
                x = Q(K, co);
            }
        if (!determinant(m).is_zero()) return PM(m);
    }
}

MultiPoly<Rationals> random_cubic(std::mt19937_64& rng, const FieldPtr<Rationals>& K) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::string s = "0";
    const char* mons[] = {"X^3", "Y^3", "Z^3", "X*Y*Z", "X^2*Y", "Y^2*Z", "Z^2*X", "X*Y^2"};
    for (auto m : mons) s += " + (" + std::to_string(c(rng)) + " + " + std::to_string(c(rng)) + "*zeta3)*" + m;
    return parse_poly(K, xyz_vars(), s);
}

}  // namespace

TEST(ProjMatrix, ScalarMultiplesAreEqual) {
    auto K = kz();
    std::mt19937_64 rng(1);
    auto z = K->generator();
    for (int i = 0; i < 30; ++i) {
        auto A = random_matrix(rng, K);
        auto rows = A.rows();
        auto s = z * Q::from_int(K, 2 + i) + Q::from_int(K, -1);
        for (auto& r : rows)
            for (auto& x : r) x = x * s;
        EXPECT_EQ(PM(rows), A);
        EXPECT_TRUE((A * A.inverse()).is_identity());
    }
}

TEST(ProjMatrix, PowersAndOrders) {
    auto K = kz();
    auto T = PM(parse_map(K, "[Z : X : Y]"));
    auto U = PM(parse_map(K, "[X : Y : zeta3*Z]"));
    EXPECT_EQ(T.order(), 3u);
    EXPECT_EQ(U.order(), 3u);
    EXPECT_EQ(T.pow(-1), T.inverse());
    EXPECT_EQ(T.pow(4), T);
    EXPECT_EQ((T * U).order(), 3u);
    // Scalar matrices are trivial projectively.
    EXPECT_TRUE(PM::diagonal({K->generator(), K->generator(), K->generator()}).is_identity());
}

TEST(ProjMatrix, CompanionCubeIsScalar) {
    auto K = kz();
    for (auto s : {"2", "7", "zeta3", "3 - zeta3"}) {
        auto a = parse_element(K, s);
        auto C = companion_matrix(a);
        EXPECT_FALSE(C.is_identity());
        EXPECT_TRUE(C.pow(3).is_identity()) << s;
        // The cube of the stored representative is a scalar matrix.
        auto raw = identity_matrix(K, 3);
        for (int i = 0; i < 3; ++i) raw = mat_mul(raw, C.rows());
        EXPECT_TRUE(raw[1][0].is_zero());
        EXPECT_EQ(raw[0][0], raw[1][1]);
        EXPECT_EQ(raw[1][1], raw[2][2]);
    }
}

TEST(ProjMatrix, PermutationClosureIsSymmetricGroup) {
    auto K = kz();
    auto G = group_closure<Rationals>({PM(parse_map(K, "[Y : X : Z]")), PM(parse_map(K, "[Z : X : Y]"))});
    EXPECT_EQ(G.order(), 6u);
    EXPECT_FALSE(G.is_abelian());
}

TEST(ProjMatrix, GroupRTUMatchesMonomialCount) {
    auto K = kz();
    std::vector<PM> gens;
    for (auto n : {"R", "T", "U"}) gens.emplace_back(fx().matrix(n));
    auto G = group_closure(gens);
    // Oracle: permutation matrices with cube-root-of-unity entries, up to scalars.
    auto z = K->generator();
    std::vector<Q> mu{Q::one(K), z, z * z};
    std::set<PM> mono;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    SquareMatrix<Rationals> m(3, std::vector<Q>(3, Q::zero(K)));
                    int e[3] = {a, b, c};
                    for (int i = 0; i < 3; ++i) m[i][p[i]] = mu[e[i]];
                    mono.insert(PM(m));
                }
    EXPECT_EQ(mono.size(), 54u);
    EXPECT_EQ(G.order(), mono.size());
    for (auto& g : G.elements()) EXPECT_TRUE(mono.count(g)) << g.to_string();
}

TEST(Substitution, SlotConvention) {
    auto K = kz();
    auto F = parse_poly(K, xyz_vars(), "X^2*Y + 5*Z^3");
    auto M = parse_map(K, "[Y : Z : X + Y]");
    EXPECT_EQ(substitute_linear(F, M), parse_poly(K, xyz_vars(), "Y^2*Z + 5*(X + Y)^3"));
    EXPECT_THROW(parse_map(K, "[X : Y]"), ParseError);
    EXPECT_THROW(parse_map(K, "[X^2 : Y : Z]"), ParseError);
}

TEST(Substitution, ComposesAsMatrixProduct) {
    auto K = kz();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        auto F = random_cubic(rng, K);
        auto A = random_matrix(rng, K).rows(), B = random_matrix(rng, K).rows();
        EXPECT_EQ(substitute_linear(substitute_linear(F, A), B), substitute_linear(F, mat_mul(A, B)));
    }
}

TEST(Galois, ActionOnMatricesIsMultiplicative) {
    auto L = fx().field("L_cbrt7");
    auto z = L->generator(1), c = L->generator(2);
    GaloisMap<Rationals> s(L, {z, z * c}, 3, "sigma");
    ASSERT_TRUE(s.verified());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto A = random_matrix(rng, L), B = random_matrix(rng, L);
        EXPECT_EQ(galois_on_matrix(s, A * B), galois_on_matrix(s, A) * galois_on_matrix(s, B));
        EXPECT_EQ(galois_on_matrix(s, A.inverse()), galois_on_matrix(s, A).inverse());
    }
    auto D = PM::diagonal({Q::one(L), c, c * c});
    EXPECT_FALSE(galois_on_matrix(s, D) == D);
    auto k = L->parent();
    EXPECT_TRUE(D.restrict_to(k) == std::nullopt);
    EXPECT_TRUE(PM(parse_map(k, "[Z : X : Y]")).embed(L).restrict_to(k).has_value());
}
