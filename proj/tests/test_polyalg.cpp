#include <gtest/gtest.h>

#include <random>

#include "ptl/exactfield/finite.hpp"
#include "ptl/io/fixtures.hpp"
#include "ptl/polyalg/groebner.hpp"
#include "ptl/polyalg/linspan.hpp"
#include "ptl/polyalg/smooth.hpp"

using namespace ptl;
using P = MultiPoly<Rationals>;
using Q = Element<Rationals>;

namespace {

FieldPtr<Rationals> QQ() {
    static auto K = Tower<Rationals>::make_base(Rationals{});
    return K;
}

P poly(const std::string& s) { return parse_poly(QQ(), xyz_vars(), s); }

P random_form(std::mt19937_64& rng, unsigned d, int terms) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<unsigned> e(0, d);
    P f = P::constant(Q::zero(QQ()), xyz_vars());
    for (int t = 0; t < terms; ++t) {
        unsigned a = e(rng), b = std::uniform_int_distribution<unsigned>(0, d - a)(rng);
        Exponents ex{};
        ex[0] = static_cast<std::uint16_t>(a);
        ex[1] = static_cast<std::uint16_t>(b);
        ex[2] = static_cast<std::uint16_t>(d - a - b);
        f = f + P::monomial(Q::from_int(QQ(), c(rng)), ex, xyz_vars());
    }
    return f;
}

std::vector<Q> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-7, 7);
    return {Q::from_int(QQ(), c(rng)), Q::from_rational(QQ(), mpq_class(c(rng), 3)), Q::from_int(QQ(), c(rng))};
}

// Plain Gaussian elimination on rational rows.
std::size_t rank_oracle(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST(MultiPoly, ArithmeticAgreesWithEvaluation) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto f = random_form(rng, 3, 5), g = random_form(rng, 2, 4);
        auto pt = random_point(rng);
        EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
        EXPECT_EQ((f + f * g).evaluate(pt), f.evaluate(pt) + f.evaluate(pt) * g.evaluate(pt));
        EXPECT_EQ(f.pow(2).evaluate(pt), f.evaluate(pt) * f.evaluate(pt));
    }
}

TEST(MultiPoly, EulerIdentityForDerivatives) {
    std::mt19937_64 rng(4);
    auto X = P::variable(QQ(), xyz_vars(), 0), Y = P::variable(QQ(), xyz_vars(), 1), Z = P::variable(QQ(), xyz_vars(), 2);
    for (int i = 0; i < 50; ++i) {
        auto f = random_form(rng, 5, 6);
        if (f.is_zero()) continue;
        auto lhs = X * f.derivative(0) + Y * f.derivative(1) + Z * f.derivative(2);
        EXPECT_EQ(lhs, f.scaled(Q::from_int(QQ(), 5)));
    }
}

TEST(MultiPoly, ParseRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        auto f = random_form(rng, 4, 6);
        EXPECT_EQ(poly(f.to_string()), f) << f.to_string();
    }
    EXPECT_EQ(poly("(X + Y)^2 - 2*X*Y"), poly("X^2 + Y^2"));
    EXPECT_THROW(poly("X^2 +"), ParseError);
    EXPECT_THROW(poly("W^2"), ParseError);
}

TEST(MultiPoly, ComposeMatchesSubstitutedEvaluation) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        auto f = random_form(rng, 3, 5);
        std::vector<P> args{random_form(rng, 1, 3), random_form(rng, 1, 3), random_form(rng, 1, 3)};
        auto pt = random_point(rng);
        std::vector<Q> inner{args[0].evaluate(pt), args[1].evaluate(pt), args[2].evaluate(pt)};
        EXPECT_EQ(f.compose(args).evaluate(pt), f.evaluate(inner));
    }
}

TEST(Groebner, CombinationsReduceToZero) {
    std::vector<P> gens{poly("X^2 - Y*Z"), poly("X*Y - Z^2")};
    auto B = buchberger(gens);
    EXPECT_TRUE(is_groebner(B));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        auto h = random_form(rng, 2, 3) * gens[0] + random_form(rng, 2, 3) * gens[1];
        EXPECT_TRUE(normal_form(h, B).is_zero());
    }
    EXPECT_FALSE(normal_form(poly("X^3"), B).is_zero());
    EXPECT_FALSE(ideal_contains(B, {poly("Y^2")}));
}

TEST(Groebner, IdealEqualityIgnoresGenerators) {
    std::vector<P> A{poly("X^2 - Y*Z"), poly("X*Y - Z^2")};
    std::vector<P> B{poly("X^2 - Y*Z + X*Y - Z^2"), poly("X*Y - Z^2")};
    EXPECT_TRUE(ideal_equal(A, B));
    EXPECT_FALSE(ideal_equal(A, {poly("X^2 - Y*Z")}));
    EXPECT_EQ(same_degree_span_equal(A, B), std::optional<bool>(true));
}

TEST(RowSpace, RankMatchesPlainElimination) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 1 + t % 7, cols = 6;
        std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
        RowSpace<Rationals> rs(QQ(), cols);
        for (auto& r : m) {
            std::vector<Q> v;
            for (auto& x : r) {
                x = c(rng) * (t % 3 == 0 ? 0 : 1) + (c(rng) > 0 ? c(rng) : 0);
                v.push_back(Q::from_rational(QQ(), x));
            }
            rs.insert(v);
        }
        EXPECT_EQ(rs.rank(), rank_oracle(m));
        for (auto& r : m) {
            std::vector<Q> v;
            for (auto& x : r) v.push_back(Q::from_rational(QQ(), x));
            EXPECT_TRUE(rs.contains(v));
        }
    }
}

TEST(Smooth, FermatCurvesAreSmooth) {
    for (unsigned d : {4u, 5u, 6u}) {
        std::string s = "X^" + std::to_string(d) + " + Y^" + std::to_string(d) + " + Z^" + std::to_string(d);
        auto cert = is_smooth(PlaneCurve<Rationals>(poly(s)));
        EXPECT_TRUE(cert.smooth) << d;
        EXPECT_GT(cert.witnessed_N(), 0u);
        EXPECT_LE(cert.witnessed_N(), cert.bound);
    }
}

TEST(Smooth, SquareOfCubicIsSingular) {
    auto cert = is_smooth(PlaneCurve<Rationals>(poly("(X^3 + Y^3 + Z^3)^2")));
    EXPECT_FALSE(cert.smooth);
}

TEST(Smooth, LemniscateNodeDetected) {
    auto F = poly("(X^2 + Y^2)^2 - Z^2*(X^2 - Y^2)");
    std::vector<Q> origin{Q::zero(QQ()), Q::zero(QQ()), Q::one(QQ())};
    for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(F.derivative(v).evaluate(origin).is_zero());
    auto cert = is_smooth(PlaneCurve<Rationals>(F));
    EXPECT_FALSE(cert.smooth);
    EXPECT_FALSE(cert.corroboration.empty());
}

TEST(Smooth, CharacteristicDividingDegreeRejected) {
    auto F5 = prime_field(5);
    auto F = parse_poly(F5, xyz_vars(), "X^5 + Y^5 + Z^5");
    EXPECT_THROW(is_smooth(PlaneCurve<PrimeField>(F)), PreconditionError);
    auto G = parse_poly(F5, xyz_vars(), "X^4 + Y^4 + Z^4");
    EXPECT_TRUE(is_smooth(PlaneCurve<PrimeField>(G)).smooth);
}

TEST(PlaneCurve, RejectsNonCurves) {
    EXPECT_THROW(PlaneCurve<Rationals>(poly("X^4 + Y")), PreconditionError);
    EXPECT_THROW(PlaneCurve<Rationals>(poly("X^3 + Y^3 + Z^3")), PreconditionError);
    EXPECT_EQ(PlaneCurve<Rationals>(poly("X^6 + Y^6 + Z^6")).genus(), 10u);
}
