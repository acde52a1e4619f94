#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ptl/canonbs/bs.hpp"
#include "ptl/canonbs/reduce.hpp"
#include "ptl/io/loaders.hpp"

using namespace ptl;
using Q = Element<Rationals>;

namespace {

FixtureBundle& fx() {
    static FixtureBundle b;
    return b;
}

const BsInputs<Rationals>& inputs() {
    static BsInputs<Rationals> in = load_bs_inputs(fx());
    return in;
}

const HasseInputs& hasse() {
    static HasseInputs in = load_hasse_inputs(fx());
    return in;
}

Q random_element(std::mt19937_64& rng, const FieldPtr<Rationals>& K) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<mpq_class> co(K->dimension());
    for (auto& v : co) v = c(rng);
    return Q(K, co);
}

// Exponent e with r^((q-1)/3) = zeta^e, by plain modular arithmetic.
unsigned cube_class_exponent(std::uint64_t r, std::uint64_t zeta, std::uint64_t q) {
    std::uint64_t t = powmod(r % q, (q - 1) / 3, q);
    for (unsigned e = 0; e < 3; ++e)
        if (powmod(zeta, e, q) == t) return e;
    return 99;
}

}  // namespace

TEST(Veronese, QuadricsVanishOnEmbeddedPoints) {
    auto K = fx().field("k_zeta3");
    auto S = veronese_quadrics(K);
    ASSERT_EQ(S.size(), 13u);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        std::array<Q, 3> p{random_element(rng, K), random_element(rng, K), random_element(rng, K)};
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
        auto w = veronese_embed(p);
        std::vector<Q> pt(w.begin(), w.end());
        pt.push_back(Q::zero(K));
        for (std::size_t j = 0; j < S.size(); ++j) EXPECT_TRUE(S.forms[j].evaluate(pt).is_zero()) << S.labels[j];
    }
}

TEST(Veronese, QuadricSpaceDimensions) {
    auto K = Tower<Rationals>::make_base(Rationals{});
    QuadricCoords qc(0);
    EXPECT_EQ(qc.span(veronese_quadrics(K).forms, K).rank(), 13u);
    // Quadrics vanishing on the surface: 55 quadrics, 28 sextics, all hit.
    MonomialIndex sextics(3, 6);
    std::vector<MultiPoly<Rationals>> images;
    MonomialIndex quad(10, 2);
    for (auto& m : quad.monomials()) {
        Exponents e = m;
        images.push_back(veronese_pullback(MultiPoly<Rationals>::monomial(Q::one(K), e, p9_vars())));
    }
    RowSpace<Rationals> rs(K, 84);
    MonomialIndex plane(4, 6);
    for (auto& f : images) rs.insert(coefficient_vector(f, plane, K));
    EXPECT_EQ(quad.size(), 55u);
    EXPECT_EQ(rs.rank(), sextics.size());
}

TEST(Veronese, CanonicalIdealPullsBackToSextic) {
    auto K = fx().field("k_zeta3");
    EXPECT_TRUE(verify_canonical<Rationals>(canonical_ideal<Rationals>(K, std::nullopt), std::nullopt).ok);
    auto a3 = std::optional<Q>(Q::from_int(K, 3));
    EXPECT_TRUE(verify_canonical(canonical_ideal(K, a3), a3).ok);
    auto S = canonical_ideal(K, a3);
    EXPECT_FALSE(verify_canonical(S, std::optional<Q>(Q::from_int(K, 4))).ok);
}

TEST(Veronese, ExcludedParameters) {
    auto K = fx().field("k_zeta3");
    for (long bad : {-10L, -2L, -1L, 0L, 2L})
        EXPECT_THROW(canonical_ideal(K, std::optional<Q>(Q::from_int(K, bad))), ExcludedParameter) << bad;
    try {
        check_parameter(Q::from_int(K, 2));
        FAIL() << "a = 2 accepted";
    } catch (const ExcludedParameter& e) {
        EXPECT_NE(std::string(e.what()).find("singular"), std::string::npos);
    }
    EXPECT_NO_THROW(check_parameter(Q::from_int(K, 1)));
}

TEST(Veronese, SystemRejectsNonQuadrics) {
    auto K = fx().field("k_zeta3");
    QuadricSystem<Rationals> S{K, {}, {}, Provenance::veronese};
    EXPECT_THROW(S.add(p9_parse(K, "w1^3"), "cubic"), PreconditionError);
    EXPECT_THROW(S.add(p9_parse(K, "w1"), "linear"), PreconditionError);
    EXPECT_NO_THROW(S.add(p9_parse(K, "a*w1*w2"), "ok"));
}

TEST(Descent, SplitReassemblesRandomForms) {
    auto L = inputs().L;
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> idx(1, 10);
    for (int i = 0; i < 200; ++i) {
        auto g = MultiPoly<Rationals>::constant(Q::zero(L), p9_vars());
        for (int t = 0; t < 4; ++t) {
            Exponents e{};
            ++e[static_cast<std::size_t>(idx(rng) - 1)];
            ++e[static_cast<std::size_t>(idx(rng) - 1)];
            g = g + MultiPoly<Rationals>::monomial(random_element(rng, L), e, p9_vars());
        }
        auto f = descent_split(g);
        for (auto& fi : f) EXPECT_EQ(fi.field()->depth(), L->depth() - 1);
        auto chk = check_descent(g, f, inputs().zeta);
        EXPECT_TRUE(chk.reassembly);
        EXPECT_TRUE(chk.ideals_equal);
    }
}

TEST(BrauerSeveri, GeneratedAndPrintedSpans) {
    auto res = build_bs(inputs());
    const auto& r = res.report;
    EXPECT_TRUE(r.descent_ok);
    EXPECT_TRUE(r.galois_closed);
    EXPECT_TRUE(r.pullback_ok);
    EXPECT_EQ(r.generated_dim, 21u);
    EXPECT_EQ(r.printed_dim, 18u);
    EXPECT_EQ(r.union_dim, 26u);
    EXPECT_EQ(r.printed_outside, (std::vector<std::string>{"P4", "P6", "P13", "P15", "P16", "P17"}));
    EXPECT_FALSE(r.spans_equal);
}

TEST(BrauerSeveri, IdentityControl) {
    auto in = inputs();
    in.phi = identity_matrix(in.L, 10);
    in.printed.clear();
    auto res = build_bs(in);
    EXPECT_EQ(res.system.size(), 13u);
    EXPECT_EQ(res.report.generated_dim, 13u);
    EXPECT_TRUE(res.report.pullback_ok);
}

TEST(BrauerSeveri, SpanContainsDescendedQuadric) {
    auto res = build_bs(inputs());
    auto k = inputs().L->parent();
    QuadricCoords qc(0);
    auto span = qc.span(res.system.forms, k);
    auto f = p9_parse(k, "w1*w2 - zeta3*w5*w9 - zeta3*w6*w8 - 7*zeta3*w7*w10");
    EXPECT_TRUE(span.contains(qc.vec(f, k)));
    EXPECT_FALSE(span.contains(qc.vec(p9_parse(k, "w1*w2"), k)));
}

TEST(BrauerSeveri, TamperedMatrixDetected) {
    auto in = inputs();
    in.phi[1][1] = in.phi[1][1] + Q::one(in.L);
    bool clean = false;
    try {
        auto r = build_bs(in).report;
        clean = r.descent_ok && r.galois_closed && r.pullback_ok && r.generated_dim == 21;
    } catch (const Error&) {
    }
    EXPECT_FALSE(clean);
}

TEST(Twist, ExtraEquationMatchesPrinted) {
    auto k = inputs().L->parent();
    auto sym = build_twist_p9<Rationals>(inputs(), std::nullopt);
    EXPECT_TRUE(sym.report.matches_printed);
    EXPECT_GT(sym.report.extra_components, 0u);
    auto a3 = build_twist_p9(inputs(), std::optional<Q>(Q::from_int(k, 3)));
    EXPECT_TRUE(a3.report.matches_printed);
    EXPECT_THROW(build_twist_p9(inputs(), std::optional<Q>(Q::from_int(k, 0))), ExcludedParameter);
}

TEST(Reduction, CubeClassExponentMatchesModularOracle) {
    for (std::uint64_t q : {31ull, 37ull, 43ull, 61ull, 67ull, 73ull, 79ull, 157ull}) {
        auto rep = reduce_and_verify_fq(hasse(), mpq_class(3), q);
        ASSERT_EQ(rep.choices.size(), 2u) << q;
        for (auto& ch : rep.choices) {
            auto zeta = std::stoull(ch.zeta);
            EXPECT_EQ(ch.e, cube_class_exponent(7, zeta, q)) << q << " zeta " << zeta;
            EXPECT_EQ(ch.frobenius_shift, ((q - 1) / 3) % 3) << q;
        }
        EXPECT_EQ(rep.group_order, 54u) << q;
        EXPECT_GE(rep.verified_count(), 1u) << q;
    }
}

TEST(Reduction, ThirtyOneSelectsOneChoice) {
    auto rep = reduce_and_verify_fq(hasse(), mpq_class(3), 31);
    const auto* ch = rep.selected();
    ASSERT_NE(ch, nullptr);
    EXPECT_EQ(ch->zeta, "25");
    EXPECT_EQ(ch->e, 1u);
    EXPECT_TRUE(ch->in_group);
    EXPECT_TRUE(ch->smooth);
    EXPECT_TRUE(ch->matches_printed_companion);
    // The printed model differs from the computed one at two monomials.
    std::vector<std::string> where;
    for (auto& d : ch->model_diff) where.push_back(d.substr(0, d.find(':')));
    std::sort(where.begin(), where.end());
    EXPECT_EQ(where, (std::vector<std::string>{"x^2*y^3*z*a", "x^4*y^2"}));
    EXPECT_FALSE(ch->printed_proportional);
    const auto& other = rep.choices[0].zeta == "25" ? rep.choices[1] : rep.choices[0];
    EXPECT_EQ(other.e, 2u);
    EXPECT_FALSE(other.verified());
}

TEST(Reduction, SecondPowerCocycle) {
    for (std::uint64_t q : {43ull, 61ull, 79ull}) {
        auto rep = reduce_and_verify_fq(hasse(), mpq_class(3), q);
        const auto* ch = rep.selected();
        ASSERT_NE(ch, nullptr) << q;
        EXPECT_EQ(ch->e, 2u) << q;
        EXPECT_TRUE(ch->matches_companion) << q;
        EXPECT_FALSE(ch->matches_printed_companion) << q;
    }
}

TEST(Reduction, TrivialAndSplitCases) {
    auto cube = reduce_and_verify_fq(hasse(), mpq_class(3), 157);
    for (auto& ch : cube.choices) EXPECT_TRUE(ch.trivial_twist);
    auto split = reduce_and_verify_fq(hasse(), mpq_class(3), 37);
    EXPECT_EQ(split.verified_count(), 2u);
    for (auto& ch : split.choices) {
        EXPECT_TRUE(ch.eta_in_base);
        EXPECT_TRUE(ch.cocycle_trivial);
    }
    EXPECT_EQ(split.selected(), nullptr);
    EXPECT_NE(split.best(), nullptr);
}

TEST(Reduction, PreconditionsEnforced) {
    EXPECT_THROW(reduce_and_verify_fq(hasse(), mpq_class(3), 7), PreconditionError);
    EXPECT_THROW(reduce_and_verify_fq(hasse(), mpq_class(3), 29), PreconditionError);
    EXPECT_THROW(reduce_and_verify_fq(hasse(), mpq_class(3), 32), PreconditionError);
    EXPECT_THROW(reduce_and_verify_fq(hasse(), mpq_class(2), 31), ExcludedParameter);
    // 33 = 2 mod 31.
    EXPECT_THROW(reduce_and_verify_fq(hasse(), mpq_class(33), 31), ExcludedParameter);
}
