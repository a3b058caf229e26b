#include <gtest/gtest.h>

#include "rdickson/dickson.hpp"
#include "rdickson/permcheck.hpp"

using namespace rdickson;

TEST(Exhaustive, Translation)
{
    const FieldCtx f = make_field(5, 1);
    const auto r = is_pp_exhaustive(f, [&](const FieldElement& x) { return f.add(x, f.one()); });
    EXPECT_TRUE(r.is_pp);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.evaluations, 5u);
}

TEST(Exhaustive, SquareWitnessIsFirstCollision)
{
    const FieldCtx f = make_field(5, 1);
    const auto r = is_pp_exhaustive(f, [&](const FieldElement& x) { return f.square(x); });
    ASSERT_FALSE(r.is_pp);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->first, f.from_residue(2));
    EXPECT_EQ(r.witness->second, f.from_residue(3));
}

TEST(Exhaustive, SmallDicksonNotPermutation)
{
    const FieldCtx f = make_field(3, 1);
    const auto r = is_pp_exhaustive(f, [&](const FieldElement& x) { return rdk_eval_rec(f, {4, 0, 3}, x); });
    EXPECT_FALSE(r.is_pp);
    EXPECT_EQ(r.witness->first, f.zero());
    EXPECT_EQ(r.witness->second, f.from_residue(2));
}

TEST(Exhaustive, WitnessIndependentOfThreads)
{
    const FieldCtx f = make_field(3, 9);
    auto sq = [&](const FieldElement& x) { return f.mul(f.square(x), x); };
    auto quad = [&](const FieldElement& x) { return f.add(f.square(x), x); };
    const auto a1 = is_pp_exhaustive(f, sq, 1), a4 = is_pp_exhaustive(f, sq, 4);
    EXPECT_EQ(a1.is_pp, a4.is_pp);
    const auto b1 = is_pp_exhaustive(f, quad, 1), b4 = is_pp_exhaustive(f, quad, 4);
    ASSERT_FALSE(b1.is_pp);
    EXPECT_EQ(b1.witness, b4.witness);
}

TEST(Exhaustive, RejectsFieldsAboveCap)
{
    const FieldCtx f = make_field(3, 13);
    try {
        is_pp_exhaustive(f, [](const FieldElement& x) { return x; });
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldTooLarge);
    }
}

TEST(Monomial, Examples)
{
    EXPECT_FALSE(is_pp_monomial(3, 7));
    EXPECT_TRUE(is_pp_monomial(5, 7));
    const FieldCtx f7 = make_field(7, 1);
    EXPECT_TRUE(is_pp_exhaustive(f7, [&](const FieldElement& x) { return f7.pow(x, 5); }).is_pp);
    for (u64 q : {3u, 9u, 25u, 121u}) EXPECT_TRUE(is_pp_monomial(1, q));
}

TEST(Monomial, AgreesWithExhaustive)
{
    for (auto [p, e] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
        const FieldCtx f = make_field(p, e);
        for (u64 n = 1; n <= 60; ++n)
            EXPECT_EQ(is_pp_monomial(n, f.q()),
                      is_pp_exhaustive(f, [&](const FieldElement& x) { return f.pow(x, n); }).is_pp);
    }
}

TEST(Equivalence, Examples)
{
    const FieldCtx f = make_field(3, 1);
    auto cube2 = [&](const FieldElement& x) { return f.scale(f.pow(x, 3), 2); };
    const auto a = pp_equivalent(f, [&](const FieldElement& x) { return rdk_eval_rec(f, {6, 0, 3}, x); }, cube2);
    EXPECT_TRUE(a.f_pp);
    EXPECT_TRUE(a.g_pp);
    EXPECT_TRUE(a.equivalent);

    auto sq = [&](const FieldElement& x) { return f.square(x); };
    const auto b = pp_equivalent(f, [&](const FieldElement& x) { return rdk_eval_rec(f, {4, 0, 3}, x); }, sq);
    EXPECT_FALSE(b.f_pp);
    EXPECT_FALSE(b.g_pp);
    EXPECT_TRUE(b.equivalent);

    EXPECT_TRUE(pp_equivalent(f, sq, sq).equivalent);
}

TEST(Equivalence, ReducedPolynomialForSmallStructuredIndices)
{
    for (auto [p, e] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}}) {
        const FieldCtx f = make_field(p, e);
        for (u64 k = 0; k < p; ++k)
            for (std::vector<unsigned> ls : {std::vector<unsigned>{1, 0}, {2, 1, 0}, {1, 1, 0, 0}}) {
                const PrimePowerSum s(p, ls);
                const SparsePoly g = reduced_pp_poly(s, k);
                const auto r = pp_equivalent(
                    f, [&](const FieldElement& x) { return rdk_eval_matrix(f, {s.n(), k, p}, x); },
                    [&](const FieldElement& x) { return g.evaluate(f, x); });
                EXPECT_TRUE(r.equivalent) << "p=" << p << " e=" << e << " k=" << k << " n=" << s.n();
            }
    }
}
