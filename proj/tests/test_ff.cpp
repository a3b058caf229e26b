#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rdickson/ff.hpp"

using namespace rdickson;

namespace {

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalError;
}

} // namespace

TEST(MakeField, PrimeFieldHasModulusX)
{
    const FieldCtx f = make_field(5, 1);
    EXPECT_EQ(f.q(), 5u);
    EXPECT_EQ(f.modulus(), Poly::x(5));
}

TEST(MakeField, NineElementFieldUsesXSquaredPlusOne)
{
    const FieldCtx f = make_field(3, 2);
    EXPECT_EQ(f.q(), 9u);
    EXPECT_EQ(f.modulus(), Poly::from_signed(3, {1, 0, 1}));
}

TEST(MakeField, ModulusIsFirstIrreducibleInLowDegreeFirstOrder)
{
    // Brute force: a monic polynomial of degree e <= 3 is irreducible iff it has no root.
    for (u64 p : {3u, 5u, 7u}) {
        for (unsigned e : {2u, 3u}) {
            const u64 count = *checked_pow(p, e);
            for (u64 idx = 0; idx < count; ++idx) {
                std::vector<u64> c(e + 1, 0);
                for (unsigned i = 0, m = static_cast<unsigned>(idx); i < e; ++i, m /= static_cast<unsigned>(p))
                    c[i] = m % p;
                c[e] = 1;
                const Poly f(p, c);
                bool has_root = false;
                for (u64 r = 0; r < p; ++r) has_root = has_root || f(r) == 0;
                if (!has_root) {
                    EXPECT_EQ(make_field(p, e).modulus(), f) << "p=" << p << " e=" << e;
                    break;
                }
            }
        }
    }
}

TEST(MakeField, RejectsBadParameters)
{
    EXPECT_EQ(code_of([] { make_field(2, 1); }), Errc::EvenCharacteristic);
    EXPECT_EQ(code_of([] { make_field(9, 1); }), Errc::NotPrime);
    EXPECT_EQ(code_of([] { make_field(3, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { make_field(3, 40); }), Errc::OrderOverflow);
}

TEST(Arith, SpecExamples)
{
    const FieldCtx f5 = make_field(5, 1);
    EXPECT_EQ(f5.inv(f5.from_residue(2)), f5.from_residue(3));

    const FieldCtx f9 = make_field(3, 2);
    const FieldElement g = f9.generator();
    EXPECT_EQ(f9.mul(g, g), f9.from_residue(2));

    const FieldCtx f7 = make_field(7, 1);
    EXPECT_EQ(f7.pow(f7.from_residue(3), 6), f7.one());
}

TEST(Arith, InverseOfZeroThrows)
{
    const FieldCtx f = make_field(7, 2);
    EXPECT_EQ(code_of([&] { f.inv(f.zero()); }), Errc::DivisionByZero);
}

TEST(Arith, FieldAxiomsOnSamples)
{
    std::mt19937_64 rng(7);
    for (auto [p, e] : {std::pair{3u, 1u}, {3u, 4u}, {5u, 2u}, {7u, 3u}, {11u, 2u}}) {
        const FieldCtx f = make_field(p, e);
        for (int i = 0; i < 200; ++i) {
            const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
            EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            EXPECT_EQ(f.mul(a, b), f.mul(b, a));
            EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
            if (!a.is_zero()) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
        }
    }
}

TEST(Arith, FrobeniusFixesEveryElement)
{
    for (auto [p, e] : {std::pair{3u, 3u}, {5u, 2u}, {7u, 2u}}) {
        const FieldCtx f = make_field(p, e);
        for (const auto& a : enumerate(f)) EXPECT_EQ(f.pow(a, f.q()), a);
    }
}

TEST(Enumerate, OrderAndDistinctness)
{
    const FieldCtx f3 = make_field(3, 1);
    const auto all3 = enumerate(f3);
    ASSERT_EQ(all3.size(), 3u);
    for (u64 i = 0; i < 3; ++i) EXPECT_EQ(all3[i], f3.from_residue(i));

    const FieldCtx f9 = make_field(3, 2);
    const auto all9 = enumerate(f9);
    ASSERT_EQ(all9.size(), 9u);
    for (u64 i = 0; i < 3; ++i) EXPECT_EQ(all9[i], f9.from_residue(i));

    const FieldCtx f = make_field(5, 3);
    std::set<u64> seen;
    for (const auto& a : enumerate(f)) seen.insert(f.index_of(a));
    EXPECT_EQ(seen.size(), f.q());
}

TEST(Legendre, Examples)
{
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 7), -1);
    EXPECT_EQ(legendre(0, 5), 0);
    EXPECT_EQ(legendre(-1, 5), 1);
    EXPECT_EQ(legendre(-1, 7), -1);
}

TEST(SquareRoot, Examples)
{
    const FieldCtx f5 = make_field(5, 1);
    EXPECT_EQ(sqrt_in_field(f5, f5.from_residue(4)), f5.from_residue(2));
    EXPECT_FALSE(sqrt_in_field(f5, f5.from_residue(2)).has_value());
    EXPECT_EQ(sqrt_in_field(f5, f5.zero()), f5.zero());
}

TEST(SquareRoot, AgreesWithLegendreAndTable)
{
    for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
        const FieldCtx f = make_field(p, 1);
        for (u64 a = 1; a < p; ++a)
            EXPECT_EQ(sqrt_in_field(f, f.from_residue(a)).has_value(), legendre(static_cast<std::int64_t>(a), p) == 1);
    }
    const FieldCtx f = make_field(3, 3);
    const SquareRootTable table(f);
    for (const auto& a : enumerate(f)) EXPECT_EQ(table(a), sqrt_in_field(f, a));
}

TEST(SquareRoot, TableRejectsHugeField)
{
    const FieldCtx f = make_field(3, 12);
    EXPECT_EQ(code_of([&] { SquareRootTable t(f, 1000); }), Errc::FieldTooLarge);
}

TEST(Embedding, PrimeFieldConstantsMapToConstants)
{
    const FieldCtx f5 = make_field(5, 1), f25 = make_field(5, 2);
    const Embedding emb = embed_subfield(f5, f25);
    for (u64 c = 0; c < 5; ++c) EXPECT_EQ(emb(f5.from_residue(c)), f25.from_residue(c));
}

TEST(Embedding, GeneratorImageIsRootOfModulus)
{
    const FieldCtx f9 = make_field(3, 2), f81 = make_field(3, 4);
    const Embedding emb = embed_subfield(f9, f81);
    const FieldElement img = emb(f9.generator());
    EXPECT_EQ(f81.add(f81.mul(img, img), f81.one()), f81.zero());
}

TEST(Embedding, IsHomomorphismAndInvertibleOnImage)
{
    std::mt19937_64 rng(11);
    const FieldCtx sub = make_field(7, 2), sup = make_field(7, 4);
    const Embedding emb = embed_subfield(sub, sup);
    for (int i = 0; i < 100; ++i) {
        const auto a = sub.random(rng), b = sub.random(rng);
        EXPECT_EQ(emb(sub.add(a, b)), sup.add(emb(a), emb(b)));
        EXPECT_EQ(emb(sub.mul(a, b)), sup.mul(emb(a), emb(b)));
        EXPECT_EQ(emb.preimage(emb(a)), a);
    }
    EXPECT_EQ(emb(sub.one()), sup.one());
    EXPECT_EQ(emb(sub.zero()), sup.zero());
}

TEST(Embedding, RejectsIncompatibleFields)
{
    EXPECT_EQ(code_of([] { embed_subfield(make_field(3, 2), make_field(5, 2)); }), Errc::CharacteristicMismatch);
    EXPECT_EQ(code_of([] { embed_subfield(make_field(3, 2), make_field(3, 3)); }), Errc::InvalidArgument);
}
