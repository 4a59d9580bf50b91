#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kleinpencil/cyclotomic.hpp"

using namespace kleinpencil;

namespace {

FieldCtxPtr ctx84() {
    static FieldCtxPtr ctx = FieldCtx::create(84);
    return ctx;
}

CycNum zeta(long k) { return CycNum::root_of_unity(ctx84(), 84, k); }

CycNum random_elt(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> keep(0, 3);
    std::vector<Rational> c(ctx84()->degree(), Rational(0));
    for (auto& x : c) {
        if (keep(rng) == 0) x = Rational(num(rng), den(rng));
    }
    return CycNum(ctx84(), c);
}

}  // namespace

TEST_CASE("conductor 84 context") {
    auto ctx = ctx84();
    CHECK(ctx->conductor() == 84);
    CHECK(ctx->degree() == 24);
    // Phi_84 = x^24 + x^22 - x^18 - x^16 + x^12 - x^8 - x^6 + x^2 + 1.
    const std::vector<long> expected = {1, 0, 1,  0, 0, 0, -1, 0, -1, 0, 0, 0, 1,
                                        0, 0, 0, -1, 0, -1, 0, 0, 0, 1,  0, 1};
    const auto& got = ctx->cyclotomic_coeffs();
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("zeta has exact order 84") {
    auto one = CycNum::one(ctx84());
    CHECK(zeta(1).pow(84) == one);
    for (unsigned q : {2u, 3u, 7u}) CHECK(zeta(1).pow(84 / q) != one);
}

TEST_CASE("special subfield elements") {
    auto ctx = ctx84();
    auto one = CycNum::one(ctx);
    CycNum i = CycNum::root_of_unity(ctx, 4, 1);
    CHECK(i == zeta(21));
    CHECK(i * i == -one);
    CycNum w = CycNum::root_of_unity(ctx, 3, 1);
    CHECK(w == zeta(28));
    CHECK(one + w + w * w == CycNum::zero(ctx));
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    CHECK(l == zeta(12));
    CHECK(l.pow(7) == one);
    CHECK(l != one);
}

TEST_CASE("quadratic Gauss period squares to -7") {
    auto ctx = ctx84();
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    CycNum g = l + l.pow(2) + l.pow(4) - l.pow(3) - l.pow(5) - l.pow(6);
    CHECK(g * g == CycNum::from_int(ctx, -7));
}

TEST_CASE("inverse of 1 + w is -w") {
    auto ctx = ctx84();
    CycNum w = CycNum::root_of_unity(ctx, 3, 1);
    CycNum v = CycNum::one(ctx) + w;
    CHECK(v.inverse() == -w);
    CHECK(v * v.inverse() == CycNum::one(ctx));
}

TEST_CASE("inverse and division") {
    auto ctx = ctx84();
    CHECK_THROWS_AS(CycNum::zero(ctx).inverse(), std::domain_error);
    CycNum a = zeta(5) + CycNum::from_rational(ctx, Rational(3, 2));
    CHECK(a * a.inverse() == CycNum::one(ctx));
    CycNum b = zeta(17) - CycNum::from_int(ctx, 2);
    CHECK((a / b) * b == a);
    CHECK(zeta(1).pow(-1) == zeta(83));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20260822);
    auto ctx = ctx84();
    auto zero = CycNum::zero(ctx);
    auto one = CycNum::one(ctx);
    for (int trial = 0; trial < 500; ++trial) {
        CycNum a = random_elt(rng), b = random_elt(rng), c = random_elt(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == zero);
        CHECK(a * one == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
}

TEST_CASE("rational detection") {
    auto ctx = ctx84();
    CycNum r = CycNum::from_rational(ctx, Rational(-22, 7));
    CHECK(r.is_rational());
    CHECK(r.rational_part() == Rational(-22, 7));
    CHECK(!zeta(1).is_rational());
    CHECK(zeta(0).is_rational());
}

TEST_CASE("prime embedding at 337") {
    auto ctx = ctx84();
    auto emb = PrimeEmbedding::make(ctx, 337);
    CHECK(emb.zeta_image() == 227);
    CHECK(emb.reduce(zeta(1)) == 227);
    CHECK(emb.reduce(CycNum::root_of_unity(ctx, 7, 1)) == 175);
    CHECK(emb.reduce(CycNum::root_of_unity(ctx, 3, 1)) == 128);
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    CycNum g = l + l.pow(2) + l.pow(4) - l.pow(3) - l.pow(5) - l.pow(6);
    CHECK(emb.reduce(g * g) == 330);  // -7 mod 337
}

TEST_CASE("prime embedding is a ring homomorphism") {
    std::mt19937 rng(7);
    auto emb = PrimeEmbedding::make(ctx84(), 337);
    const std::uint64_t p = 337;
    for (int trial = 0; trial < 100; ++trial) {
        CycNum a = random_elt(rng), b = random_elt(rng);
        std::uint64_t ra = emb.reduce(a), rb = emb.reduce(b);
        CHECK(emb.reduce(a + b) == (ra + rb) % p);
        CHECK(emb.reduce(a * b) == (ra * rb) % p);
    }
}

TEST_CASE("bad primes are rejected") {
    auto ctx = ctx84();
    CHECK_THROWS_AS(PrimeEmbedding::make(ctx, 7), bad_prime_error);
    CHECK_THROWS_AS(PrimeEmbedding::make(ctx, 338), bad_prime_error);
    CHECK_THROWS_AS(PrimeEmbedding::make(ctx, 85), bad_prime_error);
    auto emb = PrimeEmbedding::make(ctx, 337);
    CHECK_THROWS_AS(emb.reduce(CycNum::from_rational(ctx, Rational(1, 337))),
                    bad_prime_error);
}

TEST_CASE("good prime ladder") {
    CHECK(next_good_prime(84, 1) == 337);
    CHECK(next_good_prime(84, 337) == 421);
    CHECK(next_good_prime(84, 421) == 673);
    CHECK(next_good_prime(84, 673) == 757);
}

TEST_CASE("embeddings at later primes agree on identities") {
    auto ctx = ctx84();
    CycNum l = CycNum::root_of_unity(ctx, 7, 1);
    CycNum g = l + l.pow(2) + l.pow(4) - l.pow(3) - l.pow(5) - l.pow(6);
    for (std::uint64_t p : {421ull, 673ull, 757ull}) {
        auto emb = PrimeEmbedding::make(ctx, p);
        CHECK(emb.reduce(g * g) == p - 7);
        CHECK(mod_pow(emb.zeta_image(), 84, p) == 1);
        for (unsigned q : {2u, 3u, 7u}) CHECK(mod_pow(emb.zeta_image(), 84 / q, p) != 1);
    }
}

TEST_CASE("context with non-default conductor") {
    auto ctx = FieldCtx::create(12);
    CHECK(ctx->degree() == 4);
    CycNum i = CycNum::root_of_unity(ctx, 4, 1);
    CHECK(i * i == -CycNum::one(ctx));
    CHECK_THROWS(CycNum::root_of_unity(ctx, 7, 1));
}
