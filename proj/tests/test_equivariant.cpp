#include <gtest/gtest.h>

#include "generators.hpp"
#include "hopf/equivariant.hpp"

namespace {

using hopf::EquivKey;
using hopf::EquivPoly;
using hopf::Int;
using hopf::MotivePoly;

const MotivePoly q = MotivePoly::q();

EquivPoly random_equiv(std::mt19937_64& rng) {
    return {hopf::testing::random_poly(rng, 4, 20), hopf::testing::random_poly(rng, 4, 20)};
}

TEST(EquivPoly, SquareOfTorusSwap) {
    const EquivPoly x{q * q - q, -(q - 1)};
    const EquivPoly expected{(q * q + 1) * (q - 1).pow(2), -(2 * q * (q - 1).pow(2))};
    EXPECT_EQ(x * x, expected);
}

TEST(EquivPoly, ProductRule) {
    const EquivPoly a{q - 1, {}};
    const EquivPoly b{q * q, q};
    EXPECT_EQ(a * b, (EquivPoly{q.pow(3) - q * q, q * q - q}));
}

TEST(EquivPoly, SignSquaresToTrivial) { EXPECT_EQ(EquivPoly::sign(1) * EquivPoly::sign(1), EquivPoly::one()); }

TEST(EquivPoly, Projections) {
    const auto p = EquivPoly{q * q, q}.project();
    EXPECT_EQ(p.plain, q * q + q);
    EXPECT_EQ(p.quotient, q * q);
    EXPECT_EQ(p.twisted, q * q - q);
    const MotivePoly c{3, -1, 2};
    EXPECT_TRUE(EquivPoly({c, c}).twisted().is_zero());
}

TEST(EquivPoly, Rendering) { EXPECT_EQ(EquivPoly({q * q, q}).to_string(), "(q^2)T + (q)N"); }

TEST(EquivCatalog, Examples) {
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::E_sigma1_sigma0, 3), (EquivPoly{q - 1, q - 1}));
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::E_sigma1_sigma0, 4).quotient(), 2 * (q - 1));
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::E_sigma1_sigma0, 1), EquivPoly{});
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::punctured_mu, 2).quotient(), q - 2);
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::torus2_swap, 5), (EquivPoly{q * q - q, -(q - 1)}));
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::gl2_inner, 5), EquivPoly::trivial(hopf::motives::gl2()));
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::pgl2_mod_diag, 1), (EquivPoly{q * q, q}));
    EXPECT_EQ(hopf::equiv_catalog(EquivKey::U_space, 1), (EquivPoly{q * (q - 1).pow(2), q - 1}));
}

TEST(EquivCatalog, PuncturedMuQuotientFloors) {
    for (Int n = 1; n <= 20; ++n) {
        const auto e = hopf::equiv_catalog(EquivKey::punctured_mu, n);
        EXPECT_EQ(e.quotient(), (n / 2) * q - (n * n) / 2) << "n=" << n;
    }
}

TEST(EquivCatalog, KeysRoundTrip) {
    for (auto k : hopf::kAllEquivKeys) EXPECT_EQ(hopf::parse_equiv_key(hopf::equiv_key_name(k)), k);
    EXPECT_EQ(hopf::equiv_catalog("torus_trivial", 3), EquivPoly::trivial(q - 1));
}

TEST(EquivCatalog, Errors) {
    EXPECT_THROW(hopf::parse_equiv_key("E_sigma2"), std::invalid_argument);
    EXPECT_THROW(hopf::equiv_catalog(EquivKey::E_sigma1, 0), std::invalid_argument);
    EXPECT_THROW(hopf::equiv_catalog(EquivKey::E_sigma1, -3), std::invalid_argument);
}

// Plain motives of the cataloged spaces, counted directly.
MotivePoly plain_oracle(EquivKey k, Int n) {
    switch (k) {
        case EquivKey::E_sigma1: return (q - 1) * (q - 2);
        case EquivKey::E_sigma1_sigma0: return (n - 1) * (q - 1);
        case EquivKey::E_sigma1_sigma1: return (q - 1) * (q - n - 1);
        case EquivKey::pgl2_mod_diag: return hopf::motives::pgl2_mod_diag();
        case EquivKey::gl2_inner: return hopf::motives::gl2();
        case EquivKey::torus2_swap: return (q - 1).pow(2);
        case EquivKey::torus_trivial: return q - 1;
        case EquivKey::U_space: return (q - 1) * (q * q - q + 1);
        case EquivKey::mu_pairs_free: return (n - 1) * (n - 2);
        case EquivKey::punctured_mu: return (n - 1) * (q - n - 1);
        case EquivKey::E_minus_mu_blocks: return (q - n - 1) * (q - 2 * n - 1);
    }
    return {};
}

TEST(EquivCatalog, PlainMatchesOrdinaryMotive) {
    for (Int n = 1; n <= 8; ++n) {
        for (auto k : hopf::kAllEquivKeys) {
            EXPECT_EQ(hopf::equiv_catalog(k, n).plain(), plain_oracle(k, n))
                << hopf::equiv_key_name(k) << " n=" << n;
        }
    }
}

TEST(EquivPolyProperty, RingLawsAndIdentity) {
    auto rng = hopf::testing::make_rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_equiv(rng), y = random_equiv(rng), z = random_equiv(rng);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x * EquivPoly::one(), x);
    }
}

TEST(EquivPolyProperty, ProjectionsAreHomomorphisms) {
    auto rng = hopf::testing::make_rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_equiv(rng), y = random_equiv(rng);
        ASSERT_EQ((x * y).plain(), x.plain() * y.plain());
        ASSERT_EQ((x * y).twisted(), x.twisted() * y.twisted());
        ASSERT_EQ((x + y).quotient(), x.quotient() + y.quotient());
    }
}

}  // namespace
