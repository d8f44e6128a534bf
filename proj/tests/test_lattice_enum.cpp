#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "pilat/error.hpp"
#include "pilat/lattice_enum.hpp"

using namespace pilat;

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(LatticeUniverse::build(0).size(), 1u);
    EXPECT_EQ(LatticeUniverse::build(3).size(), 5u);
    EXPECT_EQ(LatticeUniverse::build(4).size(), 15u);
}

TEST(Enumerate, MatchesOracleListing) {
    for (int n = 0; n <= 8; ++n) {
        const auto expected = oracle::all_partitions(n);
        const auto u = LatticeUniverse::build(n);
        ASSERT_EQ(u.size(), expected.size());
        for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(oracle::labels_of(u[i]), expected[i]) << n << ' ' << i;
    }
}

TEST(Enumerate, EndpointsAndIndex) {
    const auto u = LatticeUniverse::build(6);
    EXPECT_TRUE(u[u.top_index()].is_top());
    EXPECT_TRUE(u[u.bottom_index()].is_bottom());
    for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(u.index_of(u[i]), i);
    for (std::size_t i = 1; i < u.size(); ++i) EXPECT_TRUE(rgs_less(u[i - 1], u[i]));
}

TEST(Enumerate, CapEnforced) {
    Limits limits;
    limits.enumerate = 5;
    EXPECT_THROW(LatticeUniverse::build(6, limits), CapExceeded);
}

TEST(Enumerate, EnvOverride) {
    ::setenv("PILAT_MAX_N", "3", 1);
    const Limits limits = Limits::from_env();
    ::unsetenv("PILAT_MAX_N");
    EXPECT_THROW(LatticeUniverse::build(4, limits), CapExceeded);
    EXPECT_NO_THROW(LatticeUniverse::build(3, limits));
}

TEST(Counts, Examples) {
    EXPECT_EQ(stirling2(5, 2), 15u);
    EXPECT_EQ(bell(3), 5u);
    EXPECT_EQ(bell(4), 15u);
    EXPECT_EQ(bell(0), 1u);
    EXPECT_EQ(bell(25), 4638590332229999353ull);
    EXPECT_THROW(bell(26), OverflowError);
}

TEST(Counts, StirlingMatchesEnumeration) {
    for (int n = 0; n <= 9; ++n) {
        std::vector<std::uint64_t> by_blocks(static_cast<std::size_t>(n) + 1);
        for (const auto& l : oracle::all_partitions(n)) ++by_blocks[static_cast<std::size_t>(oracle::block_count(l))];
        std::uint64_t sum = 0;
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(stirling2(n, k), by_blocks[static_cast<std::size_t>(k)]) << n << ',' << k;
            sum += stirling2(n, k);
        }
        EXPECT_EQ(bell(n), sum);
    }
    for (int n = 10; n <= 12; ++n) {
        std::uint64_t sum = 0;
        for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
        EXPECT_EQ(bell(n), sum);
    }
}

TEST(AtomsCoatoms, Counts) {
    EXPECT_EQ(atoms(4).size(), 6u);
    EXPECT_EQ(coatoms(4).size(), 7u);
    for (int n = 2; n <= 10; ++n) {
        EXPECT_EQ(atoms(n).size(), oracle::binomial(n, 2));
        EXPECT_EQ(coatoms(n).size(), (std::uint64_t{1} << (n - 1)) - 1);
    }
    EXPECT_TRUE(atoms(1).empty());
    EXPECT_TRUE(coatoms(1).empty());
}

TEST(AtomsCoatoms, TwoElementGround) {
    ASSERT_EQ(atoms(2).size(), 1u);
    EXPECT_TRUE(atoms(2)[0].is_top());
    ASSERT_EQ(coatoms(2).size(), 1u);
    EXPECT_TRUE(coatoms(2)[0].is_bottom());
}

TEST(AtomsCoatoms, MatchCoveringRelation) {
    for (int n = 2; n <= 6; ++n) {
        const auto all = oracle::all_partitions(n);
        const oracle::Labels bot = all.back(), tp = all.front();
        std::set<oracle::Labels> a, c;
        for (const auto& l : all) {
            if (oracle::covers(bot, l)) a.insert(l);
            if (oracle::covers(l, tp)) c.insert(l);
        }
        std::set<oracle::Labels> ga, gc;
        for (const auto& p : atoms(n)) ga.insert(oracle::labels_of(p));
        for (const auto& p : coatoms(n)) gc.insert(oracle::labels_of(p));
        EXPECT_EQ(ga, a);
        EXPECT_EQ(gc, c);
    }
}
