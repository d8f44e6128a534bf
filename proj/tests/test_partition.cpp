#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pilat/error.hpp"
#include "pilat/lattice_enum.hpp"
#include "pilat/partition.hpp"

using namespace pilat;

namespace {

Partition random_partition(int n, std::mt19937_64& rng) {
    // uniform over label vectors, then canonicalized; not uniform over partitions, which is fine
    std::uniform_int_distribution<int> d(0, n - 1);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& x : labels) x = d(rng);
    return Partition::from_labels(labels);
}

}  // namespace

TEST(Parse, LiteralSyntax) {
    const Partition p = parse("0 1|2", 3);
    ASSERT_EQ(p.block_count(), 2);
    EXPECT_TRUE(p.block(0).contains(0));
    EXPECT_TRUE(p.block(0).contains(1));
    EXPECT_TRUE(p.block(1).contains(2));
}

TEST(Parse, ReordersBlocks) {
    EXPECT_EQ(parse("2|1|0", 3), bottom(3));
    EXPECT_EQ(format(parse("2|1|0", 3)), "0|1|2");
    EXPECT_EQ(format(parse("3 1|2 0", 4)), "0 2|1 3");
}

TEST(Parse, Rejects) {
    EXPECT_THROW(parse("0 1|1 2", 3), ParseError);
    EXPECT_THROW(parse("0 1", 3), ParseError);
    EXPECT_THROW(parse("0 1|2 3", 3), ParseError);
    EXPECT_THROW(parse("0 x|2", 3), ParseError);
    EXPECT_THROW(parse("0||1", 2), ParseError);
}

TEST(Parse, InfersGroundSize) {
    EXPECT_EQ(parse("0 3|1 2").ground_size(), 4);
}

TEST(Parse, RoundTripsEveryPartitionUpToSeven) {
    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [&](const Partition& p) { EXPECT_EQ(parse(format(p), n), p); });
}

TEST(Extremes, BottomAndTop) {
    EXPECT_EQ(format(bottom(3)), "0|1|2");
    EXPECT_EQ(format(top(3)), "0 1 2");
    EXPECT_EQ(bottom(1), top(1));
    EXPECT_EQ(bottom(0), top(0));
}

TEST(Order, Examples) {
    EXPECT_TRUE(leq(parse("0 1|2", 3), parse("0 1 2", 3)));
    EXPECT_FALSE(leq(parse("0 1|2", 3), parse("0 2|1", 3)));
    for_each_partition(5, [](const Partition& p) {
        EXPECT_TRUE(leq(bottom(5), p));
        EXPECT_TRUE(leq(p, top(5)));
    });
}

TEST(Order, MismatchedGroundThrows) {
    EXPECT_THROW(leq(bottom(3), bottom(4)), DomainError);
    EXPECT_THROW(meet(bottom(3), bottom(4)), DomainError);
}

TEST(MeetJoin, Examples) {
    EXPECT_EQ(meet(parse("0 1|2 3", 4), parse("0 2|1 3", 4)), bottom(4));
    EXPECT_EQ(join(parse("0 1|2|3", 4), parse("1 2|0|3", 4)), parse("0 1 2|3", 4));
}

TEST(MeetJoin, MatchOracleOnAllPairsOfPi5) {
    const auto all = oracle::all_partitions(5);
    for (const auto& a : all)
        for (const auto& b : all) {
            const Partition p = oracle::to_partition(a), q = oracle::to_partition(b);
            EXPECT_EQ(oracle::labels_of(meet(p, q)), oracle::meet(a, b));
            EXPECT_EQ(oracle::labels_of(join(p, q)), oracle::join(a, b));
            EXPECT_EQ(leq(p, q), oracle::leq(a, b));
            EXPECT_EQ(covers(p, q), oracle::covers(a, b));
        }
}

TEST(MeetJoin, RandomAgainstOracleAtLargerN) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 16;
        const Partition p = random_partition(n, rng), q = random_partition(n, rng);
        const auto a = oracle::labels_of(p), b = oracle::labels_of(q);
        ASSERT_EQ(oracle::labels_of(meet(p, q)), oracle::meet(a, b));
        ASSERT_EQ(oracle::labels_of(join(p, q)), oracle::join(a, b));
        ASSERT_EQ(leq(p, q), oracle::leq(a, b));
    }
}

TEST(Covers, Examples) {
    EXPECT_TRUE(covers(bottom(3), parse("0 1|2", 3)));
    EXPECT_FALSE(covers(bottom(3), top(3)));
    const Partition p = parse("0 2|1", 3);
    EXPECT_FALSE(covers(p, p));
}

TEST(Covers, UpperCoversAreExactlyTheMerges) {
    const auto all = oracle::all_partitions(5);
    for (const auto& a : all) {
        const Partition p = oracle::to_partition(a);
        std::set<oracle::Labels> expected;
        for (const auto& b : all)
            if (oracle::covers(a, b)) expected.insert(b);
        std::set<oracle::Labels> got;
        for (const auto& q : upper_covers(p)) got.insert(oracle::labels_of(q));
        EXPECT_EQ(got, expected);
        EXPECT_EQ(upper_cover_count(p), expected.size());
        std::size_t lower = 0;
        for (const auto& b : all) lower += oracle::covers(b, a);
        EXPECT_EQ(lower_cover_count(p), lower);
    }
}

TEST(Diag, Examples) {
    EXPECT_EQ(diag(ElementSet{1, 3}, 4), parse("1 3|0|2", 4));
    EXPECT_EQ(diag(ElementSet::range(0, 5), 5), top(5));
    EXPECT_EQ(diag(ElementSet{2}, 3), bottom(3));
    EXPECT_THROW(diag(ElementSet{5}, 3), DomainError);
}

TEST(Labels, FromLabelsCanonicalizes) {
    const std::vector<int> raw{5, 5, 2, 9, 2};
    const Partition p = Partition::from_labels(raw);
    EXPECT_EQ(format(p), "0 1|2 4|3");
    EXPECT_EQ(p.labels(), (std::vector<int>{0, 0, 1, 2, 1}));
    EXPECT_EQ(p.block_of(4), 1);
}

TEST(Labels, LargeGround) {
    std::vector<int> labels(kMaxGround);
    for (int i = 0; i < kMaxGround; ++i) labels[static_cast<std::size_t>(i)] = i % 3;
    const Partition p = Partition::from_labels(labels);
    EXPECT_EQ(p.block_count(), 3);
    EXPECT_EQ(parse(format(p), kMaxGround), p);
    EXPECT_TRUE(leq(p, join(p, top(kMaxGround))));
}
