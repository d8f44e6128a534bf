#include <gtest/gtest.h>

#include "pilat/cardinal.hpp"
#include "pilat/cardinal_expr.hpp"
#include "pilat/error.hpp"

using namespace pilat;

namespace {

Cardinal A(const char* index) { return Cardinal::aleph(parse_ordinal(index)); }
Cardinal F(std::uint64_t n) { return Cardinal::finite(n); }
const ContinuumModel kGch = ContinuumModel::gch();

ContinuumModel easton() {
    return ContinuumModel::custom({{Ordinal::finite(1), Ordinal::finite(3)}, {Ordinal::finite(2), Ordinal::finite(3)}});
}

std::string eval(const std::string& e, const ContinuumModel& m = kGch) { return to_string(evaluate_expression(e, m)); }

}  // namespace

TEST(CardinalBasics, OrderAndText) {
    EXPECT_LT(F(1000000), A("0"));
    EXPECT_LT(A("w"), A("w+1"));
    EXPECT_EQ(to_string(A("w+1")), "aleph(w+1)");
    EXPECT_EQ(to_string(F(7)), "7");
    EXPECT_EQ(successor(A("w")), A("w+1"));
}

TEST(CardinalBasics, Cofinality) {
    EXPECT_EQ(cofinality(A("0")), A("0"));
    EXPECT_EQ(cofinality(A("1")), A("1"));
    EXPECT_EQ(cofinality(A("w")), A("0"));
    EXPECT_EQ(cofinality(A("w*2")), A("0"));
    EXPECT_EQ(cofinality(A("w+1")), A("w+1"));
    EXPECT_TRUE(is_regular(A("3")));
    EXPECT_FALSE(is_regular(A("w^2")));
}

TEST(SumProduct, Examples) {
    EXPECT_EQ(card_sum_family(A("0"), F(2)), A("0"));
    EXPECT_EQ(card_sum_family(A("0"), A("1")), A("1"));
    EXPECT_EQ(card_sum_family(A("w"), A("3")), A("w"));
    EXPECT_THROW(card_sum_family(F(2), F(3)), DomainError);
    EXPECT_EQ(card_tarski_product(A("0"), A("w"), kGch).value(), A("w+1"));
    EXPECT_EQ(card_tarski_product(A("0"), A("1"), kGch).value(), A("1"));
    EXPECT_EQ(card_tarski_product(A("1"), A("1"), kGch).value(), A("2"));
}

TEST(Pow, GchExamples) {
    EXPECT_EQ(card_pow(A("0"), A("0"), kGch).value(), A("1"));
    EXPECT_EQ(card_pow(A("w"), A("0"), kGch).value(), A("w+1"));
    EXPECT_EQ(card_pow(A("2"), A("5"), kGch).value(), A("6"));
    EXPECT_EQ(card_pow(A("3"), F(0), kGch).value(), F(1));
    EXPECT_EQ(card_pow(F(2), A("3"), kGch).value(), A("4"));
    EXPECT_THROW(card_pow(F(1), A("0"), kGch), DomainError);
}

TEST(Pow, GchMonotoneAndDiagonal) {
    const std::vector<Cardinal> grid{F(1), F(5), A("0"), A("1"), A("2"), A("w"), A("w+1"), A("w*2"), A("w^2")};
    for (std::size_t i = 2; i < grid.size(); ++i) {
        const Cardinal& k = grid[i];
        EXPECT_EQ(card_pow(k, k, kGch).value(), power_of_two(k, kGch).value());
        EXPECT_EQ(power_of_two(k, kGch).value(), successor(k));
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const Cardinal v = card_pow(k, grid[j], kGch).value();
            if (j + 1 < grid.size()) EXPECT_LE(v, card_pow(k, grid[j + 1], kGch).value());
            if (i + 1 < grid.size()) EXPECT_LE(v, card_pow(grid[i + 1], grid[j], kGch).value());
            EXPECT_EQ(v == k, grid[j] < cofinality(k)) << to_string(k) << '^' << to_string(grid[j]);
        }
    }
}

TEST(Model, EastonForcedValue) {
    const ContinuumModel m = easton();
    EXPECT_EQ(card_pow(A("2"), A("1"), m).value(), A("3"));
    EXPECT_EQ(power_of_two(A("1"), m).value(), A("3"));
}

TEST(Model, UndeterminedIsInterval) {
    const ContinuumModel m = easton();
    const CardinalRange r = power_of_two(A("0"), m);
    EXPECT_FALSE(r.is_exact());
    EXPECT_EQ(r.lower, A("1"));
    ASSERT_TRUE(r.upper.has_value());
    EXPECT_EQ(*r.upper, A("3"));
    const CardinalRange beyond = power_of_two(A("5"), m);
    EXPECT_FALSE(beyond.upper.has_value());
    EXPECT_EQ(beyond.lower, A("6"));
    EXPECT_THROW(r.value(), DomainError);
    EXPECT_EQ(to_string(r), "[aleph(1), aleph(3)]");
}

TEST(Model, RejectsInconsistent) {
    // not above kappa
    EXPECT_THROW(ContinuumModel::custom({{Ordinal::finite(2), Ordinal::finite(2)}}), DomainError);
    // decreasing
    EXPECT_THROW(ContinuumModel::custom({{Ordinal::finite(1), Ordinal::finite(5)}, {Ordinal::finite(2), Ordinal::finite(4)}}),
                 DomainError);
    // Koenig: cf(aleph_w) = aleph_0 is not above aleph_0
    EXPECT_THROW(ContinuumModel::custom({{Ordinal::finite(0), Ordinal::omega()}}), DomainError);
    EXPECT_NO_THROW(ContinuumModel::custom({{Ordinal::finite(0), parse_ordinal("w+1")}}));
}

TEST(Shapes, Examples) {
    using FB = PartitionShape::FullBlocks;
    EXPECT_EQ(complement_count_symbolic(PartitionShape::make(FB::one, A("0"), F(3)), kGch).value(), A("0"));
    EXPECT_EQ(complement_count_symbolic(PartitionShape::make(FB::one, A("w"), A("0")), kGch).value(), A("w+1"));
    EXPECT_EQ(complement_count_symbolic(PartitionShape::make(FB::none, A("1")), kGch).value(), A("2"));
    EXPECT_EQ(complement_count_symbolic(PartitionShape::make(FB::several, A("1")), kGch).value(), A("2"));
    EXPECT_EQ(complement_count_symbolic(PartitionShape::make(FB::one, A("1"), F(0)), kGch).value(), F(1));
    EXPECT_THROW(PartitionShape::make(FB::one, F(4), F(1)), DomainError);
    EXPECT_THROW(PartitionShape::make(FB::one, A("0"), A("1")), DomainError);
}

TEST(Shapes, EastonContradictsGch) {
    using FB = PartitionShape::FullBlocks;
    const auto s = PartitionShape::make(FB::one, A("2"), A("1"));
    EXPECT_EQ(complement_count_symbolic(s, easton()).value(), A("3"));
    EXPECT_EQ(complement_count_symbolic(s, kGch).value(), A("2"));
}

TEST(ChainBounds, Examples) {
    const auto b1 = chain_cardinality_bounds(A("1"));
    EXPECT_EQ(b1.well_ordered_lower, A("1"));
    EXPECT_EQ(b1.well_ordered_upper, A("1"));
    const auto bw = chain_cardinality_bounds(A("w"));
    EXPECT_EQ(bw.well_ordered_lower, A("0"));
    EXPECT_EQ(bw.well_ordered_upper, A("w"));
    const auto b0 = chain_cardinality_bounds(A("0"));
    EXPECT_EQ(b0.short_chain_ground, A("1"));
    EXPECT_EQ(b0.short_chain_length, A("0"));
    EXPECT_THROW(chain_cardinality_bounds(F(3)), DomainError);
}

TEST(Expressions, Evaluate) {
    EXPECT_EQ(eval("complements(shape(full=1,kappa=aleph(0),lambda=fin(3)))"), "aleph(0)");
    EXPECT_EQ(eval("pow(aleph(0),aleph(0))"), "aleph(1)");
    EXPECT_EQ(eval("pow(aleph(w),aleph(0))"), "aleph(w+1)");
    EXPECT_EQ(eval("cf(aleph(w*2))"), "aleph(0)");
    EXPECT_EQ(eval("succ(aleph(w))"), "aleph(w+1)");
    EXPECT_EQ(eval("12"), "12");
    EXPECT_EQ(eval("pow(aleph(2),aleph(1))", easton()), "aleph(3)");
    EXPECT_EQ(eval("pow(2,aleph(0))", easton()), "[aleph(1), aleph(3)]");
    EXPECT_EQ(eval("complements(shape(trivial=1,kappa=aleph(0)))"), "1");
    EXPECT_THROW(eval("pow(aleph(0)"), ParseError);
    EXPECT_THROW(eval("frob(1)"), ParseError);
}
