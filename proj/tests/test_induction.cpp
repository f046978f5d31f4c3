#include <gtest/gtest.h>

#include "nilorb/induction.hpp"

using namespace nilorb;

namespace {

// dim of the variety of isotropic r-planes in an m-dimensional orthogonal or symplectic space
int isotropic_planes_dim(Family f, int m, int r)
{
    return f == Family::C ? r * (m - r) - r * (r - 1) / 2 : r * (m - r) - r * (r + 1) / 2;
}

std::vector<LieType> bcd_types(int max_size)
{
    std::vector<LieType> out;
    for (int m = 4; m <= max_size; ++m) {
        if (m % 2 == 1 && m >= 5)
            out.push_back(LieType::from_natural_size(Family::B, m));
        if (m % 2 == 0) {
            out.push_back(LieType::from_natural_size(Family::C, m));
            if (m >= 6)
                out.push_back(LieType::from_natural_size(Family::D, m));
        }
    }
    return out;
}

} // namespace

TEST(Flag, Parse)
{
    EXPECT_EQ(FlagType::parse("1,2,1").dims, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(FlagType::parse("(2,0,2)").dims, (std::vector<int>{2, 2}));
    EXPECT_TRUE(FlagType::parse("1,2,1").is_palindromic());
    EXPECT_FALSE(FlagType::parse("1,2").is_palindromic());
    EXPECT_THROW(FlagType::parse("1,-2"), InvalidArgument);
    EXPECT_THROW(FlagType::parse(""), InvalidArgument);
}

TEST(Richardson, TypeADimension)
{
    // dim of the Richardson orbit = 2 dim G/Q = n^2 - sum q_i^2
    for (int n = 2; n <= 8; ++n)
        for (const auto& q : partitions_of(n)) {
            const Partition d = richardson_A(FlagType{q.parts()});
            int sq = 0;
            for (int x : q.parts())
                sq += x * x;
            const OrbitLabel o = OrbitLabel::make(LieType::make(Family::A, n - 1), d);
            EXPECT_EQ(orbit_dimension(o), n * n - sq) << q.str();
        }
}

TEST(Reduction, Examples)
{
    const auto b2 = reduction_step(LieType::parse("B2"), Partition({3, 1, 1}));
    ASSERT_TRUE(b2);
    EXPECT_EQ(b2->p, 1);
    EXPECT_EQ(b2->r, 1);
    EXPECT_EQ(b2->reduced, Partition({1, 1, 1}));

    const auto c3 = reduction_step(LieType::parse("C3"), Partition({4, 2}));
    ASSERT_TRUE(c3);
    EXPECT_EQ(c3->p, 1);
    EXPECT_EQ(c3->r, 1);
    EXPECT_EQ(c3->reduced, Partition({2, 2}));

    const auto c2 = reduction_step(LieType::parse("C2"), Partition({2, 2}));
    ASSERT_TRUE(c2);
    EXPECT_EQ(c2->r, 2);
    EXPECT_TRUE(c2->reduced.empty());

    EXPECT_FALSE(reduction_step(LieType::parse("D3"), Partition({2, 2, 1, 1})));
    EXPECT_THROW(reduction_step(LieType::parse("A3"), Partition({4})), InvalidArgument);
    EXPECT_THROW(reduction_step(LieType::parse("C2"), Partition({3, 1})), InvalidArgument);
}

TEST(Reduction, StopsExactlyAtFullMembers)
{
    for (const LieType& t : bcd_types(12))
        for (const auto& o : enumerate_orbits(t))
            EXPECT_EQ(!reduction_step(t, o.partition).has_value(), has_full_members(o.partition))
                << t.name() << " " << o.str();
}

TEST(Reduction, InductionInvertsEachStepAndAddsTwiceTheFlagDimension)
{
    for (const LieType& t : bcd_types(12))
        for (const auto& o : enumerate_orbits(t))
            for (GapChoice g : {GapChoice::Smallest, GapChoice::Largest}) {
                const auto s = reduction_step(t, o.partition, g);
                if (!s)
                    continue;
                EXPECT_EQ(induct_partition(s->reduced, {s->p, s->r, false}), o.partition) << o.str();
                const LieType small = LieType::from_natural_size(t.family, t.natural_size() - 2 * s->r);
                const int small_dim = s->reduced.empty()
                                          ? 0
                                          : orbit_dimension({small, s->reduced, VeryEvenTag::None});
                EXPECT_EQ(orbit_dimension({t, o.partition, VeryEvenTag::None}),
                          small_dim + 2 * isotropic_planes_dim(t.family, t.natural_size(), s->r))
                    << t.name() << " " << o.str();
                EXPECT_EQ(isotropic_grassmannian_dimension(t.family, t.natural_size(), s->r),
                          isotropic_planes_dim(t.family, t.natural_size(), s->r));
            }
}

TEST(Induction, RejectsInconsistentSteps)
{
    EXPECT_THROW(induct_partition(Partition({1, 1}), {1, 0, false}), InvalidArgument);
    // adding 2 to one part of [3,1] gives [5,1]; the gap is at the first group with r = 1
    EXPECT_EQ(induct_partition(Partition({3, 1}), {1, 1, false}), Partition({5, 1}));
    EXPECT_THROW(induct_partition(Partition({3, 1}), {2, 1, false}), InvalidArgument);
    // p counts groups of the induced partition, so [2,2] with (1,1) is the reverse of C3 [4,2]
    EXPECT_EQ(induct_partition(Partition({2, 2}), {1, 1, false}), Partition({4, 2}));
    EXPECT_EQ(induct_partition(Partition{}, {0, 3, true}), Partition({2, 2, 1, 1}));
}

TEST(Terminalize, SymplecticFour)
{
    const auto d = terminalize(OrbitLabel::parse(LieType::parse("C2"), "2,2"));
    ASSERT_EQ(d.steps.size(), 1u);
    EXPECT_EQ(d.steps[0], (InductionStep{1, 2, false}));
    EXPECT_EQ(d.levi_blocks, std::vector<int>{2});
    EXPECT_TRUE(d.terminal_partition.empty());
    EXPECT_EQ(d.flag_type().dims, (std::vector<int>{2, 2}));
    EXPECT_FALSE(d.special_case);
}

TEST(Terminalize, SpecialEvenOrthogonal)
{
    const auto d = terminalize(OrbitLabel::parse(LieType::parse("D3"), "2,2,1,1"));
    EXPECT_TRUE(d.special_case);
    EXPECT_EQ(d.levi_blocks, std::vector<int>{3});
    EXPECT_EQ(d.twin_markings(), (std::vector<std::vector<int>>{{3}, {2}}));
    EXPECT_EQ(d.reinduce(), Partition({2, 2, 1, 1}));

    const auto d5 = terminalize(OrbitLabel::parse(LieType::parse("D5"), "2,2,2,2,1,1"));
    EXPECT_TRUE(d5.special_case);
    const auto d4 = terminalize(OrbitLabel::parse(LieType::parse("D4"), "2,2,1,1,1,1"));
    EXPECT_FALSE(d4.special_case);
}

TEST(Terminalize, TypeA)
{
    const auto d = terminalize(OrbitLabel::parse(LieType::parse("A4"), "3,2"));
    EXPECT_EQ(d.levi_blocks, (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(d.reinduce(), Partition({3, 2}));
}

TEST(Terminalize, VeryEvenTagSurvivesWhileVeryEven)
{
    const auto d = terminalize(OrbitLabel::parse(LieType::parse("D4"), "4,4:II"));
    EXPECT_TRUE(d.terminal_partition.empty());
    EXPECT_EQ(d.levi_blocks, (std::vector<int>{2, 2}));
    const auto e = terminalize(OrbitLabel::parse(LieType::parse("D4"), "2,2,2,2:I"));
    EXPECT_EQ(e.levi_blocks, std::vector<int>{4});
}
