#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "nilorb/levi.hpp"

using namespace nilorb;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// prod over distinct sizes of (multiplicity)!
std::uint64_t block_symmetries(const std::vector<int>& blocks)
{
    std::map<int, int> mult;
    for (int q : blocks)
        ++mult[q];
    std::uint64_t r = 1;
    for (auto [q, m] : mult)
        r *= factorial(static_cast<std::uint64_t>(m));
    return r;
}

void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int q = 1; q <= n; ++q) {
        cur.push_back(q);
        compositions(n - q, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST(LeviDatum, Validation)
{
    EXPECT_THROW(LeviDatum::make(LieType::parse("A4"), {2, 2}), InvalidArgument);
    EXPECT_THROW(LeviDatum::make(LieType::parse("A4"), {}), InvalidArgument);
    EXPECT_THROW(LeviDatum::make(LieType::parse("C3"), {2}, 4), InvalidArgument);
    EXPECT_THROW(LeviDatum::make(LieType::parse("B3"), {1}, 4), InvalidArgument);
    EXPECT_EQ(LeviDatum::make(LieType::parse("C3"), {1}).residual_size, 4);
    EXPECT_EQ(LeviDatum::make(LieType::parse("C3"), {1}).str(), "C3(1)+C2");
    EXPECT_EQ(LeviDatum::make(LieType::parse("A4"), {2, 2, 1}).marked_diagram().str(), "A4{2,4}");
    EXPECT_EQ(LeviDatum::make(LieType::parse("D4"), {1}, 6).marked_diagram().str(), "D4{1}");
    EXPECT_EQ(LeviDatum::make(LieType::parse("D4"), {3}, 2).marked_diagram().str(), "D4{3,4}");
}

TEST(LeviRoots, Counts)
{
    // type A: sum q(q-1); B/C/D: plus the roots of the residual factor
    const auto a = LeviDatum::make(LieType::parse("A4"), {2, 2, 1});
    EXPECT_EQ(levi_roots(a).size(), 4u);
    const auto c = LeviDatum::make(LieType::parse("C3"), {1}, 4);
    EXPECT_EQ(levi_roots(c).size(), 8u);
    const auto d = LeviDatum::make(LieType::parse("D5"), {2}, 6);
    EXPECT_EQ(levi_roots(d).size(), 2u + 12u);
    for (const Root& r : levi_roots(d))
        EXPECT_TRUE(r.coords[0] + r.coords[1] == 0 || (r.coords[0] == 0 && r.coords[1] == 0)) << r.str();
}

TEST(Wprime, Examples)
{
    EXPECT_EQ(wprime(LeviDatum::make(LieType::parse("A4"), {2, 2, 1})).order(), 2u);
    const auto borel = wprime(LeviDatum::make(LieType::parse("A3"), {1, 1, 1, 1}));
    EXPECT_EQ(borel.order(), 24u);
    EXPECT_EQ(borel.reflection_subgroup_order, 1u);
    // the only freedom is the sign of the first coordinate
    const auto c3 = wprime(LeviDatum::make(LieType::parse("C3"), {1}, 4));
    EXPECT_EQ(c3.order(), 2u);
    EXPECT_EQ(c3.reflection_subgroup_order, 8u);
    EXPECT_EQ(c3.normalizer_order, 16u);
}

TEST(Wprime, TypeAMatchesBlockSymmetries)
{
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        compositions(n, cur, all);
        for (const auto& blocks : all) {
            const LeviDatum l = LeviDatum::make(LieType::make(Family::A, n - 1), blocks);
            const WprimeGroup g = wprime(l);
            EXPECT_EQ(g.order(), block_symmetries(blocks)) << l.str();
            EXPECT_EQ(g.normalizer_order, g.order() * g.reflection_subgroup_order);
            // W' permutes blocks of equal size and acts faithfully on them
            std::set<std::vector<int>> perms;
            for (const auto& w : g.representatives)
                perms.insert(block_permutation(l, w));
            EXPECT_EQ(perms.size(), g.order());
            EXPECT_EQ(count_conjugacy_classes(l) * g.order(), factorial(blocks.size())) << l.str();
        }
    }
}

TEST(Wprime, ThreadCountDoesNotChangeTheResult)
{
    const LeviDatum l = LeviDatum::make(LieType::parse("B4"), {1, 1}, 5);
    ::setenv("NILORB_THREADS", "3", 1);
    const WprimeGroup a = wprime(l);
    ::unsetenv("NILORB_THREADS");
    const WprimeGroup b = wprime(l);
    EXPECT_EQ(a.representatives, b.representatives);
    EXPECT_EQ(a.normalizer_order, b.normalizer_order);
}

TEST(Wprime, OuterActionOnAResidualD4)
{
    const LeviDatum l = LeviDatum::make(LieType::parse("D5"), {1}, 8);
    const WprimeGroup g = wprime(l);
    EXPECT_EQ(g.order(), 2u);
    bool outer = false;
    for (const auto& w : g.representatives)
        outer = outer || acts_outer_on_residual(l, w);
    EXPECT_TRUE(outer);
    const LieType d4 = LieType::parse("D4");
    EXPECT_FALSE(wprime_stabilizes(g, OrbitLabel::parse(d4, "2,2,2,2:I")));
    EXPECT_FALSE(wprime_stabilizes(g, OrbitLabel::parse(d4, "4,4:II")));
    EXPECT_TRUE(wprime_stabilizes(g, OrbitLabel::parse(d4, "5,1,1,1")));
    EXPECT_TRUE(wprime_stabilizes(g, OrbitLabel::parse(d4, "3,1,1,1,1,1")));
}

TEST(Orderings, ParseAndPrint)
{
    const BlockOrdering b = BlockOrdering::parse({2, 2, 1}, "b1,b3,b2");
    EXPECT_EQ(b.csv(), "1,3,2");
    EXPECT_EQ(b.str(), "(b1,b3,b2)");
    EXPECT_EQ(b.flag_type().dims, (std::vector<int>{2, 1, 2}));
    EXPECT_EQ(b.marked_diagram().str(), "A4{2,3}");
    EXPECT_EQ(BlockOrdering::parse({2, 2, 1}, "(3,1,2)").order, (std::vector<int>{3, 1, 2}));
    EXPECT_THROW(BlockOrdering::parse({2, 2, 1}, "1,1,2"), InvalidArgument);
    EXPECT_THROW(BlockOrdering::parse({2, 2, 1}, "1,2"), InvalidArgument);
    EXPECT_THROW(BlockOrdering::parse({2, 2, 1}, "1,x,2"), InvalidArgument);
}

TEST(Orderings, SAndS1)
{
    const LeviDatum l = LeviDatum::make(LieType::parse("A5"), {2, 1, 2, 1});
    const auto s = enumerate_S_A(l);
    EXPECT_EQ(s.size(), 24u);
    EXPECT_EQ(std::set<BlockOrdering>(s.begin(), s.end()).size(), 24u);
    const auto base = BlockOrdering::base(l.blocks);
    const auto s1 = enumerate_S1_A(base);
    EXPECT_EQ(s1.size(), multiset_permutations(l.blocks));
    EXPECT_EQ(multiset_permutations(l.blocks), 6u);
    std::size_t same = 0;
    for (const auto& o : s)
        same += same_first_kind_class(base, o);
    EXPECT_EQ(same, s1.size());
    for (const auto& o : s1)
        EXPECT_TRUE(same_first_kind_class(base, o));
    EXPECT_THROW(enumerate_S_A(LeviDatum::make(LieType::parse("C3"), {1})), InvalidArgument);
}

TEST(Counting, Examples)
{
    EXPECT_EQ(count_conjugacy_classes(LeviDatum::make(LieType::parse("A4"), {2, 2, 1})), 3u);
    EXPECT_EQ(count_conjugacy_classes(LeviDatum::make(LieType::parse("A5"), {2, 2, 2})), 1u);
    EXPECT_EQ(count_conjugacy_classes(LeviDatum::make(LieType::parse("A5"), {1, 1, 1, 1, 1, 1})), 1u);
}
