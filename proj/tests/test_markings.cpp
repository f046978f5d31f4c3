#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nilorb/markings.hpp"

using namespace nilorb;

namespace {

MarkedDiagram md(const std::string& type, std::set<int> marks)
{
    return MarkedDiagram::make(LieType::parse(type), std::move(marks));
}

// Block sizes of an A_{n-1} diagram cut at its marks.
std::vector<int> blocks_of(const MarkedDiagram& d)
{
    std::vector<int> sizes;
    int prev = 0;
    for (int v : d.marks) {
        sizes.push_back(v - prev);
        prev = v;
    }
    sizes.push_back(d.type.rank + 1 - prev);
    return sizes;
}

std::size_t distinct_arrangements(std::vector<int> sizes)
{
    std::sort(sizes.begin(), sizes.end());
    std::size_t n = 0;
    do
        ++n;
    while (std::next_permutation(sizes.begin(), sizes.end()));
    return n;
}

} // namespace

TEST(MarkedDiagram, ParseAndValidate)
{
    EXPECT_EQ(MarkedDiagram::parse(LieType::parse("A4"), "1,3").str(), "A4{1,3}");
    EXPECT_THROW(MarkedDiagram::parse(LieType::parse("A4"), "5"), InvalidArgument);
    EXPECT_THROW(MarkedDiagram::parse(LieType::parse("A4"), "x"), InvalidArgument);
    EXPECT_THROW(MarkedDiagram::parse(LieType::parse("A4"), "0"), InvalidArgument);
}

TEST(SingleSubdiagram, Examples)
{
    const auto a = single_marked_subdiagram(md("A4", {1, 3}), 1);
    EXPECT_EQ(a.shape, md("A2", {1}));
    EXPECT_EQ(a.embedding, (std::vector<int>{1, 2}));

    const auto b = single_marked_subdiagram(md("A3", {2}), 2);
    EXPECT_EQ(b.shape, md("A3", {2}));

    const auto c = single_marked_subdiagram(md("D5", {5}), 5);
    EXPECT_EQ(c.shape.type, LieType::parse("D5"));
    EXPECT_EQ(c.shape.marks.size(), 1u);
    EXPECT_GE(*c.shape.marks.begin(), 4);

    // deleting vertex 1 of D6 leaves a D5 on vertices 2..6
    const auto d = single_marked_subdiagram(md("D6", {1, 6}), 6);
    EXPECT_EQ(d.shape.type, LieType::parse("D5"));

    // D3 is A3 with vertex 1 in the middle
    const auto e = single_marked_subdiagram(md("D3", {1}), 1);
    EXPECT_EQ(e.shape, md("A3", {2}));

    // a double edge keeps its B or C shape; rank 2 is reported as B2
    EXPECT_EQ(single_marked_subdiagram(md("C4", {2, 3}), 3).shape.type, LieType::parse("B2"));
    EXPECT_EQ(single_marked_subdiagram(md("B4", {2, 3}), 3).shape.type, LieType::parse("B2"));
    EXPECT_EQ(single_marked_subdiagram(md("C4", {1, 2}), 2).shape.type, LieType::parse("C3"));
}

TEST(Kind, Examples)
{
    const TwistKind a_end = classify_kind(md("A3", {1}));
    EXPECT_TRUE(a_end.first);
    EXPECT_EQ(a_end.dual, 3);
    EXPECT_FALSE(classify_kind(md("A3", {2})).first);

    const TwistKind d5 = classify_kind(md("D5", {4}));
    EXPECT_TRUE(d5.first);
    EXPECT_EQ(d5.dual, 5);
    EXPECT_EQ(classify_kind(md("D5", {5})).dual, 4);
    for (int v = 1; v <= 3; ++v)
        EXPECT_FALSE(classify_kind(md("D5", {v})).first) << v;
    for (int v = 1; v <= 4; ++v)
        EXPECT_FALSE(classify_kind(md("D4", {v})).first) << v;

    EXPECT_EQ(classify_kind(md("E6", {1})), (TwistKind{true, 6, "E_{6,I}"}));
    EXPECT_EQ(classify_kind(md("E6", {6})), (TwistKind{true, 1, "E_{6,I}"}));
    EXPECT_EQ(classify_kind(md("E6", {3})), (TwistKind{true, 5, "E_{6,II}"}));
    EXPECT_EQ(classify_kind(md("E6", {5})), (TwistKind{true, 3, "E_{6,II}"}));
    EXPECT_FALSE(classify_kind(md("E6", {2})).first);
    EXPECT_FALSE(classify_kind(md("E6", {4})).first);

    for (const char* t : {"B3", "C3", "B4", "C4"})
        for (int v = 1; v <= 3; ++v)
            EXPECT_FALSE(classify_kind(md(t, {v})).first) << t << v;

    EXPECT_THROW(classify_kind(md("A4", {1, 2})), InvalidArgument);
}

TEST(Kind, InvariantUnderIsomorphism)
{
    // D3 = A3: fork tips are the ends, vertex 1 is the middle
    EXPECT_EQ(classify_kind(md("D3", {2})).first, classify_kind(md("A3", {1})).first);
    EXPECT_EQ(classify_kind(md("D3", {2})).dual, 3);
    EXPECT_FALSE(classify_kind(md("D3", {1})).first);
    // C2 and B2 share one shape
    EXPECT_EQ(classify_kind(md("C2", {1})).first, classify_kind(md("B2", {2})).first);
}

TEST(Twist, Examples)
{
    EXPECT_EQ(twist(md("A4", {1, 3}), 1), md("A4", {2, 3}));
    EXPECT_EQ(twist(md("A3", {2}), 2), md("A3", {2}));
    EXPECT_EQ(twist(md("D6", {1, 6}), 6), md("D6", {1, 5}));
    EXPECT_EQ(twist(md("D5", {1, 4}), 4), md("D5", {1, 4}));
    EXPECT_EQ(twist(md("E6", {1}), 1), md("E6", {6}));
    EXPECT_EQ(twist(md("C3", {1}), 1), md("C3", {1}));
}

TEST(Twist, IsAnInvolutionThroughTheDual)
{
    for (const char* t : {"A4", "A5", "D5", "D6", "E6", "C4"}) {
        const LieType lt = LieType::parse(t);
        for (int mask = 1; mask < (1 << lt.rank); ++mask) {
            std::set<int> marks;
            for (int v = 1; v <= lt.rank; ++v)
                if (mask & (1 << (v - 1)))
                    marks.insert(v);
            const MarkedDiagram d = MarkedDiagram::make(lt, marks);
            for (int v : d.marks) {
                const MarkedDiagram e = twist(d, v);
                const std::vector<int> added = [&] {
                    std::vector<int> out;
                    std::set_difference(e.marks.begin(), e.marks.end(), d.marks.begin(), d.marks.end(),
                                        std::back_inserter(out));
                    return out;
                }();
                if (added.empty()) {
                    EXPECT_EQ(e, d);
                    continue;
                }
                ASSERT_EQ(added.size(), 1u);
                EXPECT_EQ(twist(e, added[0]), d) << d.str() << " at " << v;
                EXPECT_EQ(e.marks.size(), d.marks.size());
            }
        }
    }
}

TEST(TwistClass, TypeAIsAllArrangementsOfBlockSizes)
{
    for (int n = 2; n <= 7; ++n) {
        const LieType t = LieType::make(Family::A, n);
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::set<int> marks;
            for (int v = 1; v <= n; ++v)
                if (mask & (1 << (v - 1)))
                    marks.insert(v);
            const MarkedDiagram d = MarkedDiagram::make(t, marks);
            const TwistClass c = equivalence_class(d);
            EXPECT_EQ(c.members.size(), distinct_arrangements(blocks_of(d))) << d.str();
            // every member cuts the same multiset of block sizes
            for (const auto& m : c.members) {
                auto a = blocks_of(m), b = blocks_of(d);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                EXPECT_EQ(a, b);
            }
            EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
            EXPECT_TRUE(std::includes(c.members.begin(), c.members.end(), c.first_kind.begin(), c.first_kind.end()));
        }
    }
}

TEST(TwistClass, Example)
{
    const TwistClass c = equivalence_class(md("A4", {1, 3}));
    EXPECT_EQ(c.members, (std::vector<MarkedDiagram>{md("A4", {1, 3}), md("A4", {2, 3}), md("A4", {2, 4})}));
    EXPECT_EQ(c.first_kind, c.members);
    const std::string dot = to_dot(c);
    EXPECT_NE(dot.find("graph twists"), std::string::npos);
    EXPECT_NE(dot.find("A4{2,4}"), std::string::npos);

    const TwistClass s = equivalence_class(md("A3", {2}));
    EXPECT_EQ(s.members.size(), 1u);
    EXPECT_NE(to_dot(s).find("dashed"), std::string::npos);
}

TEST(PrimitivePair, ResidualOrbits)
{
    const PrimitivePair a = primitive_pair(md("A4", {2}));
    EXPECT_EQ(a.dual, md("A4", {3}));
    EXPECT_EQ(a.residual_orbits, std::vector<std::string>{"0"});
    const PrimitivePair e = primitive_pair(md("E6", {1}));
    EXPECT_EQ(e.name, "E_{6,I}");
    EXPECT_EQ(e.residual_orbits.size(), 3u);
    EXPECT_EQ(primitive_pair(md("E6", {3})).residual_orbits, std::vector<std::string>{"0"});
    EXPECT_THROW(primitive_pair(md("A3", {2})), InvalidArgument);
}
