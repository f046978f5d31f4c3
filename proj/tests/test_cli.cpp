#include <gtest/gtest.h>

#include "nilorb/cli.hpp"

using namespace nilorb;
using cli::run;

TEST(Cli, TerminalizeSymplecticFour)
{
    const auto r = run({"terminalize", "C2", "2,2"});
    ASSERT_EQ(r.status, cli::kOk) << r.message;
    const auto& d = r.payload.at("datum");
    EXPECT_EQ(d.at("steps"), nlohmann::json::parse(R"([{"p":1,"r":2,"twin":false}])"));
    EXPECT_EQ(d.at("levi"), nlohmann::json::parse(R"j(["gl(2)"])j"));
    EXPECT_TRUE(d.at("terminal_orbit_is_zero").get<bool>());
    const auto back = d.get<TerminalizationDatum>();
    EXPECT_EQ(back.reinduce(), Partition({2, 2}));
    EXPECT_EQ(back.levi_blocks, std::vector<int>{2});
}

TEST(Cli, DegreeOfTheSymplecticFlag)
{
    const auto r = run({"oracle", "degree", "C2", "2,2", "1,2,1"});
    ASSERT_EQ(r.status, cli::kOk) << r.message;
    const auto& rep = r.payload.at("report");
    EXPECT_EQ(rep.at("degree"), 2);
    EXPECT_TRUE(rep.at("stable").get<bool>());
    const auto back = rep.get<FlagCountReport>();
    EXPECT_EQ(back.counts.size(), 3u);
    EXPECT_EQ(back.degree(), 2u);
}

TEST(Cli, LeviCount)
{
    const auto r = run({"levi", "count", "A4", "2,2,1"});
    ASSERT_EQ(r.status, cli::kOk) << r.message;
    EXPECT_EQ(r.payload.at("N"), 3);
    EXPECT_EQ(r.payload.at("Wprime"), 2);
    EXPECT_EQ(r.payload.at("S"), 6);
    EXPECT_TRUE(r.payload.at("identity_holds").get<bool>());
    EXPECT_EQ(r.payload.at("levi").get<LeviDatum>(), LeviDatum::make(LieType::parse("A4"), {2, 2, 1}));

    const auto c = run({"levi", "wprime", "C3", "1", "C2"});
    ASSERT_EQ(c.status, cli::kOk) << c.message;
    const auto g = c.payload.at("wprime").get<WprimeGroup>();
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.levi.residual_size, 4);
    EXPECT_EQ(run({"levi", "wprime", "C3", "1", "4"}).payload, c.payload);
    EXPECT_EQ(run({"levi", "wprime", "C3", "1", "B2"}).status, cli::kUsage);
}

TEST(Cli, OrbitsRoundTrip)
{
    const auto r = run({"orbits", "list", "D4"});
    ASSERT_EQ(r.status, cli::kOk);
    std::vector<OrbitLabel> back;
    for (const auto& o : r.payload.at("orbits"))
        back.push_back(o.get<OrbitLabel>());
    EXPECT_EQ(back, enumerate_orbits(LieType::parse("D4")));

    const auto w = run({"orbit", "wdd", "C2", "2,2"});
    EXPECT_EQ(w.payload.at("wdd").get<WeightedDynkinDiagram>().str(), "0,2");
    EXPECT_EQ(run({"orbit", "dim", "A3", "4"}).payload.at("dimension"), 12);
    const auto g = run({"orbit", "grading", "B2", "3,1,1"});
    EXPECT_EQ(g.payload.at("resolution_dimension"), g.payload.at("dimension"));
}

TEST(Cli, PosetDot)
{
    const auto r = run({"orbits", "poset", "D4", "--dot"});
    ASSERT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.format, "dot");
    EXPECT_EQ(r.output().rfind("digraph poset", 0), 0u);
    // the two very even tags are incomparable and both sit directly below [5,3]
    const auto& covers = r.payload.at("covers");
    for (const char* tag : {"[4,4]I", "[4,4]II"})
        EXPECT_NE(std::find(covers.begin(), covers.end(), nlohmann::json::array({tag, "[5,3]"})), covers.end()) << tag;
    EXPECT_EQ(std::find(covers.begin(), covers.end(), nlohmann::json::array({"[4,4]I", "[4,4]II"})), covers.end());
}

TEST(Cli, TwistClass)
{
    const auto r = run({"--format", "dot", "twists", "class", "A4", "1,3"});
    ASSERT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.payload.at("size"), 3);
    EXPECT_NE(r.output().find("A4{2,4}"), std::string::npos);
    const auto c = r.payload.at("class").get<TwistClass>();
    EXPECT_EQ(c.members, equivalence_class(MarkedDiagram::parse(LieType::parse("A4"), "1,3")).members);
}

TEST(Cli, Cones)
{
    const auto nef = run({"cones", "nef", "2,2,1", "--ordering", "1,3,2", "--point", "3,1,2"});
    ASSERT_EQ(nef.status, cli::kOk) << nef.message;
    EXPECT_TRUE(nef.payload.at("contains").get<bool>());
    EXPECT_EQ(nef.payload.at("cone").get<RationalCone>().facets(), 2u);

    const auto mov = run({"cones", "movable", "2,2,1", "--point", "1/2,-1/3,5"});
    ASSERT_EQ(mov.status, cli::kOk) << mov.message;
    EXPECT_TRUE(mov.payload.at("contains").get<bool>());
    EXPECT_EQ(mov.payload.at("chambers").size(), 3u);

    const auto ch = run({"cones", "chamber", "1,1,1", "--point", "1,1,0"});
    ASSERT_EQ(ch.status, cli::kOk);
    EXPECT_TRUE(ch.payload.at("boundary").get<bool>());
    EXPECT_EQ(ch.payload.at("chambers").get<std::vector<BlockOrdering>>().size(), 2u);

    EXPECT_EQ(run({"cones", "chamber", "1,1,1", "--point", "1,1"}).status, cli::kUsage);
    EXPECT_EQ(run({"cones", "chamber", "1,1,1", "--point", "1,1/0,2"}).status, cli::kUsage);
}

TEST(Cli, SampledOutputIsDeterministic)
{
    const auto a = run({"cones", "chamber", "2,1,1,3"});
    const auto b = run({"cones", "chamber", "2,1,1,3"});
    EXPECT_EQ(a.output(), b.output());
    const auto c = run({"--seed", "99", "cones", "chamber", "2,1,1,3"});
    const auto d = run({"--seed", "99", "cones", "chamber", "2,1,1,3"});
    EXPECT_EQ(c.output(), d.output());
    EXPECT_NE(a.payload.at("point"), c.payload.at("point"));
    const auto x = character_from_json(a.payload.at("point"));
    EXPECT_EQ(x.size(), 4u);
}

TEST(Cli, FlopPath)
{
    const auto r = run({"flops", "path", "2,1,3", "1,2,3", "3,2,1"});
    ASSERT_EQ(r.status, cli::kOk) << r.message;
    EXPECT_EQ(r.payload.at("length"), 3);
    const auto steps = r.payload.at("steps").get<std::vector<FlopStep>>();
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(steps.back().after, BlockOrdering::parse({2, 1, 3}, "3,2,1"));
    EXPECT_EQ(run({"flops", "path", "2,1,2", "1,2,3", "3,2,1"}).status, cli::kUsage);
}

TEST(Cli, Centralizer)
{
    const auto r = run({"oracle", "centralizer", "C2", "2,2"});
    EXPECT_EQ(r.payload.at("centralizer_dim"), 4);
    EXPECT_EQ(r.payload.at("orbit_dim"), 6);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).status, cli::kUsage);
    EXPECT_EQ(run({"bogus"}).status, cli::kUsage);
    EXPECT_EQ(run({"orbit", "dim", "C2", "3,1"}).status, cli::kUsage);
    EXPECT_EQ(run({"orbit", "dim", "C2"}).status, cli::kUsage);
    EXPECT_EQ(run({"--format", "yaml", "orbits", "list", "A2"}).status, cli::kUsage);
    EXPECT_EQ(run({"--format", "dot", "orbit", "dim", "A2", "3"}).status, cli::kUsage);
    EXPECT_EQ(run({"levi", "wprime", "A9", "5,5"}).status, cli::kBudget);
    EXPECT_EQ(run({"oracle", "degree", "B4", "9", "9"}).status, cli::kBudget);
    const auto help = run({"--help"});
    EXPECT_EQ(help.status, cli::kOk);
    EXPECT_NE(help.message.find("terminalize"), std::string::npos);
    EXPECT_TRUE(run({"bogus"}).output().empty());
}

TEST(Cli, TextFormat)
{
    const auto r = run({"--format", "text", "orbit", "dim", "A3", "4"});
    EXPECT_NE(r.output().find("dimension: 12"), std::string::npos);
}
