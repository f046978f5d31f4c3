#pragma once

// nlohmann::json conversions for the domain types. Every to_json has a matching
// from_json so command output can be read back.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilorb/cones.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/markings.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

using nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

inline std::string rational_str(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s)
{
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        const BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw InvalidArgument("zero denominator in '" + s + "'");
        return Rational(BigInt(s.substr(0, slash)), den);
    }
    catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw InvalidArgument("bad rational '" + s + "'");
    }
}

inline void to_json(json& j, const LieType& t) { j = t.name(); }
inline void from_json(const json& j, LieType& t) { t = LieType::parse(j.get<std::string>()); }

inline void to_json(json& j, const Partition& d) { j = d.parts(); }
inline void from_json(const json& j, Partition& d) { d = Partition(j.get<std::vector<int>>()); }

inline void to_json(json& j, VeryEvenTag t)
{
    if (t == VeryEvenTag::None)
        j = nullptr;
    else
        j = t == VeryEvenTag::I ? "I" : "II";
}

inline void from_json(const json& j, VeryEvenTag& t)
{
    if (j.is_null())
        t = VeryEvenTag::None;
    else if (j == "I")
        t = VeryEvenTag::I;
    else if (j == "II")
        t = VeryEvenTag::II;
    else
        throw InvalidArgument("bad very even tag " + j.dump());
}

inline void to_json(json& j, const OrbitLabel& o)
{
    j = json{{"type", o.type}, {"partition", o.partition}, {"tag", o.tag}, {"label", o.str()}};
}

inline void from_json(const json& j, OrbitLabel& o)
{
    o = OrbitLabel::make(j.at("type").get<LieType>(), j.at("partition").get<Partition>(),
                         j.at("tag").get<VeryEvenTag>());
}

inline void to_json(json& j, const FlagType& f) { j = f.dims; }
inline void from_json(const json& j, FlagType& f) { f.dims = j.get<std::vector<int>>(); }

inline void to_json(json& j, const InductionStep& s) { j = json{{"p", s.p}, {"r", s.r}, {"twin", s.twin}}; }
inline void from_json(const json& j, InductionStep& s)
{
    s.p = j.at("p").get<int>();
    s.r = j.at("r").get<int>();
    s.twin = j.at("twin").get<bool>();
}

inline void to_json(json& j, const TerminalizationDatum& d)
{
    std::vector<std::string> levi;
    for (int q : d.levi_blocks)
        levi.push_back("gl(" + std::to_string(q) + ")");
    const auto rt = d.residual_type();
    if (rt)
        levi.push_back(std::string(d.residual_family == Family::C ? "sp(" : "so(") + std::to_string(d.residual_size) + ")");
    j = json{{"input", d.input},
             {"steps", d.steps},
             {"levi_blocks", d.levi_blocks},
             {"levi", levi},
             {"residual_family", std::string(1, family_char(d.residual_family))},
             {"residual_size", d.residual_size},
             {"terminal_partition", d.terminal_partition},
             {"terminal_tag", d.terminal_tag},
             {"terminal_orbit_is_zero", d.terminal_partition.empty() || d.terminal_partition.parts().front() == 1},
             {"special_case", d.special_case},
             {"flag_type", d.flag_type()}};
    if (d.special_case)
        j["twin_markings"] = d.twin_markings();
}

inline void from_json(const json& j, TerminalizationDatum& d)
{
    d.input = j.at("input").get<OrbitLabel>();
    d.steps = j.at("steps").get<std::vector<InductionStep>>();
    d.levi_blocks = j.at("levi_blocks").get<std::vector<int>>();
    const std::string fam = j.at("residual_family").get<std::string>();
    if (fam.size() != 1)
        throw InvalidArgument("bad residual family");
    d.residual_family = LieType::parse(fam + "2").family;
    d.residual_size = j.at("residual_size").get<int>();
    d.terminal_partition = j.at("terminal_partition").get<Partition>();
    d.terminal_tag = j.at("terminal_tag").get<VeryEvenTag>();
    d.special_case = j.at("special_case").get<bool>();
}

inline void to_json(json& j, const WeightedDynkinDiagram& w) { j = json{{"type", w.type}, {"labels", w.labels}}; }
inline void from_json(const json& j, WeightedDynkinDiagram& w)
{
    w.type = j.at("type").get<LieType>();
    w.labels = j.at("labels").get<std::vector<int>>();
}

inline void to_json(json& j, const MarkedDiagram& d)
{
    j = json{{"type", d.type}, {"marks", std::vector<int>(d.marks.begin(), d.marks.end())}, {"label", d.str()}};
}

inline void from_json(const json& j, MarkedDiagram& d)
{
    const auto marks = j.at("marks").get<std::vector<int>>();
    d = MarkedDiagram::make(j.at("type").get<LieType>(), std::set<int>(marks.begin(), marks.end()));
}

inline void to_json(json& j, const TwistClass& c)
{
    json edges = json::array();
    for (const auto& e : c.edges)
        edges.push_back(json{{"from", e.from.str()}, {"to", e.to.str()}, {"vertex", e.vertex},
                             {"kind", e.first_kind ? "first" : "second"}});
    j = json{{"members", c.members}, {"first_kind", c.first_kind}, {"edges", edges}};
}

inline void from_json(const json& j, TwistClass& c)
{
    c.members = j.at("members").get<std::vector<MarkedDiagram>>();
    c.first_kind = j.at("first_kind").get<std::vector<MarkedDiagram>>();
    c.edges.clear();
}

inline void to_json(json& j, const WeylElement& w) { j = json{{"type", w.type}, {"perm", w.perm}, {"sign", w.sign}}; }
inline void from_json(const json& j, WeylElement& w)
{
    w.type = j.at("type").get<LieType>();
    w.perm = j.at("perm").get<std::vector<int>>();
    w.sign = j.at("sign").get<std::vector<int>>();
}

inline void to_json(json& j, const LeviDatum& l)
{
    j = json{{"ambient", l.ambient}, {"blocks", l.blocks}, {"residual_size", l.residual_size},
             {"marked_diagram", l.marked_diagram()}, {"center_dim", l.center_dim()}};
}

inline void from_json(const json& j, LeviDatum& l)
{
    l = LeviDatum::make(j.at("ambient").get<LieType>(), j.at("blocks").get<std::vector<int>>(),
                        j.at("residual_size").get<int>());
}

inline void to_json(json& j, const WprimeGroup& g)
{
    j = json{{"levi", g.levi},
             {"order", g.order()},
             {"normalizer_order", g.normalizer_order},
             {"reflection_subgroup_order", g.reflection_subgroup_order},
             {"representatives", g.representatives}};
}

inline void from_json(const json& j, WprimeGroup& g)
{
    g.levi = j.at("levi").get<LeviDatum>();
    g.representatives = j.at("representatives").get<std::vector<WeylElement>>();
    g.normalizer_order = j.at("normalizer_order").get<std::uint64_t>();
    g.reflection_subgroup_order = j.at("reflection_subgroup_order").get<std::uint64_t>();
}

inline void to_json(json& j, const BlockOrdering& b) { j = json{{"order", b.order}, {"sizes", b.sizes}, {"label", b.str()}}; }
inline void from_json(const json& j, BlockOrdering& b)
{
    b.order = j.at("order").get<std::vector<int>>();
    b.sizes = j.at("sizes").get<std::vector<int>>();
    b.validate();
}

inline void to_json(json& j, const RationalCone& c) { j = json{{"inequalities", c.inequalities}}; }
inline void from_json(const json& j, RationalCone& c)
{
    c.inequalities = j.at("inequalities").get<std::vector<std::vector<int>>>();
}

inline json character_json(const CharacterVector& x)
{
    json a = json::array();
    for (const auto& q : x)
        a.push_back(rational_str(q));
    return a;
}

inline CharacterVector character_from_json(const json& j)
{
    CharacterVector x;
    for (const auto& e : j)
        x.push_back(parse_rational(e.get<std::string>()));
    return x;
}

inline void to_json(json& j, const FlopStep& s)
{
    j = json{{"position", s.position}, {"before", s.before}, {"after", s.after}, {"vertex", s.vertex},
             {"primitive_pair", json{{"diagram", s.primitive}, {"residual_orbit", s.residual_orbit}}}};
}

inline void from_json(const json& j, FlopStep& s)
{
    s.position = j.at("position").get<std::size_t>();
    s.before = j.at("before").get<BlockOrdering>();
    s.after = j.at("after").get<BlockOrdering>();
    s.vertex = j.at("vertex").get<int>();
    s.primitive = j.at("primitive_pair").at("diagram").get<MarkedDiagram>();
    s.residual_orbit = j.at("primitive_pair").at("residual_orbit").get<std::string>();
}

inline void to_json(json& j, const FlagCountReport& r)
{
    json counts = json::object();
    for (const auto& [p, c] : r.counts)
        counts[std::to_string(p)] = c;
    j = json{{"type", r.type}, {"flag", r.flag}, {"partition", r.partition}, {"tag", r.tag},
             {"counts", counts}, {"stable", r.stable}};
    if (const auto d = r.degree())
        j["degree"] = *d;
    else
        j["degree"] = nullptr;
    if (!r.family_counts.empty()) {
        json fam = json::object();
        for (const auto& [p, c] : r.family_counts)
            fam[std::to_string(p)] = std::vector<std::uint64_t>{c[0], c[1]};
        j["family_counts"] = fam;
    }
}

inline void from_json(const json& j, FlagCountReport& r)
{
    r.type = j.at("type").get<LieType>();
    r.flag = j.at("flag").get<FlagType>();
    r.partition = j.at("partition").get<Partition>();
    r.tag = j.at("tag").get<VeryEvenTag>();
    r.stable = j.at("stable").get<bool>();
    r.counts.clear();
    for (const auto& [p, c] : j.at("counts").items())
        r.counts[std::stoll(p)] = c.get<std::uint64_t>();
    r.family_counts.clear();
    if (j.contains("family_counts"))
        for (const auto& [p, c] : j.at("family_counts").items()) {
            const auto v = c.get<std::vector<std::uint64_t>>();
            r.family_counts[std::stoll(p)] = {v.at(0), v.at(1)};
        }
}

} // namespace nilorb
