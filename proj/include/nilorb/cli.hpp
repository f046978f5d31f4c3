#pragma once

// Command-line front end. run() does all the work and returns the payload so
// that tests can drive it without spawning a process.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilorb/cones.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/json.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/markings.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kBudget = 3, kInvariant = 4 };

inline constexpr std::uint64_t kDefaultSeed = 1;

struct CommandResult {
    int status = kOk;
    std::string format = "json";
    nlohmann::json payload;
    std::optional<std::string> dot;
    std::string message; // help text or error

    /// What the executable writes to stdout.
    std::string output() const;
};

namespace detail {

inline void text_lines(const nlohmann::json& j, const std::string& prefix, std::ostringstream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            text_lines(v, prefix.empty() ? k : prefix + "." + k, os);
    }
    else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            text_lines(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
    else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline std::vector<int> parse_ints(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InvalidArgument("bad " + what + " '" + text + "'");
        }
        catch (const std::logic_error&) {
            throw InvalidArgument("bad " + what + " '" + text + "'");
        }
    }
    if (out.empty())
        throw InvalidArgument("empty " + what);
    return out;
}

inline std::vector<std::int64_t> parse_primes(const std::string& text)
{
    std::vector<std::int64_t> out;
    for (int p : parse_ints(text, "prime list"))
        out.push_back(p);
    return out;
}

inline CharacterVector parse_point(const std::string& text)
{
    CharacterVector x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        x.push_back(parse_rational(item));
    return x;
}

/// Residual factor given as a Lie type ("C2") or as a natural size ("4").
inline int parse_residual(const LieType& ambient, const std::string& text)
{
    if (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0]))) {
        return parse_ints(text, "residual size").front();
    }
    const LieType r = LieType::parse(text);
    if (r.family != ambient.family)
        throw InvalidArgument("residual " + r.name() + " is not of the family of " + ambient.name());
    return r.natural_size();
}

inline nlohmann::json orbit_summary(const OrbitLabel& o)
{
    nlohmann::json j = o;
    j["dimension"] = orbit_dimension(o);
    j["wdd"] = weighted_dynkin(o).labels;
    return j;
}

/// Dominance order on orbit labels; two tags of one very even partition are incomparable.
inline bool label_leq(const OrbitLabel& a, const OrbitLabel& b)
{
    if (a.partition == b.partition)
        return a.tag == b.tag;
    return dominance_leq(a.partition, b.partition);
}

inline std::string poset_dot(const std::vector<OrbitLabel>& orbits, const std::vector<std::pair<int, int>>& edges)
{
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < orbits.size(); ++i)
        os << "  n" << i << " [label=\"" << orbits[i].str() << "\"];\n";
    for (auto [a, b] : edges)
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline BlockOrdering ordering_or_base(const std::vector<int>& sizes, const std::string& text)
{
    return text.empty() ? BlockOrdering::base(sizes) : BlockOrdering::parse(sizes, text);
}

inline LeviDatum type_a_levi(const std::vector<int>& sizes)
{
    int n = 0;
    for (int q : sizes)
        n += q;
    if (n < 2)
        throw InvalidArgument("blocks must add up to at least 2");
    return LeviDatum::make(LieType::make(Family::A, n - 1), sizes);
}

inline nlohmann::json cone_json(const RationalCone& c)
{
    nlohmann::json j = c;
    j["facets"] = c.facets();
    return j;
}

} // namespace detail

inline std::string CommandResult::output() const
{
    if (payload.is_null())
        return "";
    if (format == "dot" && dot)
        return *dot;
    if (format == "text") {
        std::ostringstream os;
        detail::text_lines(payload, "", os);
        return os.str();
    }
    return payload.dump(2) + "\n";
}

/// Parses and executes one command line (without the program name).
inline CommandResult run(const std::vector<std::string>& args)
{
    CommandResult res;
    CLI::App app{"Nilpotent orbits, induction and Springer maps for the classical Lie algebras", "nilorb"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--seed", seed, "seed for sampled points");

    std::string type_s, part_s, flag_s, blocks_s, residual_s, marks_s, point_s, ordering_s, a_s, b_s;
    std::string primes_s = "3,5,7", gap_s = "smallest";
    bool dot_flag = false;

    auto* orbits = app.add_subcommand("orbits", "enumerate nilpotent orbits")->require_subcommand(1);
    auto* orbits_list = orbits->add_subcommand("list", "all orbits of a type");
    orbits_list->add_option("type", type_s)->required();
    auto* orbits_poset = orbits->add_subcommand("poset", "Hasse diagram of the dominance order");
    orbits_poset->add_option("type", type_s)->required();
    orbits_poset->add_flag("--dot", dot_flag, "emit DOT");

    auto* orbit = app.add_subcommand("orbit", "invariants of one orbit")->require_subcommand(1);
    for (const char* name : {"dim", "wdd", "grading"}) {
        auto* sc = orbit->add_subcommand(name, std::string("orbit ") + name);
        sc->add_option("type", type_s)->required();
        sc->add_option("partition", part_s)->required();
    }

    auto* term = app.add_subcommand("terminalize", "reduce an orbit to one with terminal closure");
    term->add_option("type", type_s)->required();
    term->add_option("partition", part_s)->required();
    term->add_option("--gap", gap_s, "which gap to reduce first")->check(CLI::IsMember({"smallest", "largest"}));

    auto* twists = app.add_subcommand("twists", "twists of marked Dynkin diagrams")->require_subcommand(1);
    auto* twists_class = twists->add_subcommand("class", "equivalence class of a marked diagram");
    twists_class->add_option("type", type_s)->required();
    twists_class->add_option("marks", marks_s)->required();

    auto* levi = app.add_subcommand("levi", "Levi subalgebras")->require_subcommand(1);
    auto* levi_wprime = levi->add_subcommand("wprime", "N_W(L)/W(L) by enumeration");
    auto* levi_count = levi->add_subcommand("count", "conjugacy classes of parabolics with this Levi");
    for (auto* sc : {levi_wprime, levi_count}) {
        sc->add_option("type", type_s)->required();
        sc->add_option("blocks", blocks_s)->required();
        sc->add_option("residual", residual_s);
    }

    auto* cones = app.add_subcommand("cones", "chamber structure for type A")->require_subcommand(1);
    auto* cones_nef = cones->add_subcommand("nef", "nef cone of an ordering");
    auto* cones_mov = cones->add_subcommand("movable", "movable cone of a base ordering");
    auto* cones_ch = cones->add_subcommand("chamber", "chambers containing a point");
    for (auto* sc : {cones_nef, cones_mov, cones_ch}) {
        sc->add_option("blocks", blocks_s)->required();
        sc->add_option("--point", point_s, "comma separated rationals");
    }
    cones_nef->add_option("--ordering", ordering_s, "block labels in position order");
    cones_mov->add_option("--ordering", ordering_s, "block labels in position order");

    auto* flops = app.add_subcommand("flops", "Mukai flops")->require_subcommand(1);
    auto* flops_path = flops->add_subcommand("path", "shortest flop path between two orderings");
    flops_path->add_option("blocks", blocks_s)->required();
    flops_path->add_option("a", a_s)->required();
    flops_path->add_option("b", b_s)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force checks")->require_subcommand(1);
    auto* oracle_deg = oracle->add_subcommand("degree", "Springer fibre point counts over F_p");
    oracle_deg->add_option("type", type_s)->required();
    oracle_deg->add_option("partition", part_s)->required();
    oracle_deg->add_option("flagtype", flag_s)->required();
    oracle_deg->add_option("--primes", primes_s, "comma separated primes");
    auto* oracle_cent = oracle->add_subcommand("centralizer", "centralizer dimension by exact linear algebra");
    oracle_cent->add_option("type", type_s)->required();
    oracle_cent->add_option("partition", part_s)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }
    catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        res.format = "text";
        res.message = out.str();
        return res;
    }
    catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        res.status = kUsage;
        res.message = err.str() + out.str() + app.help();
        return res;
    }
    res.format = format;

    try {
        nlohmann::json& j = res.payload;
        j["schema"] = kJsonSchemaVersion;
        auto parsed = [&](CLI::App* sc) { return sc->parsed(); };

        if (parsed(orbits_list)) {
            const LieType t = LieType::parse(type_s);
            j["command"] = "orbits list";
            j["type"] = t;
            j["orbits"] = nlohmann::json::array();
            for (const auto& o : enumerate_orbits(t))
                j["orbits"].push_back(detail::orbit_summary(o));
        }
        else if (parsed(orbits_poset)) {
            const LieType t = LieType::parse(type_s);
            const auto os = enumerate_orbits(t);
            std::vector<std::pair<int, int>> edges;
            for (std::size_t a = 0; a < os.size(); ++a)
                for (std::size_t b = 0; b < os.size(); ++b) {
                    if (a == b || !detail::label_leq(os[a], os[b]))
                        continue;
                    bool cover = true;
                    for (std::size_t c = 0; c < os.size() && cover; ++c)
                        if (c != a && c != b && detail::label_leq(os[a], os[c]) && detail::label_leq(os[c], os[b]))
                            cover = false;
                    if (cover)
                        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
            j["command"] = "orbits poset";
            j["type"] = t;
            j["orbits"] = os;
            j["covers"] = nlohmann::json::array();
            for (auto [a, b] : edges)
                j["covers"].push_back({os[static_cast<std::size_t>(a)].str(), os[static_cast<std::size_t>(b)].str()});
            res.dot = detail::poset_dot(os, edges);
            if (dot_flag)
                res.format = "dot";
        }
        else if (orbit->parsed()) {
            const OrbitLabel o = OrbitLabel::parse(LieType::parse(type_s), part_s);
            j["orbit"] = o;
            if (orbit->get_subcommand("dim")->parsed()) {
                j["command"] = "orbit dim";
                j["dimension"] = orbit_dimension(o);
            }
            else if (orbit->get_subcommand("wdd")->parsed()) {
                j["command"] = "orbit wdd";
                j["wdd"] = weighted_dynkin(o);
                j["neutral_element"] = neutral_element(o);
            }
            else {
                j["command"] = "orbit grading";
                const auto dims = jm_grading_dims(o);
                nlohmann::json g = nlohmann::json::object();
                for (auto [i, d] : dims)
                    g[std::to_string(i)] = d;
                j["grading"] = g;
                j["resolution_dimension"] = jm_resolution_dimension(dims);
                j["dimension"] = orbit_dimension(o);
            }
        }
        else if (parsed(term)) {
            const OrbitLabel o = OrbitLabel::parse(LieType::parse(type_s), part_s);
            j["command"] = "terminalize";
            j["datum"] = terminalize(o, gap_s == "largest" ? GapChoice::Largest : GapChoice::Smallest);
        }
        else if (parsed(twists_class)) {
            const MarkedDiagram d = MarkedDiagram::parse(LieType::parse(type_s), marks_s);
            const TwistClass c = equivalence_class(d);
            j["command"] = "twists class";
            j["diagram"] = d;
            j["class"] = c;
            j["size"] = c.members.size();
            j["first_kind_size"] = c.first_kind.size();
            res.dot = to_dot(c);
        }
        else if (parsed(levi_wprime) || parsed(levi_count)) {
            const LieType t = LieType::parse(type_s);
            const std::vector<int> blocks = detail::parse_ints(blocks_s, "block list");
            const LeviDatum l = residual_s.empty() ? LeviDatum::make(t, blocks)
                                                   : LeviDatum::make(t, blocks, detail::parse_residual(t, residual_s));
            const WprimeGroup g = wprime(l);
            if (parsed(levi_wprime)) {
                j["command"] = "levi wprime";
                j["wprime"] = g;
            }
            else {
                j["command"] = "levi count";
                j["levi"] = l;
                const std::uint64_t n = count_conjugacy_classes(l);
                j["N"] = n;
                j["Wprime"] = g.order();
                j["product"] = n * g.order();
                if (t.family == Family::A) {
                    const std::uint64_t s = enumerate_S_A(l).size();
                    j["S"] = s;
                    j["identity_holds"] = s == n * g.order();
                }
                else {
                    j["S"] = nullptr;
                }
            }
        }
        else if (parsed(cones_nef) || parsed(cones_mov) || parsed(cones_ch)) {
            const std::vector<int> sizes = detail::parse_ints(blocks_s, "block list");
            const LeviDatum l = detail::type_a_levi(sizes);
            std::optional<CharacterVector> x;
            if (!point_s.empty()) {
                x = detail::parse_point(point_s);
                if (x->size() != sizes.size())
                    throw InvalidArgument("point needs " + std::to_string(sizes.size()) + " coordinates");
            }
            if (parsed(cones_nef)) {
                const BlockOrdering ord = detail::ordering_or_base(sizes, ordering_s);
                const RationalCone c = nef_cone(ord);
                j["command"] = "cones nef";
                j["ordering"] = ord;
                j["cone"] = detail::cone_json(c);
                if (x)
                    j["contains"] = c.contains(*x);
            }
            else if (parsed(cones_mov)) {
                const BlockOrdering ord = detail::ordering_or_base(sizes, ordering_s);
                const MovableCone m = movable_cone(ord);
                j["command"] = "cones movable";
                j["base"] = ord;
                j["walls"] = detail::cone_json(m.walls());
                j["chambers"] = enumerate_S1_A(ord);
                if (x)
                    j["contains"] = m.contains(*x);
            }
            else {
                if (!x) {
                    std::mt19937_64 rng(seed);
                    x = random_point(rng, sizes.size());
                }
                const ChamberReport r = chamber_of(*x, l);
                j["command"] = "cones chamber";
                j["point"] = character_json(*x);
                j["chambers"] = r.chambers;
                j["boundary"] = r.boundary();
            }
        }
        else if (parsed(flops_path)) {
            const std::vector<int> sizes = detail::parse_ints(blocks_s, "block list");
            const BlockOrdering a = BlockOrdering::parse(sizes, a_s), b = BlockOrdering::parse(sizes, b_s);
            const auto path = flop_path(a, b);
            j["command"] = "flops path";
            j["from"] = a;
            j["to"] = b;
            j["steps"] = path;
            j["length"] = path.size();
        }
        else if (parsed(oracle_deg)) {
            const OrbitLabel o = OrbitLabel::parse(LieType::parse(type_s), part_s);
            const FlagCountReport r = degree_estimate(o, FlagType::parse(flag_s), detail::parse_primes(primes_s));
            j["command"] = "oracle degree";
            j["report"] = r;
        }
        else if (parsed(oracle_cent)) {
            const OrbitLabel o = OrbitLabel::parse(LieType::parse(type_s), part_s);
            const int c = centralizer_dim(o);
            j["command"] = "oracle centralizer";
            j["orbit"] = o;
            j["centralizer_dim"] = c;
            j["algebra_dim"] = o.type.dimension();
            j["orbit_dim"] = o.type.dimension() - c;
        }
        if (res.format == "dot" && !res.dot)
            throw InvalidArgument("this command has no DOT output");
    }
    catch (const BudgetExceeded& e) {
        res.status = kBudget;
        res.payload = nullptr;
        res.message = std::string("budget exceeded: ") + e.what();
    }
    catch (const InvariantViolation& e) {
        res.status = kInvariant;
        res.payload = nullptr;
        res.message = std::string("invariant violated: ") + e.what();
    }
    catch (const Error& e) {
        res.status = kUsage;
        res.payload = nullptr;
        res.message = std::string("error: ") + e.what();
    }
    catch (const nlohmann::json::exception& e) {
        res.status = kInvariant;
        res.payload = nullptr;
        res.message = std::string("serialization failed: ") + e.what();
    }
    return res;
}

/// Entry point for the executable.
inline int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const CommandResult r = run(args);
    std::cout << r.output();
    if (!r.message.empty())
        (r.status == kOk ? std::cout : std::cerr) << r.message << (r.message.back() == '\n' ? "" : "\n");
    return r.status;
}

} // namespace nilorb::cli
