#pragma once

// Marked Dynkin diagrams, their single marked subdiagrams, twists and
// equivalence classes.
//
// E6 uses Bourbaki numbering. Picture-to-number table for the drawings of a
// horizontal chain with one vertex hanging below its middle:
//
//     1 - 3 - 4 - 5 - 6        E_{6,I}  : mark at 1 or 6
//             |                E_{6,II} : mark at 3 or 5
//             2

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

struct MarkedDiagram {
    LieType type;
    std::set<int> marks; // 1-based vertices

    auto operator<=>(const MarkedDiagram&) const = default;

    bool is_single() const { return marks.size() == 1; }

    /// "A4{1,3}".
    std::string str() const
    {
        std::string s = type.name() + "{";
        bool first = true;
        for (int v : marks) {
            s += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    static MarkedDiagram make(const LieType& t, std::set<int> marks)
    {
        if (!t.is_standard())
            throw InvalidArgument("unsupported Lie type " + t.name());
        for (int v : marks)
            if (v < 1 || v > t.rank)
                throw InvalidArgument("vertex " + std::to_string(v) + " is not in " + t.name());
        return {t, std::move(marks)};
    }

    /// Comma separated vertex list, e.g. "1,3".
    static MarkedDiagram parse(const LieType& t, const std::string& marks)
    {
        std::set<int> m;
        std::stringstream ss(marks);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            try {
                std::size_t used = 0;
                const int v = std::stoi(item, &used);
                if (used != item.size())
                    throw InvalidArgument("bad vertex '" + item + "'");
                m.insert(v);
            }
            catch (const std::logic_error&) {
                throw InvalidArgument("bad vertex '" + item + "'");
            }
        }
        return make(t, std::move(m));
    }
};

/// D_v together with its embedding: shape vertex i sits at ambient vertex embedding[i-1].
struct SingleSubdiagram {
    MarkedDiagram shape;
    std::vector<int> embedding;
};

namespace detail {

/// Arm of a tree starting at `start` and walking away from `from`.
inline std::vector<int> walk_arm(const std::map<int, std::vector<int>>& adj, int from, int start)
{
    std::vector<int> arm{start};
    int prev = from, cur = start;
    while (true) {
        int next = 0;
        for (int w : adj.at(cur))
            if (w != prev)
                next = w;
        if (next == 0)
            break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

/// Identifies a connected subgraph of a standard Dynkin diagram and numbers it in
/// Bourbaki order. `mark` picks a canonical orientation among the symmetric ones.
inline SingleSubdiagram identify(const DynkinDiagram& dd, const std::set<int>& vertices, int mark)
{
    std::map<int, std::vector<int>> adj;
    const DynkinEdge* double_edge = nullptr;
    for (int v : vertices)
        adj[v];
    for (const auto& e : dd.edges)
        if (vertices.count(e.u) && vertices.count(e.v)) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
            if (e.multiplicity == 2)
                double_edge = &e;
        }
    const int k = static_cast<int>(vertices.size());
    auto position = [&](const std::vector<int>& order) {
        return static_cast<int>(std::find(order.begin(), order.end(), mark) - order.begin()) + 1;
    };
    auto finish = [&](Family f, std::vector<int> order) {
        SingleSubdiagram s;
        s.shape = MarkedDiagram{LieType{f, k}, {position(order)}};
        s.embedding = std::move(order);
        return s;
    };

    std::vector<int> ends, branches;
    for (const auto& [v, nb] : adj) {
        if (nb.size() <= 1)
            ends.push_back(v);
        if (nb.size() == 3)
            branches.push_back(v);
        if (nb.size() > 3)
            fail_invariant("unexpected Dynkin subgraph");
    }
    if (k == 1)
        return finish(Family::A, {*vertices.begin()});

    if (double_edge) {
        // path with the double edge at one end; number from the other end
        const int short_end = double_edge->long_end == double_edge->u ? double_edge->v : double_edge->u;
        int far = 0;
        for (int e : ends)
            if (e != double_edge->u && e != double_edge->v)
                far = e;
        if (far == 0) // two vertices only
            far = double_edge->long_end;
        std::vector<int> order = walk_arm(adj, 0, far);
        // B: long roots along the chain, the short root last; C: the reverse
        const Family f = order.back() == short_end ? Family::B : Family::C;
        if (k == 2) {
            // B2 = C2: number so that vertex 1 is long
            return finish(Family::B, {double_edge->long_end, short_end});
        }
        return finish(f, order);
    }

    if (branches.empty()) {
        std::vector<int> order = walk_arm(adj, 0, ends.front());
        std::vector<int> rev(order.rbegin(), order.rend());
        // orient so that the mark sits in the first half
        return position(order) <= position(rev) ? finish(Family::A, order) : finish(Family::A, rev);
    }

    if (branches.size() != 1)
        fail_invariant("unexpected Dynkin subgraph");
    const int b = branches.front();
    std::vector<std::vector<int>> arms;
    for (int w : adj.at(b))
        arms.push_back(walk_arm(adj, b, w));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();

    if (a0 == 1 && a1 == 1) {
        // D_k: long arm reversed, branch, then the two tips
        if (a2 == 1) {
            // D4: put a marked tip at vertex 1, otherwise any order
            std::vector<std::vector<int>> tips = arms;
            std::stable_partition(tips.begin(), tips.end(), [&](const auto& a) { return a.front() == mark; });
            return finish(Family::D, {tips[0][0], b, tips[1][0], tips[2][0]});
        }
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(b);
        int t1 = arms[0][0], t2 = arms[1][0];
        if (t2 == mark)
            std::swap(t1, t2);
        order.push_back(t1);
        order.push_back(t2);
        return finish(Family::D, order);
    }
    if (a0 == 1 && a1 == 2 && a2 == 2) {
        // E6: 1 - 3 - 4 - 5 - 6 with 2 on 4
        std::vector<int> left = arms[1], right = arms[2];
        if (std::find(right.begin(), right.end(), mark) != right.end())
            std::swap(left, right);
        return finish(Family::E, {left[1], arms[0][0], left[0], b, right[0], right[1]});
    }
    fail_invariant("Dynkin subgraph outside types A-E6");
}

} // namespace detail

/// The maximal connected single marked subdiagram D_v containing the marked vertex v.
inline SingleSubdiagram single_marked_subdiagram(const MarkedDiagram& d, int v)
{
    if (!d.marks.count(v))
        throw InvalidArgument("vertex " + std::to_string(v) + " is not marked in " + d.str());
    const DynkinDiagram dd = DynkinDiagram::of(d.type);
    std::set<int> comp{v};
    std::deque<int> queue{v};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : dd.neighbours(u))
            if (!d.marks.count(w) && comp.insert(w).second)
                queue.push_back(w);
    }
    return detail::identify(dd, comp, v);
}

struct TwistKind {
    bool first = false;
    int dual = 0;        // dual mark position in D_v (first kind only)
    std::string name;    // "A_{n-1}", "D_n", "E_{6,I}", "E_{6,II}" for the first kind

    bool operator==(const TwistKind&) const = default;
};

/// Kind of a single marked diagram, decided on its isomorphism type.
inline TwistKind classify_kind(const MarkedDiagram& dv)
{
    if (!dv.is_single())
        throw InvalidArgument(dv.str() + " is not a single marked diagram");
    const int v = *dv.marks.begin();
    const SingleSubdiagram s = single_marked_subdiagram(MarkedDiagram::make(dv.type, dv.marks), v);
    if (static_cast<int>(s.embedding.size()) != dv.type.rank)
        throw InvalidArgument(dv.str() + " is not connected around its mark");
    const LieType t = s.shape.type;
    const int k = *s.shape.marks.begin();
    TwistKind out;
    // dual positions are reported in the numbering of the input diagram
    auto back = [&](int shape_pos) { return s.embedding[static_cast<std::size_t>(shape_pos - 1)]; };
    switch (t.family) {
    case Family::A:
        if (2 * k != t.rank + 1)
            out = {true, back(t.rank + 1 - k), "A_" + std::to_string(t.rank)};
        break;
    case Family::D:
        if (t.rank % 2 == 1 && t.rank >= 5 && k >= t.rank - 1)
            out = {true, back(k == t.rank ? t.rank - 1 : t.rank), "D_" + std::to_string(t.rank)};
        break;
    case Family::E:
        if (k == 1 || k == 6)
            out = {true, back(7 - k), "E_{6,I}"};
        else if (k == 3 || k == 5)
            out = {true, back(8 - k), "E_{6,II}"};
        break;
    default:
        break;
    }
    return out;
}

/// Adjacent diagram obtained by twisting at the marked vertex v.
inline MarkedDiagram twist(const MarkedDiagram& d, int v)
{
    const SingleSubdiagram s = single_marked_subdiagram(d, v);
    const TwistKind kind = classify_kind(s.shape);
    if (!kind.first)
        return d;
    MarkedDiagram out = d;
    out.marks.erase(v);
    out.marks.insert(s.embedding[static_cast<std::size_t>(kind.dual - 1)]);
    return out;
}

struct TwistEdge {
    MarkedDiagram from;
    MarkedDiagram to;
    int vertex = 0;
    bool first_kind = false;
};

struct TwistClass {
    std::vector<MarkedDiagram> members;       // closure under all twists
    std::vector<MarkedDiagram> first_kind;    // closure under first-kind twists only
    std::vector<TwistEdge> edges;
};

inline constexpr std::size_t kTwistClassBudget = 200000;

/// Breadth-first closure of d under twists.
inline TwistClass equivalence_class(const MarkedDiagram& d)
{
    auto closure = [&](bool only_first, std::vector<TwistEdge>* edges) {
        std::set<MarkedDiagram> seen{d};
        std::vector<MarkedDiagram> order{d};
        for (std::size_t i = 0; i < order.size(); ++i) {
            const MarkedDiagram cur = order[i];
            for (int v : cur.marks) {
                const bool first = classify_kind(single_marked_subdiagram(cur, v).shape).first;
                if (only_first && !first)
                    continue;
                const MarkedDiagram next = twist(cur, v);
                if (edges)
                    edges->push_back({cur, next, v, first});
                if (seen.insert(next).second) {
                    if (seen.size() > kTwistClassBudget)
                        throw BudgetExceeded("twist class larger than " + std::to_string(kTwistClassBudget));
                    order.push_back(next);
                }
            }
        }
        std::sort(order.begin(), order.end());
        return order;
    };
    TwistClass c;
    c.members = closure(false, &c.edges);
    c.first_kind = closure(true, nullptr);
    return c;
}

/// Twist graph in DOT; second-kind twists appear as dashed self loops.
inline std::string to_dot(const TwistClass& c)
{
    std::ostringstream os;
    os << "graph twists {\n";
    std::map<MarkedDiagram, std::size_t> id;
    for (const auto& m : c.members) {
        id.emplace(m, id.size());
        os << "  n" << id[m] << " [label=\"" << m.str() << "\"];\n";
    }
    std::set<std::tuple<std::size_t, std::size_t, int>> done;
    for (const auto& e : c.edges) {
        std::size_t a = id.at(e.from), b = id.at(e.to);
        if (a > b)
            std::swap(a, b);
        if (!done.insert({a, b, e.first_kind ? -1 : e.vertex}).second)
            continue;
        os << "  n" << a << " -- n" << b << " [label=\"" << (e.first_kind ? "first" : "second")
           << "\"" << (e.first_kind ? "" : ", style=dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

/// Single marked diagram of a primitive pair together with the admissible residual orbits O'.
struct PrimitivePair {
    MarkedDiagram diagram;
    MarkedDiagram dual;
    std::string name;
    std::vector<std::string> residual_orbits; // "0" or partitions in the Levi factor
};

inline PrimitivePair primitive_pair(const MarkedDiagram& dv)
{
    const TwistKind k = classify_kind(dv);
    if (!k.first)
        throw InvalidArgument(dv.str() + " is of the second kind");
    PrimitivePair p{dv, MarkedDiagram{dv.type, {k.dual}}, k.name, {"0"}};
    if (k.name == "E_{6,I}") {
        // O' in the D5 Levi factor
        p.residual_orbits = {"0", "[3,2^2,1^3]", "[2^2,1^6]"};
    }
    return p;
}

} // namespace nilorb
