#pragma once

// Nilpotent orbits of the classical Lie algebras via Jordan types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

/// A weakly descending sequence of positive integers.
class Partition {
public:
    Partition() = default;

    /// Validates that `parts` is positive and weakly descending.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InvalidArgument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly descending");
        }
    }

    /// Sorts `parts` descending and drops zeros.
    static Partition sorted(std::vector<int> parts)
    {
        parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses "3,2,2,1", "[3,2,2,1]", "3,2^2,1" or "" (empty partition).
    static Partition parse(const std::string& text)
    {
        std::string s;
        for (char c : text)
            if (c != '[' && c != ']' && c != ' ')
                s += c;
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            int base = 0, mult = 1;
            try {
                const auto hat = item.find('^');
                std::size_t used = 0;
                base = std::stoi(item.substr(0, hat), &used);
                if (used != (hat == std::string::npos ? item.size() : hat))
                    throw InvalidArgument("bad partition '" + text + "'");
                if (hat != std::string::npos)
                    mult = std::stoi(item.substr(hat + 1));
            }
            catch (const std::logic_error&) {
                throw InvalidArgument("bad partition '" + text + "'");
            }
            if (base <= 0 || mult <= 0)
                throw InvalidArgument("bad partition '" + text + "'");
            parts.insert(parts.end(), static_cast<std::size_t>(mult), base);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Distinct parts with multiplicities, largest first: [d_1^{s_1}, ..., d_k^{s_k}].
    std::vector<std::pair<int, int>> groups() const
    {
        std::vector<std::pair<int, int>> g;
        for (int p : parts_) {
            if (!g.empty() && g.back().first == p)
                ++g.back().second;
            else
                g.emplace_back(p, 1);
        }
        return g;
    }

    int multiplicity(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + "]";
    }

    /// Comma separated, as accepted by the command line.
    std::string csv() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Column lengths of the Young diagram.
inline Partition transpose(const Partition& d)
{
    std::vector<int> t(static_cast<std::size_t>(d.empty() ? 0 : d[0]), 0);
    for (int p : d.parts())
        for (int i = 0; i < p; ++i)
            ++t[static_cast<std::size_t>(i)];
    return Partition(std::move(t));
}

/// All partitions of m, in descending lexicographic order.
inline std::vector<Partition> partitions_of(int m)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (m >= 0)
        rec(m, m);
    return out;
}

/// f <= d in the dominance order (d's prefix sums dominate f's).
inline bool dominance_leq(const Partition& f, const Partition& d)
{
    if (f.weight() != d.weight())
        throw InvalidArgument("dominance needs equal weights: " + f.str() + " vs " + d.str());
    int sf = 0, sd = 0;
    const std::size_t len = std::max(f.length(), d.length());
    for (std::size_t k = 0; k < len; ++k) {
        sf += f[k];
        sd += d[k];
        if (sd < sf)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orbit labels

enum class VeryEvenTag { None, I, II };

inline std::string tag_suffix(VeryEvenTag t)
{
    switch (t) {
    case VeryEvenTag::I: return "I";
    case VeryEvenTag::II: return "II";
    default: return "";
    }
}

/// Only even parts, each with even multiplicity.
inline bool is_very_even(const Partition& d)
{
    if (d.empty())
        return false;
    for (auto [part, mult] : d.groups())
        if (part % 2 != 0 || mult % 2 != 0)
            return false;
    return true;
}

/// Parity rule of the classical family; throws when the weight is not the natural size.
inline bool validate_partition(const LieType& t, const Partition& d)
{
    detail::require_classical(t);
    if (d.weight() != t.natural_size())
        throw InvalidArgument("partition " + d.str() + " has weight " + std::to_string(d.weight()) + ", " + t.name() +
                              " needs " + std::to_string(t.natural_size()));
    if (t.family == Family::A)
        return true;
    const int bad_parity = t.family == Family::C ? 1 : 0;
    for (auto [part, mult] : d.groups())
        if (part % 2 == bad_parity && mult % 2 != 0)
            return false;
    return true;
}

struct OrbitLabel {
    LieType type;
    Partition partition;
    VeryEvenTag tag = VeryEvenTag::None;

    auto operator<=>(const OrbitLabel&) const = default;

    /// Validating constructor. Very even D partitions require a tag, others forbid one.
    static OrbitLabel make(const LieType& t, Partition d, VeryEvenTag tag = VeryEvenTag::None)
    {
        if (!validate_partition(t, d))
            throw InvalidArgument(d.str() + " is not the Jordan type of a nilpotent in " + t.name());
        const bool ve = t.family == Family::D && is_very_even(d);
        if (ve && tag == VeryEvenTag::None)
            throw InvalidArgument("very even partition " + d.str() + " needs tag I or II");
        if (!ve && tag != VeryEvenTag::None)
            throw InvalidArgument("tag given for a partition that is not very even in type D");
        return {t, std::move(d), tag};
    }

    /// Parses "2,2,2,2:I" style partition text.
    static OrbitLabel parse(const LieType& t, const std::string& text)
    {
        auto colon = text.find(':');
        VeryEvenTag tag = VeryEvenTag::None;
        if (colon != std::string::npos) {
            const std::string s = text.substr(colon + 1);
            if (s == "I")
                tag = VeryEvenTag::I;
            else if (s == "II")
                tag = VeryEvenTag::II;
            else
                throw InvalidArgument("bad very-even tag '" + s + "'");
        }
        return make(t, Partition::parse(text.substr(0, colon)), tag);
    }

    std::string str() const
    {
        std::string s = partition.str();
        if (tag != VeryEvenTag::None)
            s += tag_suffix(tag);
        return s;
    }
};

/// All orbits of t, largest first (descending lexicographic on partitions, I before II).
inline std::vector<OrbitLabel> enumerate_orbits(const LieType& t)
{
    std::vector<OrbitLabel> out;
    for (Partition& d : partitions_of(t.natural_size())) {
        if (!validate_partition(t, d))
            continue;
        if (t.family == Family::D && is_very_even(d)) {
            out.push_back({t, d, VeryEvenTag::I});
            out.push_back({t, std::move(d), VeryEvenTag::II});
        }
        else {
            out.push_back({t, std::move(d), VeryEvenTag::None});
        }
    }
    return out;
}

/// Dimension of the orbit.
///
/// Type A evaluates n(n+1) - 2 sum_i i*d_i over the Jordan type; B/C/D use the
/// centralizer dimension (sum (d^t_i)^2 +- #odd parts)/2, + for C and - for B/D.
inline int orbit_dimension(const OrbitLabel& o)
{
    const Partition& d = o.partition;
    if (o.type.family == Family::A) {
        const int n = o.type.natural_size();
        int s = 0;
        for (std::size_t i = 0; i < d.length(); ++i)
            s += static_cast<int>(i + 1) * d[i];
        return n * (n + 1) - 2 * s;
    }
    int sq = 0;
    const Partition dt = transpose(d);
    for (int c : dt.parts())
        sq += c * c;
    int odd = 0;
    for (int p : d.parts())
        odd += p % 2;
    const int centralizer = o.type.family == Family::C ? (sq + odd) / 2 : (sq - odd) / 2;
    return o.type.dimension() - centralizer;
}

// ---------------------------------------------------------------------------
// Weighted Dynkin diagrams

/// The dominant neutral element h of an sl2-triple through the orbit, in epsilon coordinates.
///
/// Each part d contributes eigenvalues d-1, d-3, ..., 1-d. Type A keeps all of them
/// sorted descending; B/C/D keep the rank largest ones. Tag II negates the last coordinate.
inline std::vector<int> neutral_element(const OrbitLabel& o)
{
    std::vector<int> h;
    for (int p : o.partition.parts())
        for (int v = p - 1; v >= 1 - p; v -= 2)
            h.push_back(v);
    std::sort(h.begin(), h.end(), std::greater<>());
    if (o.type.family != Family::A)
        h.resize(static_cast<std::size_t>(o.type.rank));
    if (o.tag == VeryEvenTag::II && !h.empty())
        h.back() = -h.back();
    return h;
}

struct WeightedDynkinDiagram {
    LieType type;
    std::vector<int> labels; // labels[i] sits on vertex i+1

    auto operator<=>(const WeightedDynkinDiagram&) const = default;

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < labels.size(); ++i)
            s += (i ? "," : "") + std::to_string(labels[i]);
        return s;
    }
};

inline WeightedDynkinDiagram weighted_dynkin(const OrbitLabel& o)
{
    const std::vector<int> h = neutral_element(o);
    WeightedDynkinDiagram w{o.type, {}};
    for (const Root& a : simple_roots(o.type)) {
        const int label = a.dot(h);
        if (label < 0 || label > 2)
            detail::fail_invariant("weighted Dynkin label " + std::to_string(label) + " for " + o.str());
        w.labels.push_back(label);
    }
    return w;
}

/// dim g_i for the grading by ad h.
inline std::map<int, int> jm_grading_dims(const OrbitLabel& o)
{
    const std::vector<int> h = neutral_element(o);
    std::map<int, int> dims;
    dims[0] = o.type.rank;
    for (const Root& a : roots_of(o.type))
        ++dims[a.dot(h)];
    return dims;
}

/// dim(g/p) + dim n_2 for the Jacobson-Morozov parabolic p.
inline int jm_resolution_dimension(const std::map<int, int>& dims)
{
    int out = 0;
    for (auto [i, d] : dims) {
        if (i < 0)
            out += d;
        if (i >= 2)
            out += d;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagram automorphisms of type D

/// Nontrivial diagram automorphisms of D_n as vertex maps (1-based, index 0 unused).
/// D_4 gets all of S_3 on the outer vertices {1,3,4}; D_n (n != 4) only the fork swap.
inline std::vector<std::vector<int>> d_diagram_automorphisms(int n)
{
    std::vector<std::vector<int>> out;
    auto ident = [n] {
        std::vector<int> p(static_cast<std::size_t>(n + 1));
        std::iota(p.begin(), p.end(), 0);
        return p;
    };
    if (n == 4) {
        std::vector<int> outer{1, 3, 4};
        std::vector<int> img = outer;
        while (std::next_permutation(img.begin(), img.end())) {
            auto p = ident();
            for (std::size_t i = 0; i < 3; ++i)
                p[static_cast<std::size_t>(outer[i])] = img[i];
            out.push_back(p);
        }
        return out;
    }
    auto p = ident();
    std::swap(p[static_cast<std::size_t>(n - 1)], p[static_cast<std::size_t>(n)]);
    out.push_back(p);
    return out;
}

/// Orbit whose weighted diagram is the image of o's under a vertex map.
inline OrbitLabel diagram_image(const OrbitLabel& o, const std::vector<int>& vertex_map)
{
    const WeightedDynkinDiagram w = weighted_dynkin(o);
    WeightedDynkinDiagram img{o.type, w.labels};
    for (std::size_t v = 1; v < vertex_map.size(); ++v)
        img.labels[static_cast<std::size_t>(vertex_map[v] - 1)] = w.labels[v - 1];
    for (const OrbitLabel& cand : enumerate_orbits(o.type))
        if (weighted_dynkin(cand) == img)
            return cand;
    detail::fail_invariant("diagram image of " + o.str() + " is not a weighted diagram of an orbit");
}

/// Image of an orbit of so(2r) under conjugation by an element of O(2r) \ SO(2r).
/// Works for the degenerate ranks too, where no diagram is available.
inline OrbitLabel fork_swap(const OrbitLabel& o)
{
    if (o.type.family != Family::D)
        throw InvalidArgument("fork swap needs type D");
    if (o.type.is_standard()) {
        const int n = o.type.rank;
        std::vector<int> swap(static_cast<std::size_t>(n + 1));
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[static_cast<std::size_t>(n - 1)], swap[static_cast<std::size_t>(n)]);
        return diagram_image(o, swap);
    }
    OrbitLabel r = o;
    if (r.tag == VeryEvenTag::I)
        r.tag = VeryEvenTag::II;
    else if (r.tag == VeryEvenTag::II)
        r.tag = VeryEvenTag::I;
    return r;
}

/// Whether some nontrivial diagram automorphism sends the orbit to a different one.
inline bool outer_auto_moves_orbit(const OrbitLabel& o)
{
    if (o.type.family != Family::D || !o.type.is_standard())
        throw InvalidArgument("outer_auto_moves_orbit needs type D_n, n >= 3");
    for (const auto& a : d_diagram_automorphisms(o.type.rank))
        if (!(diagram_image(o, a) == o))
            return true;
    return false;
}

} // namespace nilorb
