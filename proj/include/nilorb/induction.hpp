#pragma once

// Richardson orbits in type A, the partition reduction for sp/so, and the
// resulting chains of induction data ending in an orbit with terminal closure.

#include <optional>
#include <string>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

/// Flag type (q_1, ..., q_l) of a parabolic. For B/C/D it is the isotropic
/// type (p_1, ..., p_k, q, p_k, ..., p_1); a zero middle entry is dropped.
struct FlagType {
    std::vector<int> dims;

    auto operator<=>(const FlagType&) const = default;

    int total() const
    {
        int s = 0;
        for (int q : dims)
            s += q;
        return s;
    }

    bool is_palindromic() const
    {
        return std::equal(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(dims.size() / 2), dims.rbegin());
    }

    static FlagType parse(const std::string& text)
    {
        FlagType f;
        std::string s;
        for (char c : text)
            if (c != '(' && c != ')' && c != ' ')
                s += c;
        std::size_t pos = 0;
        while (pos <= s.size() && !s.empty()) {
            const auto comma = s.find(',', pos);
            const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(item, &used);
                if (used != item.size())
                    throw InvalidArgument("bad flag type '" + text + "'");
            }
            catch (const std::logic_error&) {
                throw InvalidArgument("bad flag type '" + text + "'");
            }
            if (v < 0)
                throw InvalidArgument("flag type entries must be nonnegative");
            if (v > 0)
                f.dims.push_back(v);
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        if (f.dims.empty())
            throw InvalidArgument("empty flag type");
        return f;
    }

    std::string csv() const
    {
        std::string s;
        for (std::size_t i = 0; i < dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(dims[i]);
        return s;
    }
};

/// Jordan type of the Richardson orbit of a type-A parabolic: transpose of the sorted flag type.
inline Partition richardson_A(const FlagType& flag)
{
    return transpose(Partition::sorted(flag.dims));
}

/// Distinct parts are exactly k, k-1, ..., 1.
inline bool has_full_members(const Partition& d)
{
    const auto g = d.groups();
    const int k = static_cast<int>(g.size());
    for (int i = 0; i < k; ++i)
        if (g[static_cast<std::size_t>(i)].first != k - i)
            return false;
    return true;
}

struct ReductionStep {
    int p = 0;        // 1-based index of the last reduced distinct part
    int r = 0;        // number of parts reduced (= dim of the isotropic subspace)
    Partition reduced;
};

enum class GapChoice { Smallest, Largest };

namespace detail {

inline void require_bcd(const LieType& t)
{
    if (t.family != Family::B && t.family != Family::C && t.family != Family::D)
        throw InvalidArgument("needs type B, C or D, got " + t.name());
}

} // namespace detail

/// Finds p with d_p >= d_{p+1} + 2 (d_{k+1} := 0) and subtracts 2 from the first p groups.
inline std::optional<ReductionStep> reduction_step(const LieType& t, const Partition& d,
                                                   GapChoice choice = GapChoice::Smallest)
{
    detail::require_bcd(t);
    if (!validate_partition(t, d))
        throw InvalidArgument(d.str() + " is not valid for " + t.name());
    const auto g = d.groups();
    std::optional<int> found;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const int next = i + 1 < g.size() ? g[i + 1].first : 0;
        if (g[i].first >= next + 2) {
            found = static_cast<int>(i) + 1;
            if (choice == GapChoice::Smallest)
                break;
        }
    }
    if (!found)
        return std::nullopt;
    ReductionStep s;
    s.p = *found;
    std::vector<int> parts;
    for (int i = 0; i < s.p; ++i) {
        s.r += g[static_cast<std::size_t>(i)].second;
        parts.insert(parts.end(), static_cast<std::size_t>(g[static_cast<std::size_t>(i)].second),
                     g[static_cast<std::size_t>(i)].first - 2);
    }
    for (std::size_t i = static_cast<std::size_t>(s.p); i < g.size(); ++i)
        parts.insert(parts.end(), static_cast<std::size_t>(g[i].second), g[i].first);
    s.reduced = Partition::sorted(std::move(parts));
    const LieType smaller = LieType::from_natural_size(t.family, t.natural_size() - 2 * s.r);
    if (!validate_partition(smaller, s.reduced))
        detail::fail_invariant("reduction of " + d.str() + " left the family: " + s.reduced.str());
    return s;
}

/// A recorded induction step (p, r). `twin` marks the so(4n+2) step from gl(2n+1) with p = 0.
struct InductionStep {
    int p = 0;
    int r = 0;
    bool twin = false;

    auto operator<=>(const InductionStep&) const = default;
};

/// Inverse of reduction_step: adds 2 to the first r parts of d' (zero padded)
/// and checks that (p, r) is exactly the gap that reduction would see.
inline Partition induct_partition(const Partition& reduced, const InductionStep& step)
{
    if (step.r <= 0)
        throw InvalidArgument("induction step needs r > 0");
    if (step.twin) {
        if (!reduced.empty() || step.r % 2 == 0)
            throw InvalidArgument("twin step needs the zero orbit of so(0) and odd r");
        std::vector<int> parts(static_cast<std::size_t>(step.r - 1), 2);
        parts.push_back(1);
        parts.push_back(1);
        return Partition(std::move(parts));
    }
    std::vector<int> parts = reduced.parts();
    if (parts.size() < static_cast<std::size_t>(step.r))
        parts.resize(static_cast<std::size_t>(step.r), 0);
    for (int i = 0; i < step.r; ++i)
        parts[static_cast<std::size_t>(i)] += 2;
    Partition d = Partition::sorted(parts);
    const auto g = d.groups();
    int covered = 0;
    if (step.p < 1 || step.p > static_cast<int>(g.size()))
        throw InvalidArgument("inconsistent induction step (p out of range)");
    for (int i = 0; i < step.p; ++i)
        covered += g[static_cast<std::size_t>(i)].second;
    const int next = step.p < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(step.p)].first : 0;
    if (covered != step.r || g[static_cast<std::size_t>(step.p - 1)].first < next + 2)
        throw InvalidArgument("inconsistent induction step (" + std::to_string(step.p) + "," +
                              std::to_string(step.r) + ") for " + reduced.str());
    return d;
}

/// Dimension of the isotropic flag variety of type (r, m-2r, r), i.e. of G/Q.
inline int isotropic_grassmannian_dimension(Family f, int m, int r)
{
    const int big = LieType::from_natural_size(f, m).dimension();
    const int small = m - 2 * r > 0 ? LieType::from_natural_size(f, m - 2 * r).dimension() : 0;
    return (big - r * r - small) / 2;
}

struct TerminalizationDatum {
    OrbitLabel input;
    std::vector<InductionStep> steps;
    std::vector<int> levi_blocks;  // gl block sizes, in step order
    Family residual_family = Family::A;
    int residual_size = 0;         // natural size of the residual algebra g'
    Partition terminal_partition;  // orbit O' of g'
    VeryEvenTag terminal_tag = VeryEvenTag::None;
    bool special_case = false;     // so(4n+2) with [2^{2n},1^2]

    /// Isotropic flag type (r_1, ..., r_t, m', r_t, ..., r_1), or the sorted
    /// transpose for type A.
    FlagType flag_type() const
    {
        FlagType f;
        f.dims = levi_blocks;
        if (input.type.family == Family::A)
            return f;
        if (residual_size > 0)
            f.dims.push_back(residual_size);
        for (auto it = levi_blocks.rbegin(); it != levi_blocks.rend(); ++it)
            f.dims.push_back(*it);
        return f;
    }

    /// Residual type as a (possibly degenerate) LieType; nullopt for the zero algebra.
    std::optional<LieType> residual_type() const
    {
        if (residual_size == 0 || input.type.family == Family::A)
            return std::nullopt;
        return LieType::from_natural_size(residual_family, residual_size);
    }

    /// The two marked diagrams of the twin parabolics (vertices 2n+1 and 2n of D_{2n+1}).
    std::vector<std::vector<int>> twin_markings() const
    {
        if (!special_case)
            return {};
        const int rank = steps.back().r;
        return {{rank}, {rank - 1}};
    }

    /// Replays the steps backwards from the terminal orbit.
    Partition reinduce() const
    {
        if (input.type.family == Family::A)
            return richardson_A(FlagType{levi_blocks});
        Partition d = terminal_partition;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            d = induct_partition(d, *it);
        return d;
    }
};

/// Chain of reductions down to an orbit with full members.
inline TerminalizationDatum terminalize(const OrbitLabel& o, GapChoice choice = GapChoice::Smallest)
{
    TerminalizationDatum t;
    t.input = o;
    if (o.type.family == Family::A) {
        t.levi_blocks = transpose(o.partition).parts();
        t.residual_family = Family::A;
        t.residual_size = 0;
        return t;
    }
    detail::require_bcd(o.type);
    t.residual_family = o.type.family;
    int m = o.type.natural_size();
    Partition d = o.partition;
    t.terminal_tag = o.tag;
    while (auto s = reduction_step(LieType::from_natural_size(o.type.family, m), d, choice)) {
        t.steps.push_back({s->p, s->r, false});
        t.levi_blocks.push_back(s->r);
        m -= 2 * s->r;
        d = s->reduced;
        // a very even orbit reduces to a very even one of the same tag, or to zero
        if (!(o.type.family == Family::D && is_very_even(d)))
            t.terminal_tag = VeryEvenTag::None;
    }
    if (!has_full_members(d))
        detail::fail_invariant("reduction stopped at " + d.str() + " without full members");
    if (o.type.family == Family::D && m % 4 == 2 && m >= 6) {
        const int n = (m - 2) / 4;
        std::vector<int> twin(static_cast<std::size_t>(2 * n), 2);
        twin.push_back(1);
        twin.push_back(1);
        if (d == Partition(twin)) {
            t.special_case = true;
            t.steps.push_back({0, 2 * n + 1, true});
            t.levi_blocks.push_back(2 * n + 1);
            m = 0;
            d = Partition{};
        }
    }
    t.residual_size = m;
    t.terminal_partition = d;
    return t;
}

} // namespace nilorb
