#pragma once

// Levi subalgebras of standard parabolics: the group W' = N_W(L)/W(L) by brute
// force, and for type A an exact model of the parabolics with a fixed Levi part
// as labelled orderings of its gl blocks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/markings.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

/// gl blocks q_1, ..., q_t on consecutive coordinates, followed (B/C/D) by a
/// residual factor of the ambient family with the given natural size.
struct LeviDatum {
    LieType ambient;
    std::vector<int> blocks;
    int residual_size = 0;

    auto operator<=>(const LeviDatum&) const = default;

    static LeviDatum make(const LieType& t, std::vector<int> blocks, int residual_size = -1)
    {
        detail::require_classical(t);
        if (blocks.empty() && t.family == Family::A)
            throw InvalidArgument("type A Levi needs at least one block");
        int s = 0;
        for (int q : blocks) {
            if (q <= 0)
                throw InvalidArgument("block sizes must be positive");
            s += q;
        }
        const int m = t.natural_size();
        if (t.family == Family::A) {
            if (residual_size > 0)
                throw InvalidArgument("type A Levi has no residual factor");
            if (s != m)
                throw InvalidArgument("blocks must add up to " + std::to_string(m) + " for " + t.name());
            return {t, std::move(blocks), 0};
        }
        if (residual_size < 0)
            residual_size = m - 2 * s;
        if (residual_size < 0 || 2 * s + residual_size != m)
            throw InvalidArgument("2 * sum(blocks) + residual must equal " + std::to_string(m) + " for " + t.name());
        if (t.family == Family::B && residual_size % 2 == 0)
            throw InvalidArgument("residual of a B Levi has odd natural size");
        return {t, std::move(blocks), residual_size};
    }

    /// Levi of the parabolic attached to a terminalization.
    static LeviDatum of(const TerminalizationDatum& d)
    {
        return make(d.input.type, d.levi_blocks, d.input.type.family == Family::A ? 0 : d.residual_size);
    }

    /// Standard marked diagram whose unmarked vertices generate this Levi.
    MarkedDiagram marked_diagram() const
    {
        std::set<int> marks;
        const int n = ambient.rank;
        int s = 0;
        for (int q : blocks) {
            s += q;
            if (ambient.family == Family::A) {
                if (s < ambient.natural_size())
                    marks.insert(s);
            }
            else {
                marks.insert(s);
            }
        }
        if (ambient.family == Family::D && residual_size == 2)
            marks.insert(n); // so(2) is a torus: both fork vertices are marked
        return MarkedDiagram::make(ambient, std::move(marks));
    }

    int center_dim() const { return static_cast<int>(marked_diagram().marks.size()); }

    std::optional<LieType> residual_type() const
    {
        if (ambient.family == Family::A || residual_size == 0)
            return std::nullopt;
        return LieType::from_natural_size(ambient.family, residual_size);
    }

    /// First coordinate index (0-based) of each block.
    std::vector<int> block_offsets() const
    {
        std::vector<int> off;
        int s = 0;
        for (int q : blocks) {
            off.push_back(s);
            s += q;
        }
        return off;
    }

    std::string str() const
    {
        std::string s = ambient.name() + "(";
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s += (i ? "," : "") + std::to_string(blocks[i]);
        s += ")";
        if (residual_size > 0)
            s += "+" + LieType::from_natural_size(ambient.family, residual_size).name();
        return s;
    }
};

/// Roots of the Levi: those in the span of the unmarked simple roots.
inline std::vector<Root> levi_roots(const LieType& t, const MarkedDiagram& d)
{
    const std::vector<Root> simple = simple_roots(t);
    std::vector<Root> unmarked;
    for (int v = 1; v <= t.rank; ++v)
        if (!d.marks.count(v))
            unmarked.push_back(simple[static_cast<std::size_t>(v - 1)]);
    const auto cols = static_cast<std::size_t>(t.coordinate_count());
    auto to_matrix = [&](const std::vector<Root>& rs) {
        QMatrix m(rs.size(), cols);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rs[i].coords[j];
        return m;
    };
    const std::size_t base = rank(to_matrix(unmarked));
    std::vector<Root> out;
    for (const Root& r : roots_of(t)) {
        std::vector<Root> with = unmarked;
        with.push_back(r);
        if (rank(to_matrix(with)) == base)
            out.push_back(r);
    }
    return out;
}

inline std::vector<Root> levi_roots(const LeviDatum& l) { return levi_roots(l.ambient, l.marked_diagram()); }

struct WprimeGroup {
    LeviDatum levi;
    /// One element of N_W(Phi_L) per coset of W(Phi_L): the one preserving Phi_L^+.
    std::vector<WeylElement> representatives;
    std::uint64_t normalizer_order = 0;
    std::uint64_t reflection_subgroup_order = 0;

    std::uint64_t order() const { return representatives.size(); }
};

/// Worker count from NILORB_THREADS (default 1).
inline unsigned thread_count()
{
    if (const char* env = std::getenv("NILORB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(std::min(n, 64));
    }
    return 1;
}

/// W' = N_W(Phi_L) / W(Phi_L), by enumerating W.
inline WprimeGroup wprime(const LeviDatum& levi)
{
    const LieType t = levi.ambient;
    const WeylGroup w(t);
    const std::vector<Root> phi = levi_roots(levi);
    const std::set<Root> phi_set(phi.begin(), phi.end());
    std::set<Root> phi_pos;
    for (const Root& r : phi)
        if (r.is_positive())
            phi_pos.insert(r);

    struct Partial {
        std::uint64_t normalizer = 0;
        std::vector<WeylElement> reps;
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), w.size()));
    std::vector<Partial> parts(workers);
    auto scan = [&](unsigned k) {
        const std::uint64_t lo = w.size() * k / workers, hi = w.size() * (k + 1) / workers;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const WeylElement x = w.element(i);
            bool normalizes = true, keeps_positive = true;
            for (const Root& r : phi) {
                Root image{x.apply(r.coords)};
                if (!phi_set.count(image)) {
                    normalizes = false;
                    break;
                }
                if (r.is_positive() && !image.is_positive())
                    keeps_positive = false;
            }
            if (!normalizes)
                continue;
            ++parts[k].normalizer;
            if (keeps_positive)
                parts[k].reps.push_back(x);
        }
    };
    if (workers <= 1) {
        scan(0);
    }
    else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k)
            pool.emplace_back(scan, k);
        for (auto& th : pool)
            th.join();
    }

    WprimeGroup g{levi, {}, 0, 0};
    for (auto& p : parts) {
        g.normalizer_order += p.normalizer;
        g.representatives.insert(g.representatives.end(), p.reps.begin(), p.reps.end());
    }
    std::vector<WeylElement> gens;
    for (const Root& r : phi_pos)
        gens.push_back(reflection(t, r));
    g.reflection_subgroup_order = generate_subgroup(t, gens).size();
    if (g.normalizer_order != g.order() * g.reflection_subgroup_order)
        detail::fail_invariant("normalizer of " + levi.str() + " is not a union of cosets with positive representatives");
    return g;
}

/// Image of each gl block under a W' representative (type A or B/C/D blocks).
inline std::vector<int> block_permutation(const LeviDatum& levi, const WeylElement& w)
{
    const std::vector<int> off = levi.block_offsets();
    std::vector<int> image(levi.blocks.size(), -1);
    for (std::size_t i = 0; i < levi.blocks.size(); ++i) {
        const int c = w.perm[static_cast<std::size_t>(off[i])];
        for (std::size_t j = 0; j < levi.blocks.size(); ++j)
            if (c >= off[j] && c < off[j] + levi.blocks[j])
                image[i] = static_cast<int>(j);
        if (image[i] < 0 || levi.blocks[static_cast<std::size_t>(image[i])] != levi.blocks[i])
            detail::fail_invariant("W' element " + w.str() + " does not permute the blocks of " + levi.str());
    }
    return image;
}

/// Whether w induces an outer (fork swapping) automorphism on a residual factor of type D.
inline bool acts_outer_on_residual(const LeviDatum& levi, const WeylElement& w)
{
    if (levi.ambient.family != Family::D || levi.residual_size < 4)
        return false;
    const int first = levi.ambient.rank - levi.residual_size / 2;
    int neg = 0;
    for (int i = first; i < levi.ambient.rank; ++i) {
        if (w.perm[static_cast<std::size_t>(i)] < first)
            detail::fail_invariant("W' element " + w.str() + " moves the residual factor of " + levi.str());
        neg += w.sign[static_cast<std::size_t>(i)] < 0;
    }
    return neg % 2 == 1;
}

/// Whether every W' representative maps the residual orbit O' to itself.
inline bool wprime_stabilizes(const WprimeGroup& g, const OrbitLabel& residual_orbit)
{
    for (const WeylElement& w : g.representatives)
        if (acts_outer_on_residual(g.levi, w) && fork_swap(residual_orbit) != residual_orbit)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Type A: parabolics with a fixed Levi part as orderings of labelled blocks

/// Blocks b_1..b_t in position order; sizes are indexed by label.
struct BlockOrdering {
    std::vector<int> order; // labels 1..t
    std::vector<int> sizes; // sizes[label - 1]

    auto operator<=>(const BlockOrdering&) const = default;

    std::size_t length() const { return order.size(); }
    int size_at(std::size_t pos) const { return sizes[static_cast<std::size_t>(order[pos] - 1)]; }

    FlagType flag_type() const
    {
        FlagType f;
        for (std::size_t i = 0; i < order.size(); ++i)
            f.dims.push_back(size_at(i));
        return f;
    }

    /// Marked diagram of A_{n-1} with marks at the block boundaries.
    MarkedDiagram marked_diagram() const
    {
        int total = 0;
        for (int q : sizes)
            total += q;
        std::set<int> marks;
        int s = 0;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            s += size_at(i);
            marks.insert(s);
        }
        return MarkedDiagram::make(LieType::make(Family::A, total - 1), std::move(marks));
    }

    /// "1,3,2" (labels).
    std::string csv() const
    {
        std::string s;
        for (std::size_t i = 0; i < order.size(); ++i)
            s += (i ? "," : "") + std::to_string(order[i]);
        return s;
    }

    /// "(b1,b3,b2)".
    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < order.size(); ++i)
            s += (i ? ",b" : "b") + std::to_string(order[i]);
        return s + ")";
    }

    static BlockOrdering base(std::vector<int> sizes)
    {
        BlockOrdering b{std::vector<int>(sizes.size()), std::move(sizes)};
        std::iota(b.order.begin(), b.order.end(), 1);
        b.validate();
        return b;
    }

    /// Labels as "1,3,2" or "b1,b3,b2".
    static BlockOrdering parse(const std::vector<int>& sizes, const std::string& text)
    {
        BlockOrdering b{{}, sizes};
        std::string s;
        for (char c : text)
            if (c != '(' && c != ')' && c != ' ' && c != 'b')
                s += c;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                b.order.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw InvalidArgument("bad block label '" + item + "'");
            }
            catch (const std::logic_error&) {
                throw InvalidArgument("bad block label '" + item + "'");
            }
        }
        b.validate();
        return b;
    }

    void validate() const
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw InvalidArgument("block labels must be a permutation of 1.." + std::to_string(sizes.size()));
        if (sorted.size() != sizes.size())
            throw InvalidArgument("ordering has " + std::to_string(order.size()) + " labels for " +
                                  std::to_string(sizes.size()) + " blocks");
        for (int q : sizes)
            if (q <= 0)
                throw InvalidArgument("block sizes must be positive");
    }

    /// Swaps the blocks at positions pos and pos+1.
    BlockOrdering swapped(std::size_t pos) const
    {
        BlockOrdering b = *this;
        std::swap(b.order[pos], b.order[pos + 1]);
        return b;
    }
};

namespace detail {

inline void require_A(const LeviDatum& l)
{
    if (l.ambient.family != Family::A)
        throw InvalidArgument("exact parabolic model exists for type A only, got " + l.ambient.name());
}

} // namespace detail

inline constexpr std::size_t kBlockBudget = 8;

/// S(l): all t! orderings of the labelled blocks, lexicographic in labels.
inline std::vector<BlockOrdering> enumerate_S_A(const LeviDatum& levi)
{
    detail::require_A(levi);
    if (levi.blocks.size() > kBlockBudget)
        throw BudgetExceeded("orderings limited to " + std::to_string(kBlockBudget) + " blocks");
    BlockOrdering b = BlockOrdering::base(levi.blocks);
    std::vector<BlockOrdering> out;
    do
        out.push_back(b);
    while (std::next_permutation(b.order.begin(), b.order.end()));
    return out;
}

/// S^1(base): orderings reachable from base by swapping adjacent blocks of different sizes.
inline std::vector<BlockOrdering> enumerate_S1_A(const BlockOrdering& base)
{
    if (base.length() > kBlockBudget)
        throw BudgetExceeded("orderings limited to " + std::to_string(kBlockBudget) + " blocks");
    std::set<BlockOrdering> seen{base};
    std::vector<BlockOrdering> queue{base};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t p = 0; p + 1 < queue[i].length(); ++p) {
            if (queue[i].size_at(p) == queue[i].size_at(p + 1))
                continue;
            BlockOrdering next = queue[i].swapped(p);
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    return {seen.begin(), seen.end()};
}

/// Equal-size blocks appear in the same relative order in a and b.
inline bool same_first_kind_class(const BlockOrdering& a, const BlockOrdering& b)
{
    if (a.sizes != b.sizes || a.length() != b.length())
        return false;
    auto restricted = [](const BlockOrdering& o, int q) {
        std::vector<int> r;
        for (std::size_t i = 0; i < o.length(); ++i)
            if (o.size_at(i) == q)
                r.push_back(o.order[i]);
        return r;
    };
    for (int q : std::set<int>(a.sizes.begin(), a.sizes.end()))
        if (restricted(a, q) != restricted(b, q))
            return false;
    return true;
}

/// Number of distinct arrangements of the block sizes: t! / prod m_j!.
inline std::uint64_t multiset_permutations(const std::vector<int>& sizes)
{
    std::map<int, int> mult;
    for (int q : sizes)
        ++mult[q];
    std::uint64_t r = 1;
    int placed = 0;
    for (auto [q, m] : mult)
        for (int i = 1; i <= m; ++i) {
            ++placed;
            r = r * static_cast<std::uint64_t>(placed) / static_cast<std::uint64_t>(i);
        }
    return r;
}

/// N: number of conjugacy classes of parabolics with Levi part l, as the size of the
/// twist class of its standard marked diagram.
inline std::uint64_t count_conjugacy_classes(const LeviDatum& levi)
{
    return equivalence_class(levi.marked_diagram()).members.size();
}

} // namespace nilorb
