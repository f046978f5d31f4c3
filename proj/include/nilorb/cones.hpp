#pragma once

// Chamber structure of the character space of a type-A Levi: nef cones of the
// parabolics with that Levi, the movable cone, the W' action and flop paths.
// Coordinates are the determinant-character coefficients, one per block; the
// all-ones direction is a lineality space throughout.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/markings.hpp"

namespace nilorb {

/// Coefficients indexed by block label - 1.
using CharacterVector = std::vector<Rational>;

/// Intersection of half-spaces a . x >= 0.
struct RationalCone {
    std::vector<std::vector<int>> inequalities;

    bool contains(const CharacterVector& x) const
    {
        for (const auto& a : inequalities)
            if (value(a, x) < 0)
                return false;
        return true;
    }

    /// Strictly inside every half-space.
    bool interior_contains(const CharacterVector& x) const
    {
        for (const auto& a : inequalities)
            if (value(a, x) <= 0)
                return false;
        return true;
    }

    std::size_t facets() const { return inequalities.size(); }

    static Rational value(const std::vector<int>& a, const CharacterVector& x)
    {
        if (a.size() != x.size())
            throw InvalidArgument("character vector has the wrong number of coordinates");
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0)
                s += a[i] * x[i];
        return s;
    }
};

namespace detail {

inline std::vector<int> difference_row(std::size_t t, int i, int j)
{
    std::vector<int> a(t, 0);
    a[static_cast<std::size_t>(i - 1)] = 1;
    a[static_cast<std::size_t>(j - 1)] = -1;
    return a;
}

} // namespace detail

/// x at position 1 >= x at position 2 >= ... >= x at position t.
inline RationalCone nef_cone(const BlockOrdering& ord)
{
    RationalCone c;
    for (std::size_t p = 0; p + 1 < ord.length(); ++p)
        c.inequalities.push_back(detail::difference_row(ord.length(), ord.order[p], ord.order[p + 1]));
    return c;
}

/// Codimension-one face F_v of nef_cone(ord) at the boundary between positions p and p+1 (0-based p).
inline RationalCone nef_face(const BlockOrdering& ord, std::size_t p)
{
    if (p + 1 >= ord.length())
        throw InvalidArgument("no boundary after position " + std::to_string(p + 1));
    RationalCone c = nef_cone(ord);
    std::vector<int> neg = c.inequalities[p];
    for (int& v : neg)
        v = -v;
    c.inequalities.push_back(std::move(neg));
    return c;
}

struct ChamberReport {
    std::vector<BlockOrdering> chambers; // all orderings whose closed nef cone contains x
    bool boundary() const { return chambers.size() > 1; }
};

/// Orderings whose nef cone contains x: sort descending, every arrangement of ties.
inline ChamberReport chamber_of(const CharacterVector& x, const LeviDatum& levi)
{
    detail::require_A(levi);
    const std::size_t t = levi.blocks.size();
    if (x.size() != t)
        throw InvalidArgument("character vector has " + std::to_string(x.size()) + " coordinates for " +
                              std::to_string(t) + " blocks");
    if (t > kBlockBudget)
        throw BudgetExceeded("orderings limited to " + std::to_string(kBlockBudget) + " blocks");
    std::vector<int> labels(t);
    std::iota(labels.begin(), labels.end(), 1);
    std::stable_sort(labels.begin(), labels.end(), [&](int a, int b) {
        return x[static_cast<std::size_t>(a - 1)] > x[static_cast<std::size_t>(b - 1)];
    });
    // groups of equal values, each permuted freely
    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (std::size_t i = 0; i < t;) {
        std::size_t j = i;
        while (j < t && x[static_cast<std::size_t>(labels[j] - 1)] == x[static_cast<std::size_t>(labels[i] - 1)])
            ++j;
        ties.emplace_back(i, j);
        i = j;
    }
    ChamberReport r;
    std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t g, std::vector<int>& cur) {
        if (g == ties.size()) {
            r.chambers.push_back(BlockOrdering{cur, levi.blocks});
            return;
        }
        auto [lo, hi] = ties[g];
        std::vector<int> part(cur.begin() + static_cast<std::ptrdiff_t>(lo), cur.begin() + static_cast<std::ptrdiff_t>(hi));
        std::sort(part.begin(), part.end());
        do {
            std::copy(part.begin(), part.end(), cur.begin() + static_cast<std::ptrdiff_t>(lo));
            rec(g + 1, cur);
        } while (std::next_permutation(part.begin(), part.end()));
    };
    rec(0, labels);
    std::sort(r.chambers.begin(), r.chambers.end());
    return r;
}

/// Closed movable cone of the base ordering: union of the nef cones over S^1(base).
struct MovableCone {
    BlockOrdering base;

    /// x_{b_i} >= x_{b_j} for consecutive equal-size blocks b_i before b_j in base.
    RationalCone walls() const
    {
        RationalCone c;
        std::map<int, int> last; // size -> last label seen
        for (std::size_t p = 0; p < base.length(); ++p) {
            const int q = base.size_at(p);
            if (auto it = last.find(q); it != last.end())
                c.inequalities.push_back(detail::difference_row(base.length(), it->second, base.order[p]));
            last[q] = base.order[p];
        }
        return c;
    }

    bool contains(const CharacterVector& x) const { return walls().contains(x); }
    bool interior_contains(const CharacterVector& x) const { return walls().interior_contains(x); }
};

inline MovableCone movable_cone(const BlockOrdering& base)
{
    base.validate();
    return MovableCone{base};
}

/// (w . x)_{pi(i)} = x_i for the block permutation pi of w.
inline CharacterVector wprime_act(const std::vector<int>& block_perm, const CharacterVector& x)
{
    if (block_perm.size() != x.size())
        throw InvalidArgument("block permutation and character vector differ in length");
    CharacterVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[static_cast<std::size_t>(block_perm[i])] = x[i];
    return y;
}

inline CharacterVector wprime_act(const LeviDatum& levi, const WeylElement& w, const CharacterVector& x)
{
    return wprime_act(block_permutation(levi, w), x);
}

/// Random rational point with numerators in [-bound, bound] and denominators in [1, den].
template <class Rng>
CharacterVector random_point(Rng& rng, std::size_t t, int bound = 20, int den = 9)
{
    std::uniform_int_distribution<int> num_d(-bound, bound), den_d(1, den);
    CharacterVector x(t);
    for (auto& c : x) {
        const int n = num_d(rng);
        const int d = den_d(rng);
        c = Rational(n, d);
    }
    return x;
}

struct FundamentalDomainReport {
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// For every nonidentity w in W' and sampled x in the open movable cone, w . x
/// must leave the closed movable cone.
template <class Rng>
FundamentalDomainReport fundamental_domain_check(const WprimeGroup& g, const BlockOrdering& base, std::size_t samples,
                                                 Rng& rng)
{
    detail::require_A(g.levi);
    const MovableCone mov = movable_cone(base);
    FundamentalDomainReport rep;
    std::vector<CharacterVector> points;
    while (points.size() < samples) {
        CharacterVector x = random_point(rng, base.length());
        if (mov.interior_contains(x))
            points.push_back(std::move(x));
    }
    rep.samples = points.size();
    for (const WeylElement& w : g.representatives) {
        if (w.is_identity())
            continue;
        const std::vector<int> pi = block_permutation(g.levi, w);
        for (const auto& x : points) {
            ++rep.checks;
            if (mov.contains(wprime_act(pi, x)))
                rep.failures.push_back(w.str());
        }
    }
    return rep;
}

struct FlopStep {
    std::size_t position = 0; // swapped positions position, position+1 (0-based)
    BlockOrdering before;
    BlockOrdering after;
    int vertex = 0;           // marked vertex of the A diagram that is twisted
    MarkedDiagram primitive;  // A_{q_i+q_{i+1}-1} marked at q_i
    std::string residual_orbit = "0";
};

/// Number of distinct-size block pairs in different relative order.
inline std::size_t distinct_size_inversions(const BlockOrdering& a, const BlockOrdering& b)
{
    std::vector<std::size_t> pos(a.length() + 1);
    for (std::size_t i = 0; i < b.length(); ++i)
        pos[static_cast<std::size_t>(b.order[i])] = i;
    std::size_t inv = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        for (std::size_t j = i + 1; j < a.length(); ++j)
            if (a.size_at(i) != a.size_at(j) &&
                pos[static_cast<std::size_t>(a.order[i])] > pos[static_cast<std::size_t>(a.order[j])])
                ++inv;
    return inv;
}

/// Shortest sequence of Mukai flops (adjacent swaps of blocks of different sizes) from a to b.
inline std::vector<FlopStep> flop_path(const BlockOrdering& a, const BlockOrdering& b)
{
    a.validate();
    b.validate();
    if (!same_first_kind_class(a, b))
        throw InvalidArgument("no flop path: " + a.str() + " and " + b.str() +
                              " order equal-size blocks differently");
    std::map<BlockOrdering, std::pair<BlockOrdering, std::size_t>> parent;
    std::deque<BlockOrdering> queue{a};
    parent.emplace(a, std::make_pair(a, 0));
    while (!queue.empty() && !parent.count(b)) {
        const BlockOrdering cur = queue.front();
        queue.pop_front();
        for (std::size_t p = 0; p + 1 < cur.length(); ++p) {
            if (cur.size_at(p) == cur.size_at(p + 1))
                continue;
            BlockOrdering next = cur.swapped(p);
            if (parent.emplace(next, std::make_pair(cur, p)).second)
                queue.push_back(std::move(next));
        }
    }
    if (!parent.count(b))
        detail::fail_invariant("flop search exhausted without reaching " + b.str());
    std::vector<FlopStep> path;
    for (BlockOrdering cur = b; cur != a;) {
        const auto& [prev, p] = parent.at(cur);
        FlopStep s;
        s.position = p;
        s.before = prev;
        s.after = cur;
        const int qi = prev.size_at(p), qj = prev.size_at(p + 1);
        int v = 0;
        for (std::size_t i = 0; i <= p; ++i)
            v += prev.size_at(i);
        s.vertex = v;
        s.primitive = MarkedDiagram::make(LieType::make(Family::A, qi + qj - 1), {qi});
        path.push_back(std::move(s));
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace nilorb
