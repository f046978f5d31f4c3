#pragma once

// Root systems, Dynkin diagrams and Weyl groups of the classical types,
// written in the standard epsilon basis with integer coordinates.
//
// Conventions (Bourbaki):
//   A_n : coordinates e_1..e_{n+1}, simple roots e_i - e_{i+1}
//   B_n : e_i - e_{i+1} (i < n), e_n
//   C_n : e_i - e_{i+1} (i < n), 2 e_n
//   D_n : e_i - e_{i+1} (i < n), e_{n-1} + e_n
//   E_6 : diagram data only, chain 1-3-4-5-6 with 2 attached to 4.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/error.hpp"

namespace nilorb {

enum class Family { A, B, C, D, E };

inline char family_char(Family f)
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    }
    return '?';
}

/// A Lie type given by family and rank.
///
/// Degenerate classical ranks (B_1 = so(3), C_1 = sp(2), D_1 = so(2),
/// D_2 = so(4), rank 0) are representable because reductions of orbits
/// land in them; `is_standard()` tells whether the type is in the range
/// accepted from users (A >= 1, B/C >= 2, D >= 3, E only as E_6).
struct LieType {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const LieType&) const = default;

    bool is_classical() const { return family != Family::E; }

    bool is_standard() const
    {
        switch (family) {
        case Family::A: return rank >= 1;
        case Family::B:
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 3;
        case Family::E: return rank == 6;
        }
        return false;
    }

    /// Size of the defining matrices.
    int natural_size() const
    {
        switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C:
        case Family::D: return 2 * rank;
        case Family::E: break;
        }
        throw InvalidArgument("E6 has no natural matrix size here");
    }

    /// Number of epsilon coordinates used for roots.
    int coordinate_count() const { return family == Family::A ? rank + 1 : rank; }

    int dimension() const
    {
        if (family == Family::E)
            return 78;
        const int m = natural_size();
        switch (family) {
        case Family::A: return m * m - 1;
        case Family::C: return m * (m + 1) / 2;
        default: return m * (m - 1) / 2;
        }
    }

    std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

    static LieType make(Family f, int rank)
    {
        LieType t{f, rank};
        if (!t.is_standard())
            throw InvalidArgument("unsupported Lie type " + t.name());
        return t;
    }

    /// Parses "A3", "c2", "D5", "E6".
    static LieType parse(const std::string& s)
    {
        if (s.size() < 2)
            throw InvalidArgument("bad Lie type '" + s + "'");
        Family f;
        switch (s[0]) {
        case 'A': case 'a': f = Family::A; break;
        case 'B': case 'b': f = Family::B; break;
        case 'C': case 'c': f = Family::C; break;
        case 'D': case 'd': f = Family::D; break;
        case 'E': case 'e': f = Family::E; break;
        default: throw InvalidArgument("bad Lie type '" + s + "'");
        }
        const std::string digits = s.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw InvalidArgument("bad Lie type '" + s + "'");
        return make(f, std::stoi(digits));
    }

    /// Classical type whose natural representation has size m.
    static LieType from_natural_size(Family f, int m)
    {
        switch (f) {
        case Family::A: return {f, m - 1};
        case Family::B: return {f, (m - 1) / 2};
        case Family::C:
        case Family::D: return {f, m / 2};
        case Family::E: break;
        }
        throw InvalidArgument("no natural size for E");
    }
};

// ---------------------------------------------------------------------------
// Roots

struct Root {
    std::vector<int> coords;

    auto operator<=>(const Root&) const = default;

    Root operator-() const
    {
        Root r = *this;
        for (int& c : r.coords)
            c = -c;
        return r;
    }

    int dot(const std::vector<int>& h) const
    {
        int s = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            s += coords[i] * h[i];
        return s;
    }

    /// Positive with respect to the Bourbaki base: first nonzero coordinate > 0.
    bool is_positive() const
    {
        for (int c : coords)
            if (c != 0)
                return c > 0;
        return false;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const int c = coords[i];
            if (c == 0)
                continue;
            if (c < 0)
                out += "-";
            else if (!out.empty())
                out += "+";
            if (std::abs(c) != 1)
                out += std::to_string(std::abs(c));
            out += "e" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

inline Root unit(int n, int i, int a, int j = -1, int b = 0)
{
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
    r.coords[i] += a;
    if (j >= 0)
        r.coords[j] += b;
    return r;
}

inline void require_classical(const LieType& t)
{
    if (!t.is_classical())
        throw InvalidArgument("operation needs a classical type, got " + t.name());
}

} // namespace detail

/// Full root system in epsilon coordinates, sorted.
inline std::vector<Root> roots_of(const LieType& t)
{
    detail::require_classical(t);
    const int n = t.coordinate_count();
    std::vector<Root> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            out.push_back(detail::unit(n, i, 1, j, -1));
            if (t.family != Family::A && i < j) {
                out.push_back(detail::unit(n, i, 1, j, 1));
                out.push_back(detail::unit(n, i, -1, j, -1));
            }
        }
        if (t.family == Family::B) {
            out.push_back(detail::unit(n, i, 1));
            out.push_back(detail::unit(n, i, -1));
        }
        else if (t.family == Family::C) {
            out.push_back(detail::unit(n, i, 2));
            out.push_back(detail::unit(n, i, -2));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Root> positive_roots(const LieType& t)
{
    std::vector<Root> out;
    for (Root& r : roots_of(t))
        if (r.is_positive())
            out.push_back(std::move(r));
    return out;
}

/// True when r has the coordinate pattern of a root of t.
inline bool is_root(const LieType& t, const Root& r)
{
    if (!t.is_classical() || static_cast<int>(r.coords.size()) != t.coordinate_count())
        return false;
    std::vector<int> nz;
    int sum = 0;
    for (int c : r.coords) {
        if (c != 0)
            nz.push_back(c);
        sum += c;
    }
    if (nz.size() == 2)
        return std::abs(nz[0]) == 1 && std::abs(nz[1]) == 1 && (t.family != Family::A || sum == 0);
    if (nz.size() == 1) {
        if (t.family == Family::B)
            return std::abs(nz[0]) == 1;
        if (t.family == Family::C)
            return std::abs(nz[0]) == 2;
    }
    return false;
}

/// Simple roots alpha_1..alpha_rank in Bourbaki order.
inline std::vector<Root> simple_roots(const LieType& t)
{
    detail::require_classical(t);
    const int n = t.coordinate_count();
    std::vector<Root> out;
    for (int i = 0; i + 1 < n; ++i)
        out.push_back(detail::unit(n, i, 1, i + 1, -1));
    switch (t.family) {
    case Family::B: out.push_back(detail::unit(n, n - 1, 1)); break;
    case Family::C: out.push_back(detail::unit(n, n - 1, 2)); break;
    case Family::D:
        if (n >= 2)
            out.push_back(detail::unit(n, n - 2, 1, n - 1, 1));
        break;
    default: break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dynkin diagrams

struct DynkinEdge {
    int u = 0; // 1-based vertex numbers, u < v
    int v = 0;
    int multiplicity = 1;
    int long_end = 0; // for multiplicity 2: vertex carrying the long root

    auto operator<=>(const DynkinEdge&) const = default;
};

struct DynkinDiagram {
    LieType type;
    std::vector<DynkinEdge> edges;

    int size() const { return type.rank; }

    std::vector<int> neighbours(int v) const
    {
        std::vector<int> out;
        for (const auto& e : edges) {
            if (e.u == v)
                out.push_back(e.v);
            else if (e.v == v)
                out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const DynkinEdge* edge(int a, int b) const
    {
        if (a > b)
            std::swap(a, b);
        for (const auto& e : edges)
            if (e.u == a && e.v == b)
                return &e;
        return nullptr;
    }

    static DynkinDiagram of(const LieType& t)
    {
        if (!t.is_standard())
            throw InvalidArgument("no Dynkin diagram for " + t.name());
        DynkinDiagram d{t, {}};
        const int n = t.rank;
        if (t.family == Family::E) {
            d.edges = {{1, 3, 1, 0}, {3, 4, 1, 0}, {2, 4, 1, 0}, {4, 5, 1, 0}, {5, 6, 1, 0}};
            return d;
        }
        // simple chain 1 - 2 - ... - (n-1)
        for (int i = 1; i + 1 < n; ++i)
            d.edges.push_back({i, i + 1, 1, 0});
        switch (t.family) {
        case Family::A: d.edges.push_back({n - 1, n, 1, 0}); break;
        case Family::B: d.edges.push_back({n - 1, n, 2, n - 1}); break;
        case Family::C: d.edges.push_back({n - 1, n, 2, n}); break;
        case Family::D: d.edges.push_back({n - 2, n, 1, 0}); break;
        default: break;
        }
        if (t.family == Family::A && n == 1)
            d.edges.clear();
        std::sort(d.edges.begin(), d.edges.end());
        return d;
    }
};

// ---------------------------------------------------------------------------
// Weyl groups as (signed) permutations of the epsilon coordinates

/// w acts by e_i -> sign[i] * e_{perm[i]}.
struct WeylElement {
    LieType type;
    std::vector<int> perm;
    std::vector<int> sign;

    bool operator==(const WeylElement& o) const { return perm == o.perm && sign == o.sign; }
    auto operator<=>(const WeylElement& o) const
    {
        if (auto c = perm <=> o.perm; c != 0)
            return c;
        return sign <=> o.sign;
    }

    static WeylElement identity(const LieType& t)
    {
        const int n = t.coordinate_count();
        WeylElement w{t, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
        std::iota(w.perm.begin(), w.perm.end(), 0);
        return w;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i) || sign[i] != 1)
                return false;
        return true;
    }

    std::vector<int> apply(const std::vector<int>& v) const
    {
        std::vector<int> out(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            out[static_cast<std::size_t>(perm[i])] = sign[i] * v[i];
        return out;
    }

    /// (*this) after o.
    WeylElement operator*(const WeylElement& o) const
    {
        WeylElement r{type, perm, sign};
        for (std::size_t i = 0; i < perm.size(); ++i) {
            const auto j = static_cast<std::size_t>(o.perm[i]);
            r.perm[i] = perm[j];
            r.sign[i] = sign[j] * o.sign[i];
        }
        return r;
    }

    WeylElement inverse() const
    {
        WeylElement r{type, perm, sign};
        for (std::size_t i = 0; i < perm.size(); ++i) {
            const auto j = static_cast<std::size_t>(perm[i]);
            r.perm[j] = static_cast<int>(i);
            r.sign[j] = sign[i];
        }
        return r;
    }

    int negative_signs() const { return static_cast<int>(std::count(sign.begin(), sign.end(), -1)); }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i)
                s += ",";
            s += (sign[i] < 0 ? "-" : "") + std::to_string(perm[i] + 1);
        }
        return s + "]";
    }
};

/// Reflection in a root, as a signed permutation.
inline WeylElement reflection(const LieType& t, const Root& r)
{
    WeylElement w = WeylElement::identity(t);
    std::vector<int> idx;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        if (r.coords[i] != 0)
            idx.push_back(static_cast<int>(i));
    if (idx.size() == 1) {
        w.sign[static_cast<std::size_t>(idx[0])] = -1;
    }
    else if (idx.size() == 2) {
        const auto a = static_cast<std::size_t>(idx[0]);
        const auto b = static_cast<std::size_t>(idx[1]);
        // e_a - e_b swaps; e_a + e_b swaps with both signs flipped
        const int s = r.coords[a] == r.coords[b] ? -1 : 1;
        w.perm[a] = static_cast<int>(b);
        w.perm[b] = static_cast<int>(a);
        w.sign[a] = s;
        w.sign[b] = s;
    }
    else {
        throw InvalidArgument("not a root: " + r.str());
    }
    return w;
}

inline std::vector<WeylElement> simple_reflections(const LieType& t)
{
    std::vector<WeylElement> out;
    for (const Root& r : simple_roots(t))
        out.push_back(reflection(t, r));
    return out;
}

/// Applies w to a root; throws TypeMismatch when r is not a root of w's type.
inline Root weyl_act(const WeylElement& w, const Root& r)
{
    if (!is_root(w.type, r))
        throw TypeMismatch(r.str() + " is not a root of " + w.type.name());
    return Root{w.apply(r.coords)};
}

/// Closed-form order of W(t).
inline std::uint64_t weyl_order(const LieType& t)
{
    detail::require_classical(t);
    std::uint64_t f = 1;
    const int n = t.coordinate_count();
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    switch (t.family) {
    case Family::A: return f;
    case Family::B:
    case Family::C: return f << n;
    case Family::D: return n >= 1 ? f << (n - 1) : f;
    default: return 0;
    }
}

inline constexpr int kWeylRankBudgetA = 8;
inline constexpr int kWeylRankBudgetBCD = 7;

inline bool within_weyl_budget(const LieType& t)
{
    if (!t.is_classical())
        return false;
    return t.family == Family::A ? t.rank <= kWeylRankBudgetA : t.rank <= kWeylRankBudgetBCD;
}

/// Random-access view of W(t); element(i) unranks the i-th signed permutation.
class WeylGroup {
public:
    explicit WeylGroup(LieType t) : type_(t)
    {
        if (!within_weyl_budget(t))
            throw BudgetExceeded("Weyl group enumeration limited to rank <= " + std::to_string(kWeylRankBudgetA) +
                                 " for A and <= " + std::to_string(kWeylRankBudgetBCD) + " for B/C/D; got " + t.name());
        n_ = t.coordinate_count();
        perms_ = 1;
        for (int i = 2; i <= n_; ++i)
            perms_ *= static_cast<std::uint64_t>(i);
        order_ = weyl_order(t);
    }

    const LieType& type() const { return type_; }
    std::uint64_t size() const { return order_; }

    WeylElement element(std::uint64_t index) const
    {
        const std::uint64_t signs = index / perms_;
        std::uint64_t code = index % perms_;
        WeylElement w = WeylElement::identity(type_);
        // Lehmer code -> permutation
        std::vector<int> pool(static_cast<std::size_t>(n_));
        std::iota(pool.begin(), pool.end(), 0);
        std::uint64_t fact = perms_;
        for (int i = 0; i < n_; ++i) {
            fact /= static_cast<std::uint64_t>(n_ - i);
            const auto k = static_cast<std::size_t>(code / fact);
            code %= fact;
            w.perm[static_cast<std::size_t>(i)] = pool[k];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
        }
        if (type_.family != Family::A) {
            const int free_bits = type_.family == Family::D ? n_ - 1 : n_;
            int parity = 0;
            for (int i = 0; i < free_bits; ++i) {
                if ((signs >> i) & 1u) {
                    w.sign[static_cast<std::size_t>(i)] = -1;
                    parity ^= 1;
                }
            }
            if (type_.family == Family::D && parity)
                w.sign[static_cast<std::size_t>(n_ - 1)] = -1;
        }
        return w;
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeylElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const WeylElement*;
        using reference = WeylElement;

        iterator() = default;
        iterator(const WeylGroup* g, std::uint64_t i) : g_(g), i_(i) {}
        WeylElement operator*() const { return g_->element(i_); }
        iterator& operator++()
        {
            ++i_;
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++i_;
            return t;
        }
        bool operator==(const iterator& o) const { return i_ == o.i_; }

    private:
        const WeylGroup* g_ = nullptr;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, order_}; }

private:
    LieType type_;
    int n_ = 0;
    std::uint64_t perms_ = 1;
    std::uint64_t order_ = 1;
};

/// Enumerates W(t); throws BudgetExceeded above the rank budget.
inline WeylGroup weyl_enumerate(const LieType& t) { return WeylGroup(t); }

/// Subgroup generated by `gens`, by breadth-first closure. Throws past `limit` elements.
inline std::set<WeylElement> generate_subgroup(const LieType& t, const std::vector<WeylElement>& gens,
                                               std::size_t limit = 4'000'000)
{
    std::set<WeylElement> seen{WeylElement::identity(t)};
    std::vector<WeylElement> frontier{WeylElement::identity(t)};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                WeylElement x = g * w;
                if (seen.insert(x).second)
                    next.push_back(std::move(x));
            }
        }
        if (seen.size() > limit)
            throw BudgetExceeded("subgroup generation exceeded " + std::to_string(limit) + " elements");
        frontier = std::move(next);
    }
    return seen;
}

} // namespace nilorb
