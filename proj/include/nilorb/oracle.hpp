#pragma once

// Brute-force checks independent of the partition combinatorics:
//  - explicit nilpotent matrices in the standard forms J (so) and J' (sp),
//  - centralizer dimensions by exact nullspace computation over Q,
//  - counts of flags y(V_i) in V_{i-1} over F_p (Springer fibres).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/error.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

/// Standard invariant form: J (antidiagonal ones) for B/D, J' (antidiagonal,
/// +1 in the upper half and -1 in the lower half) for C. Type A has none.
inline QMatrix standard_form(const LieType& t)
{
    const auto m = static_cast<std::size_t>(t.natural_size());
    QMatrix s(m, m);
    if (t.family == Family::A)
        return s;
    for (std::size_t i = 0; i < m; ++i)
        s(i, m - 1 - i) = (t.family == Family::C && 2 * i >= m) ? -1 : 1;
    return s;
}

/// a^T S + S a == 0 (and trace zero for type A).
inline bool in_algebra(const LieType& t, const QMatrix& a)
{
    if (t.family == Family::A) {
        Rational tr = 0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            tr += a(i, i);
        return tr == 0;
    }
    const QMatrix s = standard_form(t);
    return (a.transpose() * s + s * a).is_zero();
}

/// One summand of the canonical decomposition of the natural module.
struct NilpotentBlock {
    char kind = 'V';      // 'V': single part d, 'W': pair of equal parts d, d
    int part = 0;
    /// Internal basis vectors e_1..e_b of the summand, in standard coordinates.
    std::vector<std::vector<Rational>> vectors;
};

struct NilpotentModel {
    OrbitLabel orbit;
    QMatrix matrix;   // in the standard basis
    QMatrix form;     // standard_form(type)
    std::vector<NilpotentBlock> blocks;
};

namespace detail {

/// Z_d with Z(i,i+1) = 1 for i <= d/2 and -1 after that.
inline QMatrix signed_z(int d)
{
    QMatrix z(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i)
        z(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = (i <= d / 2) ? 1 : -1;
    return z;
}

inline QMatrix jordan(int d)
{
    QMatrix z(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i)
        z(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = 1;
    return z;
}

struct RawBlock {
    char kind;
    int part;
    QMatrix z;
    QMatrix form;
    int form_sign;
};

} // namespace detail

/// Explicit nilpotent of the given Jordan type lying in the standard matrix algebra.
///
/// Equal parts are paired into W_{2d} = (J_d, -J_d) summands with the antidiagonal
/// form of size 2d; a leftover part d becomes V_d with Z_d. The direct sum is then
/// rewritten in a basis where the form is exactly J or J'. For so(m), leftover odd
/// summands alternate the sign of their form so their middle vectors combine into
/// hyperbolic planes over Q. Tag II conjugates by the reflection swapping the two
/// middle basis vectors.
inline NilpotentModel canonical_nilpotent(const OrbitLabel& o)
{
    const LieType t = o.type;
    detail::require_classical(t);
    const auto m = static_cast<std::size_t>(t.natural_size());
    NilpotentModel out{o, QMatrix(m, m), standard_form(t), {}};

    if (t.family == Family::A) {
        std::size_t off = 0;
        for (int d : o.partition.parts()) {
            NilpotentBlock b{'V', d, {}};
            for (int i = 0; i < d; ++i) {
                if (i + 1 < d)
                    out.matrix(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(i) + 1) = 1;
                std::vector<Rational> v(m, 0);
                v[off + static_cast<std::size_t>(i)] = 1;
                b.vectors.push_back(std::move(v));
            }
            out.blocks.push_back(std::move(b));
            off += static_cast<std::size_t>(d);
        }
        return out;
    }

    // 1. summands in a block-diagonal model
    std::vector<detail::RawBlock> raw;
    int odd_single_sign = 1;
    for (auto [d, s] : o.partition.groups()) {
        for (int k = 0; k < s / 2; ++k) {
            const auto b = static_cast<std::size_t>(2 * d);
            QMatrix z(b, b);
            const QMatrix j = detail::jordan(d);
            for (std::size_t r = 0; r < j.rows(); ++r)
                for (std::size_t c = 0; c < j.cols(); ++c) {
                    z(r, c) = j(r, c);
                    z(r + j.rows(), c + j.cols()) = -j(r, c);
                }
            QMatrix f(b, b);
            for (std::size_t i = 0; i < b; ++i)
                f(i, b - 1 - i) = (t.family == Family::C && 2 * i >= b) ? -1 : 1;
            raw.push_back({'W', d, z, f, 1});
        }
        if (s % 2 == 1) {
            const auto b = static_cast<std::size_t>(d);
            QMatrix f(b, b);
            int sign = 1;
            if (t.family != Family::C) {
                sign = odd_single_sign;
                odd_single_sign = -odd_single_sign;
            }
            for (std::size_t i = 0; i < b; ++i)
                f(i, b - 1 - i) = sign * ((t.family == Family::C && 2 * i >= b) ? -1 : 1);
            raw.push_back({'V', d, detail::signed_z(d), f, sign});
        }
    }

    std::size_t total = 0;
    for (const auto& rb : raw)
        total += rb.z.rows();
    if (total != m)
        detail::fail_invariant("block sizes do not add up for " + o.str());
    QMatrix a0(m, m), g0(m, m);
    std::vector<std::size_t> offsets;
    {
        std::size_t off = 0;
        for (const auto& rb : raw) {
            offsets.push_back(off);
            for (std::size_t r = 0; r < rb.z.rows(); ++r)
                for (std::size_t c = 0; c < rb.z.cols(); ++c) {
                    a0(off + r, off + c) = rb.z(r, c);
                    g0(off + r, off + c) = rb.form(r, c);
                }
            off += rb.z.rows();
        }
    }
    if (!(a0.transpose() * g0 + g0 * a0).is_zero())
        detail::fail_invariant("block model of " + o.str() + " does not preserve its form");

    // 2. hyperbolic pairs (x, y) with <x,y> = 1 and self-paired middle vectors
    auto unit = [m](std::size_t i, Rational s = 1) {
        std::vector<Rational> v(m, 0);
        v[i] = s;
        return v;
    };
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> pairs;
    std::vector<std::vector<Rational>> plus, minus;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const std::size_t b = raw[k].z.rows();
        const std::size_t off = offsets[k];
        for (std::size_t j = 0; j < b / 2; ++j) {
            const Rational val = raw[k].form(j, b - 1 - j);
            pairs.emplace_back(unit(off + j), unit(off + b - 1 - j, 1 / val));
        }
        if (b % 2 == 1)
            (raw[k].form_sign > 0 ? plus : minus).push_back(unit(off + b / 2));
    }
    if (plus.size() < minus.size() || plus.size() - minus.size() > 1)
        detail::fail_invariant("unbalanced middle vectors for " + o.str());
    for (std::size_t k = 0; k < minus.size(); ++k) {
        std::vector<Rational> x(m), y(m);
        for (std::size_t i = 0; i < m; ++i) {
            x[i] = (plus[k][i] + minus[k][i]) / 2;
            y[i] = plus[k][i] - minus[k][i];
        }
        pairs.emplace_back(std::move(x), std::move(y));
    }

    // 3. change of basis P (columns = new basis in old coordinates)
    QMatrix p(m, m);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) {
            p(i, k) = pairs[k].first[i];
            p(i, m - 1 - k) = pairs[k].second[i];
        }
    if (m % 2 == 1) {
        if (plus.size() != minus.size() + 1)
            detail::fail_invariant("odd orthogonal model without a middle vector");
        for (std::size_t i = 0; i < m; ++i)
            p(i, m / 2) = plus.back()[i];
    }
    if (t.family == Family::D && o.tag == VeryEvenTag::II) {
        for (std::size_t i = 0; i < m; ++i)
            std::swap(p(i, m / 2 - 1), p(i, m / 2));
    }
    if (!(p.transpose() * g0 * p == out.form))
        detail::fail_invariant("basis change for " + o.str() + " does not reach the standard form");
    const QMatrix pinv = inverse(p);
    out.matrix = pinv * a0 * p;

    for (std::size_t k = 0; k < raw.size(); ++k) {
        NilpotentBlock nb{raw[k].kind, raw[k].part, {}};
        for (std::size_t j = 0; j < raw[k].z.rows(); ++j) {
            std::vector<Rational> v(m, 0);
            for (std::size_t i = 0; i < m; ++i)
                v[i] = pinv(i, offsets[k] + j);
            nb.vectors.push_back(std::move(v));
        }
        out.blocks.push_back(std::move(nb));
    }
    if (!in_algebra(t, out.matrix))
        detail::fail_invariant("canonical nilpotent for " + o.str() + " left the algebra");
    return out;
}

/// Reduction of the canonical nilpotent mod p. Characteristic 2 is refused for B/D.
inline fp::Rows canonical_nilpotent_mod(const OrbitLabel& o, std::int64_t p)
{
    if (!fp::is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    if (p == 2 && (o.type.family == Family::B || o.type.family == Family::D))
        throw InvalidArgument("characteristic 2 is not supported for orthogonal types");
    return fp::reduce(canonical_nilpotent(o).matrix, p);
}

/// Jordan type of a nilpotent matrix over Q, from the ranks of its powers.
inline Partition jordan_type(const QMatrix& y)
{
    const std::size_t m = y.rows();
    std::vector<std::size_t> ranks{m};
    QMatrix pw = QMatrix::identity(m);
    while (ranks.back() > 0) {
        pw = pw * y;
        const std::size_t r = rank(pw);
        if (r == ranks.back())
            throw InvalidArgument("matrix is not nilpotent");
        ranks.push_back(r);
    }
    // number of blocks of size >= k is rank(y^{k-1}) - rank(y^k)
    std::vector<int> cols;
    for (std::size_t k = 1; k < ranks.size(); ++k)
        cols.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    return transpose(Partition(cols));
}

inline constexpr int kCentralizerSizeBudget = 12;

/// dim of {z in g : [y,z] = 0}, by exact rank computation.
inline int centralizer_dim(const LieType& t, const QMatrix& y)
{
    const auto m = static_cast<std::size_t>(t.natural_size());
    if (m > static_cast<std::size_t>(kCentralizerSizeBudget))
        throw BudgetExceeded("centralizer computation limited to matrices of size <= " +
                             std::to_string(kCentralizerSizeBudget));
    if (y.rows() != m || y.cols() != m)
        throw TypeMismatch("matrix size does not match " + t.name());
    const std::size_t n = m * m;
    auto var = [m](std::size_t r, std::size_t c) { return r * m + c; };
    std::vector<std::vector<Rational>> eqs;
    if (t.family == Family::A) {
        std::vector<Rational> tr(n, 0);
        for (std::size_t i = 0; i < m; ++i)
            tr[var(i, i)] = 1;
        eqs.push_back(std::move(tr));
    }
    else {
        // (z^T S + S z)(i,j) = sum_k z(k,i) S(k,j) + S(i,k) z(k,j)
        const QMatrix s = standard_form(t);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                std::vector<Rational> e(n, 0);
                for (std::size_t k = 0; k < m; ++k) {
                    e[var(k, i)] += s(k, j);
                    e[var(k, j)] += s(i, k);
                }
                eqs.push_back(std::move(e));
            }
    }
    // (y z - z y)(i,j) = sum_k y(i,k) z(k,j) - z(i,k) y(k,j)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Rational> e(n, 0);
            for (std::size_t k = 0; k < m; ++k) {
                e[var(k, j)] += y(i, k);
                e[var(i, k)] -= y(k, j);
            }
            eqs.push_back(std::move(e));
        }
    QMatrix a(eqs.size(), n);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = eqs[r][c];
    return static_cast<int>(n - rank(std::move(a)));
}

inline int centralizer_dim(const OrbitLabel& o) { return centralizer_dim(o.type, canonical_nilpotent(o).matrix); }

// ---------------------------------------------------------------------------
// Flag counting over F_p

inline constexpr int kFlagDimensionBudget = 8;
inline constexpr std::uint64_t kGrassmannianBudget = 1'000'000;

/// Number of F_p-points of Gr(k, n).
inline std::uint64_t grassmannian_size(int k, int n, std::int64_t p)
{
    if (k < 0 || k > n)
        return 0;
    // Gaussian binomial, exact in 128-bit for the sizes we allow
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        unsigned __int128 a = 1, b = 1;
        for (int e = 0; e < n - i; ++e)
            a *= static_cast<unsigned __int128>(p);
        for (int e = 0; e < i + 1; ++e)
            b *= static_cast<unsigned __int128>(p);
        num *= a - 1;
        den *= b - 1;
    }
    const unsigned __int128 q = num / den;
    return q > static_cast<unsigned __int128>(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(q);
}

/// A flag as reduced row echelon bases of V_1 ⊂ ... ⊂ V_l.
using FpFlag = std::vector<fp::Rows>;

struct FlagCount {
    std::uint64_t count = 0;
    /// Type D with a maximal isotropic member: counts split by the family of that
    /// member (index 0: same family as span(e_1..e_n), index 1: the other).
    std::optional<std::array<std::uint64_t, 2>> family_counts;
    std::vector<FpFlag> flags; // filled only when requested
};

namespace detail {

inline bool contained(const fp::Rows& small, const fp::Rows& big, std::int64_t p)
{
    if (small.empty())
        return true;
    fp::Rows both = big;
    both.insert(both.end(), small.begin(), small.end());
    return fp::rank(both, p) == fp::rank(big, p);
}

inline fp::Rows perp(const fp::Rows& v, const fp::Rows& s, std::size_t m, std::int64_t p)
{
    // {x : v_i^T S x = 0}
    return fp::rref(fp::nullspace(fp::multiply(v, s, p), m, p), p).first;
}

inline fp::Rows preimage(const fp::Rows& y, const fp::Rows& v, std::size_t m, std::int64_t p)
{
    // {x : y x in V}: annihilator functionals phi of V, then phi(y x) = 0
    const fp::Rows ann = fp::nullspace(v, m, p);
    if (ann.empty())
        return fp::rref(fp::nullspace({}, m, p), p).first;
    return fp::rref(fp::nullspace(fp::multiply(ann, y, p), m, p), p).first;
}

inline bool isotropic(const fp::Rows& v, const fp::Rows& s, std::int64_t p)
{
    const fp::Rows vs = fp::multiply(v, s, p);
    for (const auto& a : vs)
        for (const auto& b : v) {
            std::int64_t x = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                x = (x + a[i] * b[i]) % p;
            if (x != 0)
                return false;
        }
    return true;
}

/// Calls f(W) for every subspace V ⊆ W ⊆ U of dimension dim V + k.
inline void for_each_intermediate(const fp::Rows& v, const fp::Rows& u, int k, std::int64_t p,
                                  const std::function<void(const fp::Rows&)>& f)
{
    // complement of V inside U
    fp::Rows comp;
    fp::Rows acc = v;
    std::size_t r = fp::rank(acc, p);
    for (const auto& row : u) {
        acc.push_back(row);
        const std::size_t r2 = fp::rank(acc, p);
        if (r2 > r) {
            comp.push_back(row);
            r = r2;
        }
        else {
            acc.pop_back();
        }
    }
    const int c = static_cast<int>(comp.size());
    if (k > c)
        return;
    if (grassmannian_size(k, c, p) > kGrassmannianBudget)
        throw BudgetExceeded("Grassmannian Gr(" + std::to_string(k) + "," + std::to_string(c) + ") over F_" +
                             std::to_string(p) + " exceeds the enumeration budget");
    const std::size_t m = u.empty() ? (v.empty() ? 0 : v.front().size()) : u.front().size();
    // k x c reduced echelon coefficient matrices
    std::vector<int> piv(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            std::vector<std::pair<int, int>> free;
            for (int i = 0; i < k; ++i)
                for (int col = piv[static_cast<std::size_t>(i)] + 1; col < c; ++col)
                    if (std::find(piv.begin(), piv.end(), col) == piv.end())
                        free.emplace_back(i, col);
            std::vector<std::int64_t> vals(free.size(), 0);
            while (true) {
                fp::Rows w = v;
                for (int i = 0; i < k; ++i) {
                    fp::Row coeff(static_cast<std::size_t>(c), 0);
                    coeff[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
                    for (std::size_t fi = 0; fi < free.size(); ++fi)
                        if (free[fi].first == i)
                            coeff[static_cast<std::size_t>(free[fi].second)] = vals[fi];
                    fp::Row vec(m, 0);
                    for (int j = 0; j < c; ++j)
                        for (std::size_t e = 0; e < m; ++e)
                            vec[e] = (vec[e] + coeff[static_cast<std::size_t>(j)] * comp[static_cast<std::size_t>(j)][e]) % p;
                    w.push_back(std::move(vec));
                }
                f(fp::rref(w, p).first);
                std::size_t pos = 0;
                while (pos < vals.size() && ++vals[pos] == p)
                    vals[pos++] = 0;
                if (pos == vals.size())
                    break;
            }
            return;
        }
        for (int col = start; col < c; ++col) {
            piv[static_cast<std::size_t>(idx)] = col;
            choose(idx + 1, col + 1);
        }
    };
    choose(0, 0);
}

} // namespace detail

/// Counts flags of the given type with y(V_i) ⊆ V_{i-1}, isotropic (V_i^⊥ = V_{l-i})
/// for B/C/D, over F_p.
inline FlagCount count_compatible_flags(const LieType& t, const FlagType& flag, const fp::Rows& y, std::int64_t p,
                                        bool keep_flags = false)
{
    const int m = t.natural_size();
    if (m > kFlagDimensionBudget)
        throw BudgetExceeded("flag counting limited to dimension <= " + std::to_string(kFlagDimensionBudget));
    if (!fp::is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    if (flag.total() != m)
        throw InvalidArgument("flag type " + flag.csv() + " does not add up to " + std::to_string(m));
    if (static_cast<int>(y.size()) != m)
        throw TypeMismatch("matrix size does not match " + t.name());
    const bool isotropic_type = t.family != Family::A;
    if (isotropic_type && !flag.is_palindromic())
        throw InvalidArgument("isotropic flag type must be palindromic: " + flag.csv());
    if (isotropic_type && p == 2 && t.family != Family::C)
        throw InvalidArgument("characteristic 2 is not supported for orthogonal types");

    const auto mm = static_cast<std::size_t>(m);
    const fp::Rows s = isotropic_type ? fp::reduce(standard_form(t), p) : fp::Rows{};
    const int l = static_cast<int>(flag.dims.size());
    const int free_steps = isotropic_type ? l / 2 : l;
    const bool split_families = t.family == Family::D && l % 2 == 0;

    FlagCount out;
    if (split_families)
        out.family_counts = std::array<std::uint64_t, 2>{0, 0};
    fp::Rows standard_lagrangian;
    for (std::size_t i = 0; i < mm / 2; ++i) {
        fp::Row e(mm, 0);
        e[i] = 1;
        standard_lagrangian.push_back(std::move(e));
    }

    FpFlag chain;
    std::function<void(const fp::Rows&)> step;
    std::function<void()> finish = [&]() {
        // isotropic types: V_{l-i} = V_i^⊥ for the second half
        FpFlag full = chain;
        if (isotropic_type) {
            for (int j = free_steps + 1; j <= l; ++j) {
                const int mirror = l - j;
                full.push_back(mirror == 0 ? fp::rref(fp::nullspace({}, mm, p), p).first
                                           : detail::perp(full[static_cast<std::size_t>(mirror - 1)], s, mm, p));
            }
            const fp::Rows zero;
            for (int j = free_steps + 1; j <= l; ++j) {
                const fp::Rows& prev = j >= 2 ? full[static_cast<std::size_t>(j - 2)] : zero;
                const fp::Rows& cur = full[static_cast<std::size_t>(j - 1)];
                if (!detail::contained(prev, cur, p))
                    return;
                if (!detail::contained(fp::apply(y, cur, p), prev, p))
                    return;
            }
        }
        ++out.count;
        if (split_families) {
            const fp::Rows& lag = full[static_cast<std::size_t>(l / 2 - 1)];
            fp::Rows both = lag;
            both.insert(both.end(), standard_lagrangian.begin(), standard_lagrangian.end());
            const std::size_t inter = lag.size() + standard_lagrangian.size() - fp::rank(both, p);
            (*out.family_counts)[(inter % 2 == (mm / 2) % 2) ? 0 : 1] += 1;
        }
        if (keep_flags)
            out.flags.push_back(full);
    };
    step = [&](const fp::Rows& prev) {
        const int i = static_cast<int>(chain.size()) + 1;
        if (i > free_steps) {
            finish();
            return;
        }
        fp::Rows u = detail::preimage(y, prev, mm, p);
        if (isotropic_type && !prev.empty()) {
            // u ∩ prev^⊥, as the common kernel of both annihilators
            const fp::Rows pp = detail::perp(prev, s, mm, p);
            fp::Rows ann = fp::nullspace(u, mm, p);
            fp::Rows ann2 = fp::nullspace(pp, mm, p);
            ann.insert(ann.end(), ann2.begin(), ann2.end());
            u = ann.empty() ? u : fp::rref(fp::nullspace(ann, mm, p), p).first;
        }
        detail::for_each_intermediate(prev, u, flag.dims[static_cast<std::size_t>(i - 1)], p, [&](const fp::Rows& w) {
            if (isotropic_type && !detail::isotropic(w, s, p))
                return;
            chain.push_back(w);
            step(w);
            chain.pop_back();
        });
    };
    step({});
    return out;
}

struct FlagCountReport {
    LieType type;
    FlagType flag;
    Partition partition;
    VeryEvenTag tag = VeryEvenTag::None;
    std::map<std::int64_t, std::uint64_t> counts;
    std::map<std::int64_t, std::array<std::uint64_t, 2>> family_counts;
    bool stable = false;

    std::optional<std::uint64_t> degree() const
    {
        if (!stable || counts.empty())
            return std::nullopt;
        return counts.begin()->second;
    }
};

inline std::vector<std::int64_t> default_primes() { return {3, 5, 7}; }

/// Springer fibre point counts of the canonical nilpotent over several primes.
inline FlagCountReport degree_estimate(const OrbitLabel& o, const FlagType& flag,
                                       const std::vector<std::int64_t>& primes = default_primes())
{
    FlagCountReport rep{o.type, flag, o.partition, o.tag, {}, {}, true};
    if (primes.empty())
        throw InvalidArgument("no primes given");
    const NilpotentModel model = canonical_nilpotent(o);
    for (std::int64_t p : primes) {
        if (p == 2 && (o.type.family == Family::B || o.type.family == Family::D))
            throw InvalidArgument("characteristic 2 is not supported for orthogonal types");
        const FlagCount c = count_compatible_flags(o.type, flag, fp::reduce(model.matrix, p), p);
        rep.counts[p] = c.count;
        if (c.family_counts)
            rep.family_counts[p] = *c.family_counts;
    }
    for (const auto& [p, c] : rep.counts)
        if (c != rep.counts.begin()->second)
            rep.stable = false;
    return rep;
}

} // namespace nilorb
