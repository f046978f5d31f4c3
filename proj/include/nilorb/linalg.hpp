#pragma once

// Small dense exact linear algebra over Q and over prime fields F_p.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilorb/error.hpp"

namespace nilorb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw InvalidArgument("matrix shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(r, k);
                if (a == T(0))
                    continue;
                for (std::size_t c = 0; c < o.cols_; ++c)
                    p(r, c) += a * o(k, c);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const
    {
        Matrix s = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            s.data_[i] += o.data_[i];
        return s;
    }

    Matrix operator-(const Matrix& o) const
    {
        Matrix s = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            s.data_[i] -= o.data_[i];
        return s;
    }

    bool is_zero() const
    {
        for (const T& x : data_)
            if (x != T(0))
                return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

/// Rank over Q by Gaussian elimination (destroys a copy).
inline std::size_t rank(QMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != rank)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(piv, k), m(rank, k));
        const Rational inv = 1 / m(rank, c);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0)
                continue;
            const Rational f = m(r, c) * inv;
            for (std::size_t k = c; k < m.cols(); ++k)
                m(r, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

/// Inverse over Q; throws on singular input.
inline QMatrix inverse(const QMatrix& a)
{
    const std::size_t n = a.rows();
    QMatrix m = a;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0)
            ++piv;
        if (piv == n)
            throw InvalidArgument("singular matrix");
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(m(piv, k), m(c, k));
            std::swap(inv(piv, k), inv(c, k));
        }
        const Rational s = 1 / m(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            m(c, k) *= s;
            inv(c, k) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0)
                continue;
            const Rational f = m(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                m(r, k) -= f * m(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Prime fields

namespace fp {

using Row = std::vector<std::int64_t>;
using Rows = std::vector<Row>;

inline std::int64_t norm(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p)
{
    // p is prime: a^(p-2)
    std::int64_t r = 1, b = norm(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
inline std::pair<Rows, std::vector<std::size_t>> rref(Rows m, std::int64_t p)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return {m, pivots};
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && norm(m[piv][c], p) == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t s = inv(m[rank][c], p);
        for (auto& x : m[rank])
            x = norm(x, p) * s % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank)
                continue;
            const std::int64_t f = norm(m[r][c], p);
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = norm(m[r][k] - f * m[rank][k], p);
        }
        pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return {m, pivots};
}

/// Basis (as rows) of {x : m x = 0} for a matrix with `cols` columns.
inline Rows nullspace(const Rows& m, std::size_t cols, std::int64_t p)
{
    auto [r, pivots] = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    Rows basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Row v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = norm(-r[i][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const Rows& m, std::int64_t p) { return rref(m, p).first.size(); }

inline Rows multiply(const Rows& a, const Rows& b, std::int64_t p)
{
    if (a.empty())
        return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    Rows out(a.size(), Row(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            const std::int64_t x = a[i][k];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] = (out[i][j] + x * b[k][j]) % p;
        }
    return out;
}

/// Applies a square matrix y to each row vector v (returns rows y v).
inline Rows apply(const Rows& y, const Rows& vs, std::int64_t p)
{
    Rows out;
    for (const Row& v : vs) {
        Row w(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                s += y[i][j] * v[j] % p;
            w[i] = norm(s, p);
        }
        out.push_back(std::move(w));
    }
    return out;
}

/// Reduces a rational matrix modulo p; throws if a denominator vanishes mod p.
inline Rows reduce(const QMatrix& m, std::int64_t p)
{
    Rows out(m.rows(), Row(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            const BigInt num = boost::multiprecision::numerator(q);
            const BigInt den = boost::multiprecision::denominator(q);
            const auto n = static_cast<std::int64_t>(BigInt(num % p));
            const auto d = static_cast<std::int64_t>(BigInt(den % p));
            if (norm(d, p) == 0)
                throw InvalidArgument("denominator divisible by " + std::to_string(p));
            out[r][c] = norm(n, p) * inv(d, p) % p;
        }
    return out;
}

} // namespace fp

} // namespace nilorb
