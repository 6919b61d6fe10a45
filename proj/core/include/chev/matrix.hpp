#pragma once

#include "chev/ring.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace chev {

class matrix_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense matrix over a ring from ring.hpp. Products skip zero entries, which
// keeps generator arithmetic cheap since those matrices are very sparse.
template <class R>
class Matrix {
public:
    using ring_type = R;
    using E = typename R::elem;

    Matrix(const R& r, std::size_t rows, std::size_t cols)
        : r_(r), rows_(rows), cols_(cols), a_(rows * cols, r.zero())
    {
    }

    static Matrix identity(const R& r, std::size_t n)
    {
        Matrix m(r, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = r.one();
        return m;
    }

    static Matrix diagonal(const R& r, const std::vector<E>& d)
    {
        Matrix m(r, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    template <class Int>
    static Matrix from_ints(const R& r, const std::vector<std::vector<Int>>& v)
    {
        Matrix m(r, v.size(), v.empty() ? 0 : v[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = from_scalar(r, v[i][j]);
        return m;
    }

    const R& ring() const { return r_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix m(r_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            m.a_[k] = r_.add(a_[k], o.a_[k]);
        return m;
    }

    Matrix operator-(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix m(r_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            m.a_[k] = r_.sub(a_[k], o.a_[k]);
        return m;
    }

    Matrix operator-() const
    {
        Matrix m(r_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            m.a_[k] = r_.neg(a_[k]);
        return m;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw matrix_error("shape mismatch in product");
        Matrix m(r_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const E& x = (*this)(i, k);
                if (r_.is_zero(x))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const E& y = o(k, j);
                    if (r_.is_zero(y))
                        continue;
                    m(i, j) = r_.add(m(i, j), r_.mul(x, y));
                }
            }
        return m;
    }

    Matrix scaled(const E& s) const
    {
        Matrix m(r_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!r_.is_zero(a_[k]))
                m.a_[k] = r_.mul(s, a_[k]);
        return m;
    }

    Matrix transpose() const
    {
        Matrix m(r_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    bool operator==(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!r_.eq(a_[k], o.a_[k]))
                return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!r_.is_zero(x))
                return false;
        return true;
    }

    bool is_identity() const { return square() && *this == identity(r_, rows_); }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !r_.is_zero((*this)(i, j)))
                    return false;
        return true;
    }

    std::size_t nonzeros() const
    {
        std::size_t c = 0;
        for (const auto& x : a_)
            c += !r_.is_zero(x);
        return c;
    }

    template <class F>
    auto map(F&& f) const
    {
        return map_to(r_, std::forward<F>(f));
    }

    // Entrywise image in another ring.
    template <class R2, class F>
    Matrix<R2> map_to(const R2& r2, F&& f) const
    {
        Matrix<R2> m(r2, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix<typename R::residue_ring> residue() const
    {
        auto k = r_.residue_field();
        return map_to(k, [&](const E& x) { return r_.residue(x); });
    }

    std::vector<std::vector<std::string>> strings() const
    {
        std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i][j] = r_.str((*this)(i, j));
        return out;
    }

private:
    template <class S>
    static E from_scalar(const R& r, const S& v)
    {
        if constexpr (std::is_same_v<S, mpq_class>)
            return r.from_mpq(v);
        else if constexpr (std::is_same_v<S, mpz_class>)
            return r.from_mpz(v);
        else
            return r.from_int(static_cast<long long>(v));
    }

    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw matrix_error("shape mismatch");
    }

    R r_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<E> a_;
};

template <class R>
Matrix<R> matrix_power(const Matrix<R>& m, long e)
{
    auto out = Matrix<R>::identity(m.ring(), m.rows());
    auto b = m;
    while (e > 0) {
        if (e & 1)
            out = out * b;
        e >>= 1;
        if (e > 0)
            b = b * b;
    }
    return out;
}

// Gauss-Jordan with unit pivots only. Over a local ring a column with no
// unit pivot below the diagonal means the matrix is singular over R.
template <class R>
std::optional<Matrix<R>> try_inverse(const Matrix<R>& m)
{
    if (!m.square())
        throw matrix_error("inverse of a non-square matrix");
    const R& r = m.ring();
    const std::size_t n = m.rows();
    auto a = m;
    auto b = Matrix<R>::identity(r, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        for (std::size_t i = c; i < n; ++i)
            if (r.is_unit(a(i, c))) {
                p = i;
                break;
            }
        if (p == n)
            return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(b(p, j), b(c, j));
            }
        auto iv = *r.inv(a(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = r.mul(a(c, j), iv);
            b(c, j) = r.mul(b(c, j), iv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || r.is_zero(a(i, c)))
                continue;
            auto f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!r.is_zero(a(c, j)))
                    a(i, j) = r.sub(a(i, j), r.mul(f, a(c, j)));
                if (!r.is_zero(b(c, j)))
                    b(i, j) = r.sub(b(i, j), r.mul(f, b(c, j)));
            }
        }
    }
    return b;
}

template <class R>
Matrix<R> inverse(const Matrix<R>& m)
{
    auto inv = try_inverse(m);
    if (!inv)
        throw matrix_error("matrix is not invertible over " + m.ring().name());
    return *inv;
}

// Division-free determinant (Berkowitz); valid over any commutative ring.
template <class R>
typename R::elem det_berkowitz(const Matrix<R>& m)
{
    using E = typename R::elem;
    const R& r = m.ring();
    const std::size_t n = m.rows();
    if (n == 0)
        return r.one();
    // Characteristic polynomial coefficients, built up one leading block at a time.
    std::vector<E> c{r.one(), r.neg(m(0, 0))};
    for (std::size_t k = 1; k < n; ++k) {
        // Toeplitz column: 1, -a_kk, -R C, -R A C, ...
        std::vector<E> rowv(k), colv(k);
        for (std::size_t j = 0; j < k; ++j) {
            rowv[j] = m(k, j);
            colv[j] = m(j, k);
        }
        std::vector<E> t(k + 2, r.zero());
        t[0] = r.one();
        t[1] = r.neg(m(k, k));
        auto v = colv;
        for (std::size_t s = 2; s <= k + 1; ++s) {
            E dot = r.zero();
            for (std::size_t j = 0; j < k; ++j)
                dot = r.add(dot, r.mul(rowv[j], v[j]));
            t[s] = r.neg(dot);
            std::vector<E> nv(k, r.zero());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (!r.is_zero(m(i, j)) && !r.is_zero(v[j]))
                        nv[i] = r.add(nv[i], r.mul(m(i, j), v[j]));
            v = std::move(nv);
        }
        std::vector<E> nc(k + 2, r.zero());
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < c.size(); ++j)
                nc[i] = r.add(nc[i], r.mul(t[i - j], c[j]));
        c = std::move(nc);
    }
    // c holds det(xI - A) coefficients from x^n down; constant term is (-1)^n det.
    E d = c[n];
    return n % 2 ? r.neg(d) : d;
}

// Determinant by unit-pivot elimination, falling back to Berkowitz when some
// column has no unit pivot.
template <class R>
typename R::elem det(const Matrix<R>& m)
{
    if (!m.square())
        throw matrix_error("determinant of a non-square matrix");
    const R& r = m.ring();
    const std::size_t n = m.rows();
    auto a = m;
    auto d = r.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        for (std::size_t i = c; i < n; ++i)
            if (r.is_unit(a(i, c))) {
                p = i;
                break;
            }
        if (p == n) {
            if (r.is_field())
                return r.zero();
            return det_berkowitz(m);
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            d = r.neg(d);
        }
        d = r.mul(d, a(c, c));
        auto iv = *r.inv(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (r.is_zero(a(i, c)))
                continue;
            auto f = r.mul(a(i, c), iv);
            for (std::size_t j = c; j < n; ++j)
                if (!r.is_zero(a(c, j)))
                    a(i, j) = r.sub(a(i, j), r.mul(f, a(c, j)));
        }
    }
    return d;
}

// Reduced row echelon form over a field. Returns pivot columns.
template <class R>
std::vector<std::size_t> rref_in_place(Matrix<R>& a)
{
    const R& r = a.ring();
    if (!r.is_field())
        throw matrix_error("row reduction needs a field, got " + r.name());
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i)
            if (!r.is_zero(a(i, c))) {
                p = i;
                break;
            }
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(p, j), a(row, j));
        auto iv = *r.inv(a(row, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a(row, j) = r.mul(a(row, j), iv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || r.is_zero(a(i, c)))
                continue;
            auto f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!r.is_zero(a(row, j)))
                    a(i, j) = r.sub(a(i, j), r.mul(f, a(row, j)));
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

template <class R>
std::size_t rank(Matrix<R> a)
{
    return rref_in_place(a).size();
}

// Basis of {v : a v = 0} over a field, one vector per free column.
template <class R>
std::vector<std::vector<typename R::elem>> nullspace(Matrix<R> a)
{
    const R& r = a.ring();
    auto piv = rref_in_place(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<std::vector<typename R::elem>> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f])
            continue;
        std::vector<typename R::elem> v(a.cols(), r.zero());
        v[f] = r.one();
        for (std::size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = r.neg(a(k, f));
        out.push_back(std::move(v));
    }
    return out;
}

// Solve a x = b over a field; nullopt if inconsistent. Free variables are 0.
template <class R>
std::optional<std::vector<typename R::elem>> solve(const Matrix<R>& a, const std::vector<typename R::elem>& b)
{
    const R& r = a.ring();
    Matrix<R> aug(r, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == a.cols())
        return std::nullopt;
    std::vector<typename R::elem> x(a.cols(), r.zero());
    for (std::size_t k = 0; k < piv.size(); ++k)
        x[piv[k]] = aug(k, a.cols());
    return x;
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free Bareiss elimination; exact integer determinant.
inline mpz_class bareiss_det(IntMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    for (const auto& row : a)
        if (row.size() != n)
            throw matrix_error("determinant of a non-square matrix");
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace chev
