#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "permrep/rat.hpp"
#include "permrep/ratfunc.hpp"

namespace permrep {

// Dense matrix over an exact field. Desk-scale: entry blow-up is accepted.
template <class E>
class Matrix {
public:
    Matrix(int r, int c, E zero)
        : r_(r), c_(c), zero_(zero_like(zero)), a_(static_cast<size_t>(r) * c, zero_)
    {
        require(r >= 0 && c >= 0, "negative matrix dimension");
    }

    static Matrix identity(int n, const E& one)
    {
        Matrix m(n, n, zero_like(one));
        for (int i = 0; i < n; ++i)
            m.at(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const E& zero() const { return zero_; }

    E& at(int i, int j)
    {
        require(i >= 0 && i < r_ && j >= 0 && j < c_, "matrix index out of range");
        return a_[static_cast<size_t>(i) * c_ + j];
    }
    const E& at(int i, int j) const
    {
        require(i >= 0 && i < r_ && j >= 0 && j < c_, "matrix index out of range");
        return a_[static_cast<size_t>(i) * c_ + j];
    }

    Matrix operator*(const Matrix& o) const
    {
        require(c_ == o.r_, "dimension mismatch in matrix product: ", r_, "x", c_,
                " times ", o.r_, "x", o.c_);
        Matrix out(r_, o.c_, zero_);
        for (int i = 0; i < r_; ++i) {
            for (int k = 0; k < c_; ++k) {
                const E& aik = at(i, k);
                if (pr_is_zero(aik))
                    continue;
                for (int j = 0; j < o.c_; ++j) {
                    const E& bkj = o.at(k, j);
                    if (pr_is_zero(bkj))
                        continue;
                    out.at(i, j) = out.at(i, j) + aik * bkj;
                }
            }
        }
        return out;
    }

    std::vector<E> operator*(const std::vector<E>& v) const
    {
        require(static_cast<int>(v.size()) == c_, "dimension mismatch in matrix-vector product");
        std::vector<E> out(r_, zero_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!pr_is_zero(at(i, j)) && !pr_is_zero(v[j]))
                    out[i] = out[i] + at(i, j) * v[j];
        return out;
    }

    Matrix operator+(const Matrix& o) const
    {
        require(r_ == o.r_ && c_ == o.c_, "dimension mismatch in matrix sum");
        Matrix out(r_, c_, zero_);
        for (size_t i = 0; i < a_.size(); ++i)
            out.a_[i] = a_[i] + o.a_[i];
        return out;
    }
    Matrix operator-(const Matrix& o) const
    {
        require(r_ == o.r_ && c_ == o.c_, "dimension mismatch in matrix difference");
        Matrix out(r_, c_, zero_);
        for (size_t i = 0; i < a_.size(); ++i)
            out.a_[i] = a_[i] - o.a_[i];
        return out;
    }

    Matrix transposed() const
    {
        Matrix out(c_, r_, zero_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                out.at(j, i) = at(i, j);
        return out;
    }

    bool operator==(const Matrix& o) const
    {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const
    {
        for (const E& e : a_)
            if (!pr_is_zero(e))
                return false;
        return true;
    }

    Matrix cols_slice(const std::vector<int>& idx) const
    {
        Matrix out(r_, static_cast<int>(idx.size()), zero_);
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            for (int i = 0; i < r_; ++i)
                out.at(i, j) = at(i, idx[j]);
        return out;
    }
    Matrix rows_slice(const std::vector<int>& idx) const
    {
        Matrix out(static_cast<int>(idx.size()), c_, zero_);
        for (int i = 0; i < static_cast<int>(idx.size()); ++i)
            for (int j = 0; j < c_; ++j)
                out.at(i, j) = at(idx[i], j);
        return out;
    }

    // Horizontal concatenation.
    Matrix augmented(const Matrix& o) const
    {
        require(r_ == o.r_, "row mismatch in augmentation");
        Matrix out(r_, c_ + o.c_, zero_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j)
                out.at(i, j) = at(i, j);
            for (int j = 0; j < o.c_; ++j)
                out.at(i, c_ + j) = o.at(i, j);
        }
        return out;
    }
    // Vertical concatenation.
    Matrix stacked(const Matrix& o) const
    {
        require(c_ == o.c_, "column mismatch in stacking");
        Matrix out(r_ + o.r_, c_, zero_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                out.at(i, j) = at(i, j);
        for (int i = 0; i < o.r_; ++i)
            for (int j = 0; j < c_; ++j)
                out.at(r_ + i, j) = o.at(i, j);
        return out;
    }

private:
    int r_, c_;
    E zero_;
    std::vector<E> a_;
};

template <class E>
struct Echelon {
    Matrix<E> rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Division-based Gauss-Jordan reduction; works over any exact field,
// canonical forms are restored by the entry arithmetic itself.
template <class E>
Echelon<E> rref_generic(Matrix<E> m)
{
    Echelon<E> out{m, {}, 0};
    Matrix<E>& a = out.rref;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < a.rows(); ++i) {
            if (!pr_is_zero(a.at(i, col))) {
                piv = i;
                break;
            }
        }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(rank, j));
        E s = inv_of(a.at(rank, col));
        for (int j = col; j < a.cols(); ++j)
            a.at(rank, j) = a.at(rank, j) * s;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == rank || pr_is_zero(a.at(i, col)))
                continue;
            E f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    out.rank = rank;
    return out;
}

template <class E>
int rank_generic(const Matrix<E>& m)
{
    return rref_generic(m).rank;
}

template <class E>
std::vector<std::vector<E>> kernel_from_rref(const Echelon<E>& e, const E& one)
{
    const Matrix<E>& r = e.rref;
    std::vector<char> is_pivot(r.cols(), 0);
    for (int c : e.pivot_cols)
        is_pivot[c] = 1;
    std::vector<std::vector<E>> basis;
    for (int f = 0; f < r.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<E> v(r.cols(), zero_like(one));
        v[f] = one;
        for (int k = 0; k < e.rank; ++k)
            v[e.pivot_cols[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class E>
std::vector<std::vector<E>> kernel_generic(const Matrix<E>& m, const E& one)
{
    return kernel_from_rref(rref_generic(m), one);
}

namespace bareiss {

struct IntEchelon {
    std::vector<std::vector<mpz_class>> rows;  // row echelon, fraction-free
    std::vector<int> pivot_cols;
    int rank = 0;
    int cols = 0;
};

// Fraction-free (Bareiss) elimination over Z after clearing row denominators.
// Row scaling preserves rank, kernel and solvability.
IntEchelon echelon(const Matrix<Rat>& m);

int rank(const Matrix<Rat>& m);
std::vector<std::vector<Rat>> kernel(const Matrix<Rat>& m);
std::optional<std::vector<Rat>> solve(const Matrix<Rat>& m, const std::vector<Rat>& b);

}  // namespace bareiss

namespace detail_matrix {

template <class E>
struct is_ratfunc : std::false_type {};
template <class K>
struct is_ratfunc<RatFunc<K>> : std::true_type {};

}  // namespace detail_matrix

// Fraction-free rank over a rational function field: rows are cleared to the
// polynomial ring, then Bareiss elimination with exact division only - no
// gcd-heavy fraction arithmetic along the way.
template <class P>
int rank_polynomial_bareiss(std::vector<std::vector<P>> rows)
{
    if (rows.empty() || rows[0].empty())
        return 0;
    const int nr = static_cast<int>(rows.size()), nc = static_cast<int>(rows[0].size());
    P prev = rows[0][0];  // placeholder; replaced by one below
    bool have_prev = false;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i) {
            if (!pr_is_zero(rows[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv < 0)
            continue;
        if (piv != rank)
            std::swap(rows[piv], rows[rank]);
        for (int i = rank + 1; i < nr; ++i) {
            for (int j = col + 1; j < nc; ++j) {
                P t = rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j];
                rows[i][j] = have_prev ? div_exact(t, prev) : std::move(t);
            }
            rows[i][col] = rows[i][col] - rows[i][col];  // zero of the right shape
        }
        prev = rows[rank][col];
        have_prev = true;
        ++rank;
    }
    return rank;
}

template <class K>
int rank_ratfunc(const Matrix<RatFunc<K>>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    std::vector<std::vector<Poly<K>>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Poly<K> scale = Poly<K>::constant(m.at(0, 0).nvars(), one_like(m.at(0, 0).proto()));
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).den().is_one())
                scale *= m.at(i, j).den();
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc<K>& e = m.at(i, j);
            rows[i].push_back(e.num() * div_exact(scale, e.den()));
        }
    }
    return rank_polynomial_bareiss(std::move(rows));
}

// rank / kernel_basis / solve dispatch: fraction-free over Q and over
// function fields, division-based elimination with canonicalization elsewhere.
template <class E>
int rank(const Matrix<E>& m)
{
    if constexpr (std::is_same_v<E, Rat>)
        return bareiss::rank(m);
    else if constexpr (detail_matrix::is_ratfunc<E>::value)
        return rank_ratfunc(m);
    else
        return rank_generic(m);
}

template <class E>
std::vector<std::vector<E>> kernel_basis(const Matrix<E>& m)
{
    if constexpr (std::is_same_v<E, Rat>) {
        return bareiss::kernel(m);
    } else {
        return kernel_generic(m, one_like(m.zero()));
    }
}

template <class E>
std::optional<std::vector<E>> solve(const Matrix<E>& m, const std::vector<E>& b)
{
    require(static_cast<int>(b.size()) == m.rows(), "dimension mismatch in solve");
    if constexpr (std::is_same_v<E, Rat>) {
        return bareiss::solve(m, b);
    } else {
        Matrix<E> rhs(m.rows(), 1, m.zero());
        for (int i = 0; i < m.rows(); ++i)
            rhs.at(i, 0) = b[i];
        Echelon<E> e = rref_generic(m.augmented(rhs));
        for (int c : e.pivot_cols)
            if (c == m.cols())
                return std::nullopt;
        std::vector<E> x(m.cols(), m.zero());
        for (int k = 0; k < e.rank; ++k)
            x[e.pivot_cols[k]] = e.rref.at(k, m.cols());
        return x;
    }
}

template <class E>
std::optional<Matrix<E>> inverse(const Matrix<E>& m)
{
    require(m.rows() == m.cols(), "inverse of a non-square matrix");
    E one = one_like(m.zero());
    Echelon<E> e = rref_generic(m.augmented(Matrix<E>::identity(m.rows(), one)));
    if (e.rank < m.rows())
        return std::nullopt;
    for (int k = 0; k < m.rows(); ++k)
        if (e.pivot_cols[k] != k)
            return std::nullopt;
    Matrix<E> inv(m.rows(), m.cols(), m.zero());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            inv.at(i, j) = e.rref.at(i, m.cols() + j);
    return inv;
}

// Solves A X = B for a full-column-rank A; throws if inconsistent or rank-deficient.
// Used for tracing a group action on an invariant subspace.
template <class E>
Matrix<E> solve_matrix(const Matrix<E>& a, const Matrix<E>& b)
{
    require(a.rows() == b.rows(), "dimension mismatch in solve_matrix");
    Echelon<E> e = rref_generic(a.augmented(b));
    require(e.rank >= a.cols(), "matrix does not have full column rank");
    for (int k = 0; k < e.rank; ++k)
        require(e.pivot_cols[k] < a.cols(), "system inconsistent: pivot outside coefficient block");
    for (int i = e.rank; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            require(pr_is_zero(e.rref.at(i, a.cols() + j)), "system inconsistent");
    Matrix<E> x(a.cols(), b.cols(), a.zero());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            x.at(i, j) = e.rref.at(i, a.cols() + j);
    return x;
}

}  // namespace permrep
