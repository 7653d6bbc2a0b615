#include <gmpxx.h>

#include "permrep/matrix.hpp"

namespace permrep::bareiss {

namespace {

// Clears denominators row by row; row scaling by a positive integer does not
// change rank, kernel, or the solution set of [A|b].
std::vector<std::vector<mpz_class>> integerize(const Matrix<Rat>& m)
{
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& e = m.at(i, j);
            rows[i][j] = e.num() * (l / e.den());
        }
    }
    return rows;
}

}  // namespace

IntEchelon echelon(const Matrix<Rat>& m)
{
    IntEchelon out;
    out.cols = m.cols();
    out.rows = integerize(m);
    auto& a = out.rows;
    const int nr = m.rows(), nc = m.cols();
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i) {
            if (sgn(a[i][col]) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0)
            continue;
        if (piv != rank)
            std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < nr; ++i) {
            for (int j = col + 1; j < nc; ++j) {
                mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                require(sgn(r) == 0, "internal error: inexact division in fraction-free elimination");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        out.pivot_cols.push_back(col);
        ++rank;
    }
    out.rank = rank;
    return out;
}

int rank(const Matrix<Rat>& m)
{
    return echelon(m).rank;
}

namespace {

// Back-substitution on the integer echelon, for a vector whose free
// coordinates are already fixed.
void back_substitute(const IntEchelon& e, std::vector<Rat>& v)
{
    for (int k = e.rank - 1; k >= 0; --k) {
        int p = e.pivot_cols[k];
        Rat s;
        for (int j = p + 1; j < e.cols; ++j) {
            if (sgn(e.rows[k][j]) != 0 && !v[j].is_zero())
                s += Rat(e.rows[k][j]) * v[j];
        }
        v[p] = -s / Rat(e.rows[k][p]);
    }
}

}  // namespace

std::vector<std::vector<Rat>> kernel(const Matrix<Rat>& m)
{
    IntEchelon e = echelon(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : e.pivot_cols)
        is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(m.cols(), Rat());
        v[f] = Rat(1);
        back_substitute(e, v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const Matrix<Rat>& m, const std::vector<Rat>& b)
{
    Matrix<Rat> aug(m.rows(), m.cols() + 1, Rat());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    IntEchelon e = echelon(aug);
    for (int c : e.pivot_cols)
        if (c == m.cols())
            return std::nullopt;
    // kernel vector of [A|b] with last coordinate forced to 1 encodes a solution
    std::vector<Rat> v(m.cols() + 1, Rat());
    v[m.cols()] = Rat(-1);
    back_substitute(e, v);
    std::vector<Rat> x(v.begin(), v.begin() + m.cols());
    return x;
}

}  // namespace permrep::bareiss
