#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "permrep/common.hpp"

namespace permrep {

// Arithmetic tables for the tiny Galois fields F_2, F_3, F_4.
// F_4 is {0, 1, w, w+1} encoded as {0, 1, 2, 3} with w^2 = w + 1.
class GF {
public:
    explicit GF(int q) : q_(q)
    {
        require(q == 2 || q == 3 || q == 4, "q must be one of {2,3,4}, got ", q);
        add_.assign(16, 0);
        mul_.assign(16, 0);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                if (q == 4) {
                    add_[a * 4 + b] = static_cast<uint8_t>(a ^ b);
                    mul_[a * 4 + b] = gf4_mul(a, b);
                } else {
                    add_[a * 4 + b] = static_cast<uint8_t>((a + b) % q);
                    mul_[a * 4 + b] = static_cast<uint8_t>((a * b) % q);
                }
            }
        }
        inv_.assign(q, 0);
        neg_.assign(q, 0);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                if (mul_[a * 4 + b] == 1)
                    inv_[a] = static_cast<uint8_t>(b);
                if (add_[a * 4 + b] == 0)
                    neg_[a] = static_cast<uint8_t>(b);
            }
        }
    }

    int q() const { return q_; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * 4 + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * 4 + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * 4 + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const
    {
        require(a != 0, "inverse of zero in F_", q_);
        return inv_[a];
    }

    using Vec = std::vector<uint8_t>;

    Vec scaled(const Vec& v, uint8_t c) const
    {
        Vec out(v.size());
        for (size_t i = 0; i < v.size(); ++i)
            out[i] = mul(v[i], c);
        return out;
    }
    void add_scaled_into(Vec& dst, const Vec& src, uint8_t c) const
    {
        for (size_t i = 0; i < dst.size(); ++i)
            dst[i] = add(dst[i], mul(src[i], c));
    }

    // Reduces v against reduced-row-echelon rows; returns the residue.
    Vec reduce(Vec v, const std::vector<Vec>& rref_rows) const
    {
        for (const Vec& r : rref_rows) {
            size_t p = 0;
            while (p < r.size() && r[p] == 0)
                ++p;
            if (p < v.size() && v[p] != 0)
                add_scaled_into(v, r, neg(mul(v[p], inv_[r[p]])));
        }
        return v;
    }

    bool in_span(const Vec& v, const std::vector<Vec>& rref_rows) const
    {
        Vec res = reduce(v, rref_rows);
        for (uint8_t x : res)
            if (x != 0)
                return false;
        return true;
    }

    // Canonical reduced-row-echelon basis of the span of the given rows.
    std::vector<Vec> rref(std::vector<Vec> rows) const
    {
        std::vector<Vec> basis;
        for (Vec& v : rows) {
            Vec res = reduce(std::move(v), basis);
            size_t p = 0;
            while (p < res.size() && res[p] == 0)
                ++p;
            if (p == res.size())
                continue;
            res = scaled(res, inv_[res[p]]);
            for (Vec& b : basis) {
                if (b[p] != 0)
                    add_scaled_into(b, res, neg(b[p]));
            }
            basis.push_back(std::move(res));
        }
        // sort by pivot position
        std::sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
            size_t pa = 0, pb = 0;
            while (pa < a.size() && a[pa] == 0)
                ++pa;
            while (pb < b.size() && b[pb] == 0)
                ++pb;
            return pa < pb;
        });
        return basis;
    }

    // All q^dim points of the span of an (rref) basis, in counting order of
    // the coefficient vector.
    std::vector<Vec> span_points(const std::vector<Vec>& basis, size_t dim_ambient) const
    {
        std::vector<Vec> pts;
        size_t k = basis.size();
        std::vector<uint8_t> coeff(k, 0);
        for (;;) {
            Vec p(dim_ambient, 0);
            for (size_t i = 0; i < k; ++i)
                if (coeff[i] != 0)
                    add_scaled_into(p, basis[i], coeff[i]);
            pts.push_back(std::move(p));
            size_t i = 0;
            while (i < k && coeff[i] == static_cast<uint8_t>(q_ - 1))
                coeff[i++] = 0;
            if (i == k)
                break;
            ++coeff[i];
        }
        return pts;
    }

private:
    static uint8_t gf4_mul(int a, int b)
    {
        // polynomial basis {1, w}, w^2 = w + 1
        if (a == 0 || b == 0)
            return 0;
        int a0 = a & 1, a1 = (a >> 1) & 1;
        int b0 = b & 1, b1 = (b >> 1) & 1;
        int c0 = (a0 & b0) ^ (a1 & b1);
        int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return static_cast<uint8_t>(c0 | (c1 << 1));
    }

    int q_;
    std::vector<uint8_t> add_, mul_, inv_, neg_;
};

}  // namespace permrep
