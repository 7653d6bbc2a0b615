#include "permrep/model.hpp"

#include <algorithm>

namespace permrep {

std::string Subobject::str() const
{
    if (set_kind) {
        std::string out = "{";
        for (size_t i = 0; i < pts.size(); ++i)
            out += cat(i ? "," : "", pts[i] + 1);
        return out + "}";
    }
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i)
            out += ";";
        for (uint8_t x : rows[i])
            out += static_cast<char>('0' + x);
    }
    return out + "]";
}

Subobject make_set_subobject(std::vector<int> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Subobject s;
    s.set_kind = true;
    s.pts = std::move(pts);
    return s;
}

Subobject make_vec_subobject(const GF& gf, std::vector<std::vector<uint8_t>> vectors)
{
    Subobject s;
    s.set_kind = false;
    s.rows = gf.rref(std::move(vectors));
    return s;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

long long gaussian_binomial(int n, int k, int q)
{
    if (k < 0 || k > n)
        return 0;
    if (q == 1)
        return binomial(n, k);
    // prod_{i=0..k-1} (q^{n-i} - 1) / (q^{k-i} - 1), computed exactly
    long long num = 1, den = 1;
    auto qpow = [&](int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i)
            r *= q;
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(k - i) - 1;
    }
    require(num % den == 0, "internal error: gaussian binomial not integral");
    return num / den;
}

long long subobject_count(const FiniteModel& m, int s)
{
    if (m.is_set())
        return binomial(m.n, s);
    if (s < m.v)
        return 0;
    return gaussian_binomial(m.n - m.v, s - m.v, m.q);
}

namespace {

void subsets_rec(int n, int s, int from, std::vector<int>& cur,
                 std::vector<Subobject>& out)
{
    if (static_cast<int>(cur.size()) == s) {
        Subobject sub;
        sub.set_kind = true;
        sub.pts = cur;
        out.push_back(std::move(sub));
        return;
    }
    for (int i = from; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, s, i + 1, cur, out);
        cur.pop_back();
    }
}

// All dimension-s subspaces of F_q^n containing the marked span(e_1..e_v),
// enumerated directly as reduced-row-echelon matrices.
std::vector<Subobject> vec_subobjects(const FiniteModel& m, int s)
{
    std::vector<Subobject> out;
    if (s < m.v || s > m.n)
        return out;
    GF gf(m.q);
    const int n = m.n;
    // choose pivot columns, then fill free entries
    std::vector<int> pivots;
    auto emit = [&](const std::vector<std::vector<uint8_t>>& rows) {
        // keep only subspaces containing the marked subspace
        for (int i = 0; i < m.v; ++i) {
            std::vector<uint8_t> e(n, 0);
            e[i] = 1;
            if (!gf.in_span(e, rows))
                return;
        }
        Subobject sub;
        sub.set_kind = false;
        sub.rows = rows;
        out.push_back(std::move(sub));
    };
    std::vector<std::vector<uint8_t>> rows(s, std::vector<uint8_t>(n, 0));
    // free positions are (row i, col j) with j > pivots[i] and j not a pivot
    auto fill_free = [&](auto&& self, size_t idx,
                         const std::vector<std::pair<int, int>>& free_pos) -> void {
        if (idx == free_pos.size()) {
            emit(rows);
            return;
        }
        auto [r, c] = free_pos[idx];
        for (int val = 0; val < m.q; ++val) {
            rows[r][c] = static_cast<uint8_t>(val);
            self(self, idx + 1, free_pos);
        }
        rows[r][c] = 0;
    };
    auto choose_pivots = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pivots.size()) == s) {
            std::vector<char> is_pivot(n, 0);
            for (int p : pivots)
                is_pivot[p] = 1;
            for (int i = 0; i < s; ++i) {
                std::fill(rows[i].begin(), rows[i].end(), 0);
                rows[i][pivots[i]] = 1;
            }
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < s; ++i)
                for (int j = pivots[i] + 1; j < n; ++j)
                    if (!is_pivot[j])
                        free_pos.emplace_back(i, j);
            fill_free(fill_free, 0, free_pos);
            return;
        }
        for (int p = from; p < n; ++p) {
            pivots.push_back(p);
            self(self, p + 1);
            pivots.pop_back();
        }
    };
    choose_pivots(choose_pivots, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Subobject> subobjects(const FiniteModel& m, int s)
{
    require(s >= 0 && s <= m.length(), "level ", s, " out of range for ", m.str());
    if (m.is_set()) {
        std::vector<Subobject> out;
        std::vector<int> cur;
        subsets_rec(m.n, s, 0, cur, out);
        return out;
    }
    return vec_subobjects(m, s);
}

long long q_bracket(const FiniteModel& m, int N)
{
    require(N >= 0, "negative bracket argument");
    if (m.is_set())
        return N;
    long long r = 1;
    for (int i = 0; i < N; ++i)
        r *= m.q;
    return r;
}

long long embedding_count(const FiniteModel& m, int n, int N)
{
    require(n >= 0, "negative length");
    long long r = 1;
    for (int i = 0; i < n; ++i)
        r *= q_bracket(m, N) - q_bracket(m, i);
    return r;
}

Subobject standard_subobject(const FiniteModel& m, int N)
{
    require(N >= 0 && N <= m.length(), "standard subobject length out of range");
    if (m.is_set()) {
        std::vector<int> pts(N);
        for (int i = 0; i < N; ++i)
            pts[i] = i;
        return make_set_subobject(std::move(pts));
    }
    GF gf(m.q);
    std::vector<std::vector<uint8_t>> basis;
    for (int i = 0; i < std::max(N, m.v); ++i) {
        std::vector<uint8_t> e(m.n, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return make_vec_subobject(gf, std::move(basis));
}

Checked<Subobject> closure(const FiniteModel& m, const std::vector<int>& set_pts)
{
    require(m.is_set(), "point-list closure is for set models");
    for (int p : set_pts)
        require(p >= 0 && p < m.n, "point ", p + 1, " outside the universe");
    Checked<Subobject> out{make_set_subobject(set_pts), true, ""};
    if (m.n < static_cast<int>(out.value.pts.size()) + 2) {
        out.stable = false;
        out.note = cat("below stable range: closure needs n >= |pts| + 2 (n = ", m.n,
                       ", |pts| = ", out.value.pts.size(), ")");
    }
    return out;
}

Checked<Subobject> closure(const FiniteModel& m,
                           const std::vector<std::vector<uint8_t>>& vec_pts)
{
    require(!m.is_set(), "vector closure is for vec models");
    GF gf(m.q);
    std::vector<std::vector<uint8_t>> gens;
    for (int i = 0; i < m.v; ++i) {
        std::vector<uint8_t> e(m.n, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    for (const auto& p : vec_pts) {
        require(static_cast<int>(p.size()) == m.n, "point has wrong dimension");
        for (uint8_t x : p)
            require(x < m.q, "coordinate out of range for F_", m.q);
        gens.push_back(p);
    }
    return Checked<Subobject>{make_vec_subobject(gf, std::move(gens)), true, ""};
}

bool subobject_contains(const FiniteModel& m, const Subobject& big, const Subobject& small)
{
    if (m.is_set()) {
        return std::includes(big.pts.begin(), big.pts.end(), small.pts.begin(),
                             small.pts.end());
    }
    GF gf(m.q);
    for (const auto& r : small.rows)
        if (!gf.in_span(r, big.rows))
            return false;
    return true;
}

Subobject subobject_intersection(const FiniteModel& m, const Subobject& a,
                                 const Subobject& b)
{
    if (m.is_set()) {
        std::vector<int> out;
        std::set_intersection(a.pts.begin(), a.pts.end(), b.pts.begin(), b.pts.end(),
                              std::back_inserter(out));
        return make_set_subobject(std::move(out));
    }
    // desk scale: scan the points of the smaller span
    GF gf(m.q);
    const Subobject& small = a.rows.size() <= b.rows.size() ? a : b;
    const Subobject& other = a.rows.size() <= b.rows.size() ? b : a;
    std::vector<std::vector<uint8_t>> common;
    for (const auto& p : gf.span_points(small.rows, m.n))
        if (gf.in_span(p, other.rows))
            common.push_back(p);
    return make_vec_subobject(gf, std::move(common));
}

}  // namespace permrep
