#include "permrep/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace permrep {

std::string SubgroupSpec::str() const
{
    switch (type) {
        case Type::Full:
            return "G";
        case Type::Pointwise:
            return cat("G_", t.str(), " (pointwise)");
        case Type::Setwise:
            return cat("G_{", t.str(), "} (setwise)");
    }
    return "?";
}

namespace {

long long gl_order(int q, int n)
{
    long long qn = 1;
    for (int i = 0; i < n; ++i)
        qn *= q;
    long long r = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

}  // namespace

std::shared_ptr<const Group> Group::enumerate(const FiniteModel& m)
{
    auto g = std::shared_ptr<Group>(new Group(m));
    if (m.is_set()) {
        Elt p(m.n);
        std::iota(p.begin(), p.end(), 0);
        do {
            g->index_.emplace(p, static_cast<int>(g->elems_.size()));
            g->elems_.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        // identity is lexicographically first already
        for (int i = 0; i + 1 < m.n; ++i) {
            Elt t(m.n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[i + 1]);
            g->gens_.push_back(g->index_of(t));
        }
        return g;
    }

    require(gl_order(m.q, m.n) <= 25000,
            "|GL_", m.n, "(F_", m.q, ")| = ", gl_order(m.q, m.n),
            " exceeds the enumeration bound 25000");
    const GF& gf = g->gf_;
    const int n = m.n;
    // columns 0..v-1 are pinned to e_i; enumerate the remaining columns in
    // counting order, keeping the chosen set independent
    std::vector<std::vector<uint8_t>> cols(n, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < m.v; ++i)
        cols[i][i] = 1;
    std::vector<std::vector<uint8_t>> chosen;  // rref of chosen columns
    for (int i = 0; i < m.v; ++i)
        chosen.push_back(cols[i]);
    chosen = gf.rref(chosen);

    auto emit = [&]() {
        Elt e(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                e[static_cast<size_t>(i) * n + j] = cols[j][i];  // row-major from columns
        g->index_.emplace(e, static_cast<int>(g->elems_.size()));
        g->elems_.push_back(std::move(e));
    };
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            emit();
            return;
        }
        long long total = 1;
        for (int i = 0; i < n; ++i)
            total *= m.q;
        for (long long code = 0; code < total; ++code) {
            std::vector<uint8_t> cand(n);
            long long c = code;
            for (int i = 0; i < n; ++i) {
                cand[i] = static_cast<uint8_t>(c % m.q);
                c /= m.q;
            }
            if (gf.in_span(cand, chosen))
                continue;
            std::vector<std::vector<uint8_t>> saved = chosen;
            chosen.push_back(cand);
            chosen = gf.rref(chosen);
            cols[j] = cand;
            self(self, j + 1);
            chosen = std::move(saved);
        }
    };
    rec(rec, m.v);

    // move the identity to index 0
    Elt ident(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        ident[static_cast<size_t>(i) * n + i] = 1;
    int idi = g->index_of(ident);
    if (idi != 0) {
        std::swap(g->elems_[0], g->elems_[idi]);
        g->index_[g->elems_[0]] = 0;
        g->index_[g->elems_[idi]] = idi;
    }
    std::vector<int> all(g->size());
    std::iota(all.begin(), all.end(), 0);
    g->gens_ = g->small_gens(all);
    return g;
}

int Group::index_of(const Elt& e) const
{
    auto it = index_.find(e);
    require(it != index_.end(), "element not in the enumerated group");
    return it->second;
}

Elt Group::compose(const Elt& a, const Elt& b) const
{
    if (model_.is_set()) {
        Elt r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = a[b[i]];
        return r;
    }
    const int n = model_.n;
    Elt r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            uint8_t aik = a[static_cast<size_t>(i) * n + k];
            if (!aik)
                continue;
            for (int j = 0; j < n; ++j) {
                uint8_t bkj = b[static_cast<size_t>(k) * n + j];
                if (!bkj)
                    continue;
                auto& dst = r[static_cast<size_t>(i) * n + j];
                dst = gf_.add(dst, gf_.mul(aik, bkj));
            }
        }
    return r;
}

Elt Group::invert(const Elt& a) const
{
    if (model_.is_set()) {
        Elt r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[a[i]] = static_cast<uint8_t>(i);
        return r;
    }
    const int n = model_.n;
    // Gauss-Jordan over GF(q) on [A | I]
    std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = a[static_cast<size_t>(i) * n + j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        require(piv < n, "singular element in group inversion");
        std::swap(m[piv], m[col]);
        uint8_t s = gf_.inv(m[col][col]);
        for (int j = 0; j < 2 * n; ++j)
            m[col][j] = gf_.mul(m[col][j], s);
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            uint8_t f = gf_.neg(m[i][col]);
            for (int j = 0; j < 2 * n; ++j)
                m[i][j] = gf_.add(m[i][j], gf_.mul(m[col][j], f));
        }
    }
    Elt r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[static_cast<size_t>(i) * n + j] = m[i][n + j];
    return r;
}

int Group::mul(int a, int b) const
{
    return index_of(compose(elems_[a], elems_[b]));
}

int Group::inv(int a) const
{
    return index_of(invert(elems_[a]));
}

int Group::act_point(int g, int p) const
{
    require(model_.is_set(), "act_point is for set models");
    return elems_[g][p];
}

std::vector<uint8_t> Group::act_vector(int g, const std::vector<uint8_t>& x) const
{
    const int n = model_.n;
    const Elt& a = elems_[g];
    std::vector<uint8_t> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[static_cast<size_t>(i) * n + j] && x[j])
                r[i] = gf_.add(r[i], gf_.mul(a[static_cast<size_t>(i) * n + j], x[j]));
    return r;
}

Subobject Group::act(int g, const Subobject& s) const
{
    if (model_.is_set()) {
        std::vector<int> pts;
        pts.reserve(s.pts.size());
        for (int p : s.pts)
            pts.push_back(elems_[g][p]);
        return make_set_subobject(std::move(pts));
    }
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(s.rows.size());
    for (const auto& r : s.rows)
        rows.push_back(act_vector(g, r));
    return make_vec_subobject(gf_, std::move(rows));
}

std::vector<int> Group::members(const SubgroupSpec& spec) const
{
    std::vector<int> out;
    switch (spec.type) {
        case SubgroupSpec::Type::Full: {
            out.resize(size());
            std::iota(out.begin(), out.end(), 0);
            return out;
        }
        case SubgroupSpec::Type::Pointwise: {
            for (int g = 0; g < size(); ++g) {
                bool ok = true;
                if (model_.is_set()) {
                    for (int p : spec.t.pts)
                        if (elems_[g][p] != p) {
                            ok = false;
                            break;
                        }
                } else {
                    for (const auto& r : spec.t.rows)
                        if (act_vector(g, r) != r) {
                            ok = false;
                            break;
                        }
                }
                if (ok)
                    out.push_back(g);
            }
            return out;
        }
        case SubgroupSpec::Type::Setwise: {
            for (int g = 0; g < size(); ++g)
                if (act(g, spec.t) == spec.t)
                    out.push_back(g);
            return out;
        }
    }
    return out;
}

std::vector<int> Group::small_gens(const std::vector<int>& subgroup) const
{
    std::vector<int> gens;
    std::vector<char> closed(size(), 0);
    closed[id()] = 1;
    std::vector<int> frontier{id()};
    auto regrow = [&]() {
        // BFS closure of <gens>
        std::vector<int> queue = frontier;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int h : gens) {
                int y = mul(x, h);
                if (!closed[y]) {
                    closed[y] = 1;
                    queue.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
    };
    for (int e : subgroup) {
        if (closed[e])
            continue;
        gens.push_back(e);
        regrow();
    }
    return gens;
}

Group::DoubleCosets Group::double_cosets(const SubgroupSpec& u, const SubgroupSpec& v) const
{
    DoubleCosets out;
    if (u.type == SubgroupSpec::Type::Full || v.type == SubgroupSpec::Type::Full) {
        out.count = 1;
        out.reps = {id()};
        out.sizes = {size()};
        return out;
    }
    std::vector<int> gu = small_gens(members(u));
    std::vector<int> gv = small_gens(members(v));
    std::vector<int> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };
    for (int g = 0; g < size(); ++g) {
        for (int x : gu)
            unite(g, mul(x, g));
        for (int x : gv)
            unite(g, mul(g, x));
    }
    std::unordered_map<int, long long> class_size;
    for (int g = 0; g < size(); ++g)
        ++class_size[find(g)];
    for (int g = 0; g < size(); ++g) {
        if (find(g) == g) {
            out.reps.push_back(g);
            out.sizes.push_back(class_size[g]);
        }
    }
    out.count = static_cast<long long>(out.reps.size());
    return out;
}

int Group::coset_canon(int g, const std::vector<int>& u_members) const
{
    int best = size();
    for (int u : u_members)
        best = std::min(best, mul(g, u));
    return best;
}

Group::FixedCosets Group::fixed_cosets(const SubgroupSpec& u, const SubgroupSpec& v) const
{
    std::vector<int> um = members(u);
    std::vector<char> umask(size(), 0);
    for (int x : um)
        umask[x] = 1;
    std::vector<int> gv = small_gens(members(v));

    FixedCosets out;
    std::vector<char> seen(size(), 0);
    for (int g = 0; g < size(); ++g) {
        if (seen[g])
            continue;
        ++out.coset_count;  // g is the minimal element of its coset
        for (int x : um)
            seen[mul(g, x)] = 1;
        int gi = inv(g);
        bool fixed = true;
        for (int x : gv) {
            if (!umask[mul(gi, mul(x, g))]) {
                fixed = false;
                break;
            }
        }
        if (fixed)
            out.fixed_reps.push_back(g);
    }
    return out;
}

std::vector<int> Group::normalizer(const std::vector<int>& subgroup) const
{
    std::vector<char> mask(size(), 0);
    for (int x : subgroup)
        mask[x] = 1;
    std::vector<int> gens = small_gens(subgroup);
    std::vector<int> out;
    for (int g = 0; g < size(); ++g) {
        int gi = inv(g);
        bool ok = true;
        for (int u : gens) {
            if (!mask[mul(g, mul(u, gi))]) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(g);
    }
    return out;
}

Group::AutQuotient Group::aut_quotient(const Subobject& t) const
{
    AutQuotient out;
    if (model_.is_set() && model_.n < t.length() + 2) {
        out.stable = false;
        out.note = cat("below stable range: need n >= |T| + 2, have n = ", model_.n);
    }
    std::vector<int> u = members(SubgroupSpec::pointwise(t));
    std::vector<int> nrm = normalizer(u);
    std::vector<char> in_u(size(), 0);
    for (int x : u)
        in_u[x] = 1;
    std::vector<char> seen(size(), 0);
    for (int g : nrm) {
        if (seen[g])
            continue;
        for (int x : u)
            seen[mul(g, x)] = 1;
        out.coset_reps.push_back(g);
        // restriction of g to T
        if (model_.is_set()) {
            Elt restr(t.pts.size());
            for (size_t i = 0; i < t.pts.size(); ++i) {
                int img = elems_[g][t.pts[i]];
                auto it = std::find(t.pts.begin(), t.pts.end(), img);
                require(it != t.pts.end(),
                        "normalizer element does not preserve T: truncation too small");
                restr[i] = static_cast<uint8_t>(it - t.pts.begin());
            }
            out.restrictions.push_back(std::move(restr));
        } else {
            const size_t s = t.rows.size();
            // coordinates along RREF rows read off at the pivot columns
            std::vector<int> piv(s);
            for (size_t i = 0; i < s; ++i) {
                size_t p = 0;
                while (p < t.rows[i].size() && t.rows[i][p] == 0)
                    ++p;
                piv[i] = static_cast<int>(p);
            }
            Elt restr(s * s, 0);
            for (size_t jcol = 0; jcol < s; ++jcol) {
                auto img = act_vector(g, t.rows[jcol]);
                require(gf_.in_span(img, t.rows),
                        "normalizer element does not preserve T: truncation too small");
                for (size_t i = 0; i < s; ++i)
                    restr[i * s + jcol] = img[piv[i]];
            }
            out.restrictions.push_back(std::move(restr));
        }
    }
    out.order = static_cast<long long>(out.coset_reps.size());
    // the restriction map is injective on N/G_T whenever T carries the full
    // quotient; record a note if collapsing happens below stable range
    std::vector<Elt> sorted = out.restrictions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.stable = false;
        out.note += (out.note.empty() ? "" : "; ");
        out.note += "restrictions to T are not pairwise distinct";
    }
    return out;
}

}  // namespace permrep
