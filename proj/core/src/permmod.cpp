#include "permrep/permmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permrep {

PermModule perm_module(const ModelCache& c, int s)
{
    return PermModule{c.model(), s, c.dim(s)};
}

EquivariantMap boundary(const ModelCache& c, int s)
{
    require(s >= 1 && s <= c.model().length(), "boundary level ", s, " out of range");
    const auto& src = c.level(s);
    const auto& dst = c.level(s - 1);
    Matrix<Rat> m(static_cast<int>(dst.size()), static_cast<int>(src.size()), Rat());
    for (int j = 0; j < static_cast<int>(src.size()); ++j)
        for (int i = 0; i < static_cast<int>(dst.size()); ++i)
            if (subobject_contains(c.model(), src[j], dst[i]))
                m.at(i, j) = Rat(1);
    return EquivariantMap{s, s - 1, std::move(m)};
}

bool is_equivariant(const ModelCache& c, const EquivariantMap& f)
{
    for (int g : c.group().gens()) {
        Matrix<Rat> lhs = c.perm_matrix(g, f.dst_level) * f.mat;
        Matrix<Rat> rhs = f.mat * c.perm_matrix(g, f.src_level);
        if (lhs != rhs)
            return false;
    }
    return true;
}

namespace {

// Union-find orbit partition of the level basis under a set of elements.
std::vector<int> orbit_reps(const ModelCache& c, int level, const std::vector<int>& gens,
                            std::vector<int>& root_of)
{
    int n = c.dim(level);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int g : gens) {
        auto p = c.basis_perm(g, level);
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(p[i]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    root_of.assign(n, 0);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        root_of[i] = find(i);
        if (root_of[i] == i)
            reps.push_back(i);
    }
    return reps;
}

// One group element per source basis point, carrying basis[0] there.
std::vector<int> transversal(const ModelCache& c, int level)
{
    const auto& basis = c.level(level);
    const Group& g = c.group();
    std::vector<int> to(basis.size(), -1);
    int start = 0;
    to[start] = g.id();
    std::vector<int> queue{start};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (int h : g.gens()) {
            Subobject img = g.act(h, basis[cur]);
            int idx = c.index_in_level(level, img);
            if (to[idx] < 0) {
                to[idx] = g.mul(h, to[cur]);
                queue.push_back(idx);
            }
        }
    }
    for (int t : to)
        require(t >= 0, "group action on subobjects is not transitive");
    return to;
}

}  // namespace

std::vector<EquivariantMap> hom_basis(const ModelCache& c, int src_level, int dst_level)
{
    const auto& src = c.level(src_level);
    require(!src.empty(), "empty source level");
    const Group& g = c.group();

    std::vector<int> stab = g.members(SubgroupSpec::setwise(src[0]));
    std::vector<int> stab_gens = g.small_gens(stab);
    std::vector<int> root_of;
    std::vector<int> reps = orbit_reps(c, dst_level, stab_gens, root_of);

    std::vector<int> trans = transversal(c, src_level);
    // basis permutations of the target level, one per source basis point
    std::vector<std::vector<int>> tperm(src.size());
    for (size_t j = 0; j < src.size(); ++j)
        tperm[j] = c.basis_perm(trans[j], dst_level);

    std::vector<EquivariantMap> out;
    for (int rep : reps) {
        Matrix<Rat> m(c.dim(dst_level), c.dim(src_level), Rat());
        for (int k = 0; k < c.dim(dst_level); ++k) {
            if (root_of[k] != rep)
                continue;
            for (size_t j = 0; j < src.size(); ++j)
                m.at(tperm[j][k], static_cast<int>(j)) = Rat(1);
        }
        out.push_back(EquivariantMap{src_level, dst_level, std::move(m)});
    }
    return out;
}

LengthResult length_multiplicity_free(const ModelCache& c, int s)
{
    std::vector<EquivariantMap> end = hom_basis(c, s, s);
    for (size_t i = 0; i < end.size(); ++i) {
        for (size_t j = i + 1; j < end.size(); ++j) {
            if (end[i].mat * end[j].mat != end[j].mat * end[i].mat)
                return LengthResult{false, -1, "End algebra is not commutative"};
        }
    }
    return LengthResult{true, static_cast<long long>(end.size()), "multiplicity-free"};
}

SocleResult socle_V_T(const ModelCache& c, int s)
{
    SocleResult out{Matrix<Rat>(0, 0, Rat()), true, ""};
    if (c.model().n < 2 * s) {
        out.stable = false;
        out.note = cat("below stable range: need n >= 2s, have n = ", c.model().n,
                       ", s = ", s);
    }
    if (s == 0) {
        out.basis = Matrix<Rat>::identity(c.dim(0), Rat(1));
        return out;
    }
    std::vector<EquivariantMap> maps = hom_basis(c, s, s - 1);
    Matrix<Rat> stacked(0, c.dim(s), Rat());
    for (const auto& f : maps)
        stacked = stacked.stacked(f.mat);
    auto ker = kernel_basis(stacked);
    Matrix<Rat> basis(c.dim(s), static_cast<int>(ker.size()), Rat());
    for (int j = 0; j < static_cast<int>(ker.size()); ++j)
        for (int i = 0; i < c.dim(s); ++i)
            basis.at(i, j) = ker[j][i];
    out.basis = std::move(basis);
    return out;
}

namespace {

// Representative of the conjugacy class of cycle type mu inside Sym(n),
// cycling consecutive blocks of the first |mu| points.
int class_representative(const ModelCache& c, const Partition& mu)
{
    int n = c.model().n;
    Elt p(n);
    std::iota(p.begin(), p.end(), 0);
    int pos = 0;
    for (int part : mu) {
        for (int i = 0; i < part; ++i)
            p[pos + i] = static_cast<uint8_t>(pos + (i + 1) % part);
        pos += part;
    }
    return c.group().index_of(p);
}

Rat trace_on_subspace(const ModelCache& c, int level, const Matrix<Rat>& w, int g)
{
    Matrix<Rat> pw = c.perm_matrix(g, level) * w;
    Matrix<Rat> x = solve_matrix(w, pw);
    Rat tr;
    for (int i = 0; i < x.rows(); ++i)
        tr += x.at(i, i);
    return tr;
}

}  // namespace

std::vector<IsotypicPart> isotypic_decompose(const ModelCache& c, int s,
                                             const Matrix<Rat>& w_basis, int m_aut)
{
    require(c.model().is_set(), "isotypic decomposition supports set models only");
    require(m_aut >= 0 && m_aut <= c.model().n, "acting symmetric group degree out of range");
    require(w_basis.rows() == c.dim(s), "subspace basis has wrong ambient dimension");

    std::vector<Partition> classes = partitions_of(m_aut);
    std::vector<Rat> traces;
    traces.reserve(classes.size());
    for (const auto& mu : classes)
        traces.push_back(trace_on_subspace(c, s, w_basis, class_representative(c, mu)));

    long long m_fact = factorial(m_aut);
    std::vector<IsotypicPart> out;
    long long total = 0;
    for (const auto& lambda : classes) {  // partitions index both classes and irreducibles
        Rat acc;
        for (size_t k = 0; k < classes.size(); ++k)
            acc += Rat(class_size(classes[k])) * Rat(character_value(lambda, classes[k])) *
                   traces[k];
        Rat mult = acc / Rat(m_fact);
        require(mult.den() == 1, "internal error: non-integer isotypic multiplicity");
        require(!(mult < Rat(0)), "internal error: negative isotypic multiplicity");
        if (mult.is_zero())
            continue;
        long long ml = static_cast<long long>(mult.num().get_si());
        long long dim = hook_dimension(lambda);
        total += ml * dim;
        out.push_back(IsotypicPart{lambda, ml, dim});
    }
    require(total == w_basis.cols(),
            "internal error: isotypic multiplicities do not add up: ", total, " vs ",
            w_basis.cols());
    return out;
}

namespace {

// Distinct restrictions g|_Lambda with image inside T, over the whole group.
long long embeddings_into(const ModelCache& c, const Subobject& lambda, const Subobject& t)
{
    const Group& g = c.group();
    std::set<std::vector<uint8_t>> images;
    const FiniteModel& m = c.model();
    for (int e = 0; e < g.size(); ++e) {
        std::vector<uint8_t> key;
        bool inside = true;
        if (m.is_set()) {
            for (int p : lambda.pts) {
                int img = g.act_point(e, p);
                if (!std::binary_search(t.pts.begin(), t.pts.end(), img)) {
                    inside = false;
                    break;
                }
                key.push_back(static_cast<uint8_t>(img));
            }
        } else {
            GF gf(m.q);
            for (const auto& r : lambda.rows) {
                auto img = g.act_vector(e, r);
                if (!gf.in_span(img, t.rows)) {
                    inside = false;
                    break;
                }
                key.insert(key.end(), img.begin(), img.end());
            }
        }
        if (inside)
            images.insert(std::move(key));
    }
    return static_cast<long long>(images.size());
}

std::vector<Subobject> closed_subobjects_of(const ModelCache& c, const Subobject& j)
{
    std::vector<Subobject> out;
    const FiniteModel& m = c.model();
    for (int d = 0; d <= j.length(); ++d)
        for (const auto& sub : subobjects(m, d))
            if (subobject_contains(m, j, sub))
                out.push_back(sub);
    return out;
}

}  // namespace

CoinductionReport coinduction_count_check(const ModelCache& c, const Subobject& j,
                                          const Subobject& t)
{
    CoinductionReport rep;
    const FiniteModel& m = c.model();
    if (m.is_set() && m.n < j.length() + t.length()) {
        rep.stable = false;
        rep.note = cat("below stable range: need n >= |J| + |T|, have n = ", m.n);
    }
    rep.lhs = c.group()
                  .double_cosets(SubgroupSpec::pointwise(j), SubgroupSpec::pointwise(t))
                  .count;
    for (const auto& lambda : closed_subobjects_of(c, j)) {
        long long cnt = embeddings_into(c, lambda, t);
        rep.rhs_total += cnt;
        rep.per_lambda.emplace_back(lambda, cnt);
    }
    rep.equal = rep.lhs == rep.rhs_total;
    return rep;
}

std::vector<RestrictionBlock> restriction_decompose(const ModelCache& c, int level,
                                                    const Subobject& j)
{
    std::map<Subobject, std::vector<int>> blocks;
    const auto& basis = c.level(level);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        blocks[subobject_intersection(c.model(), basis[i], j)].push_back(i);
    std::vector<RestrictionBlock> out;
    for (auto& [lambda, idx] : blocks)
        out.push_back(RestrictionBlock{lambda, std::move(idx)});
    return out;
}

std::vector<GrowthRow> growth_profile(const ModelCache& c, int level,
                                      const Matrix<Rat>& w_basis, int n_min, int n_max)
{
    const FiniteModel& m = c.model();
    require(w_basis.rows() == c.dim(level), "subspace basis has wrong ambient dimension");
    require(n_min >= 0 && n_max <= m.length(), "N range exceeds the truncation");
    std::vector<GrowthRow> out;
    const auto& basis = c.level(level);
    long long marked_factor = 1;
    for (int i = 0; i < m.v * level; ++i)
        marked_factor *= m.q;
    for (int N = n_min; N <= n_max; ++N) {
        Subobject psi = standard_subobject(m, N);
        std::vector<int> outside;
        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            if (!subobject_contains(m, psi, basis[i]))
                outside.push_back(i);
        Matrix<Rat> restricted = w_basis.rows_slice(outside);
        long long d = w_basis.cols() - rank(restricted);
        GrowthRow row;
        row.N = N;
        row.d = d;
        row.bound_embed = marked_factor * embedding_count(m, level, N);
        long long br = 1;
        for (int i = 0; i < level; ++i)
            br *= q_bracket(m, N);
        row.bound_bracket = marked_factor * br;
        row.within_bounds = d <= row.bound_embed && row.bound_embed <= row.bound_bracket;
        out.push_back(row);
    }
    return out;
}

}  // namespace permrep
