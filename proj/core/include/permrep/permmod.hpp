#pragma once

#include <map>
#include <memory>

#include "permrep/group.hpp"
#include "permrep/matrix.hpp"
#include "permrep/partition.hpp"

namespace permrep {

// Shared per-model state: the enumerated group and the subobject bases of
// each level, computed once and then read-only.
class ModelCache {
public:
    explicit ModelCache(const FiniteModel& m) : m_(m) {}

    const FiniteModel& model() const { return m_; }
    const Group& group() const
    {
        if (!g_)
            g_ = Group::enumerate(m_);
        return *g_;
    }
    const std::vector<Subobject>& level(int s) const
    {
        auto it = levels_.find(s);
        if (it == levels_.end())
            it = levels_.emplace(s, subobjects(m_, s)).first;
        return it->second;
    }
    int dim(int s) const { return static_cast<int>(level(s).size()); }
    int index_in_level(int s, const Subobject& sub) const
    {
        auto& idx = index_[s];
        if (idx.empty()) {
            const auto& basis = level(s);
            for (int i = 0; i < static_cast<int>(basis.size()); ++i)
                idx.emplace(basis[i], i);
        }
        auto it = idx.find(sub);
        require(it != idx.end(), "subobject is not a basis element of level ", s);
        return it->second;
    }

    // Index permutation of the level-s basis under a group element.
    std::vector<int> basis_perm(int g, int s) const
    {
        const auto& basis = level(s);
        std::vector<int> out(basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
            out[i] = index_in_level(s, group().act(g, basis[i]));
        return out;
    }
    Matrix<Rat> perm_matrix(int g, int s) const
    {
        auto p = basis_perm(g, s);
        Matrix<Rat> m(static_cast<int>(p.size()), static_cast<int>(p.size()), Rat());
        for (size_t j = 0; j < p.size(); ++j)
            m.at(p[j], static_cast<int>(j)) = Rat(1);
        return m;
    }

private:
    FiniteModel m_;
    mutable std::shared_ptr<const Group> g_;
    mutable std::map<int, std::vector<Subobject>> levels_;
    mutable std::map<int, std::map<Subobject, int>> index_;
};

// Free module on the length-s subobjects over Q, described by its basis;
// the group acts by basis permutations.
struct PermModule {
    FiniteModel model;
    int level = 0;
    int dim = 0;
};

PermModule perm_module(const ModelCache& c, int s);

struct EquivariantMap {
    int src_level = 0, dst_level = 0;
    Matrix<Rat> mat;  // dim(dst) x dim(src)
};

// [T] -> sum of the colength-1 subobjects of T.
EquivariantMap boundary(const ModelCache& c, int s);

// Exact check of the defining property against every group generator.
bool is_equivariant(const ModelCache& c, const EquivariantMap& f);

// Basis of Hom_G(level src, level dst), computed from the orbits of the
// stabilizer of a source basis point on the target basis.
std::vector<EquivariantMap> hom_basis(const ModelCache& c, int src_level, int dst_level);

struct LengthResult {
    bool certified = false;     // End algebra verified commutative
    long long length = -1;      // dim End when certified, else -1 ("Unknown")
    std::string certificate;
};
LengthResult length_multiplicity_free(const ModelCache& c, int s);

struct SocleResult {
    Matrix<Rat> basis;  // columns span the common kernel
    bool stable = true;
    std::string note;
};
// Common kernel of all equivariant maps to the next level down.
SocleResult socle_V_T(const ModelCache& c, int s);

struct IsotypicPart {
    Partition lambda;
    long long multiplicity = 0;
    long long dimension = 0;
};
// Isotypic decomposition of an invariant subspace W (given by a column
// basis) under Sym(m_aut) acting on the first m_aut points; set models over
// Q only. Multiplicities by character inner products, dimensions by hooks.
std::vector<IsotypicPart> isotypic_decompose(const ModelCache& c, int s,
                                             const Matrix<Rat>& w_basis, int m_aut);

struct CoinductionReport {
    long long lhs = 0;        // #(G_J \ G / G_T)
    long long rhs_total = 0;  // sum over closed Lambda <= J of #embeddings(Lambda -> T)
    std::vector<std::pair<Subobject, long long>> per_lambda;
    bool equal = false;
    bool stable = true;
    std::string note;
};
CoinductionReport coinduction_count_check(const ModelCache& c, const Subobject& j,
                                          const Subobject& t);

struct RestrictionBlock {
    Subobject lambda;
    std::vector<int> basis_indices;
};
// Partition of the level basis by the closure of the intersection with J.
std::vector<RestrictionBlock> restriction_decompose(const ModelCache& c, int level,
                                                    const Subobject& j);

struct GrowthRow {
    int N = 0;
    long long d = 0;
    long long bound_embed = 0;    // q^{v n0} d_{n0}(N)
    long long bound_bracket = 0;  // q^{v n0} [N]_q^{n0}
    bool within_bounds = false;
};
// d_M(N) = dim of the intersection of W with the span of the basis
// subobjects contained in the standard length-N subobject.
std::vector<GrowthRow> growth_profile(const ModelCache& c, int level,
                                      const Matrix<Rat>& w_basis, int n_min, int n_max);

}  // namespace permrep
