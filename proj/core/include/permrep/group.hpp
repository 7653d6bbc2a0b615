#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "permrep/model.hpp"

namespace permrep {

// A group element at truncation: the image list of a permutation, or a
// row-major n x n matrix over F_q acting on column vectors.
using Elt = std::vector<uint8_t>;

struct EltHash {
    size_t operator()(const Elt& e) const
    {
        size_t h = 1469598103934665603ull;
        for (uint8_t b : e)
            h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

// Subgroups the statements need: the full group and pointwise/setwise
// stabilizers of subobjects.
struct SubgroupSpec {
    enum class Type { Full, Pointwise, Setwise };
    Type type = Type::Full;
    Subobject t;

    static SubgroupSpec full() { return SubgroupSpec{}; }
    static SubgroupSpec pointwise(Subobject s)
    {
        return SubgroupSpec{Type::Pointwise, std::move(s)};
    }
    static SubgroupSpec setwise(Subobject s)
    {
        return SubgroupSpec{Type::Setwise, std::move(s)};
    }
    std::string str() const;
};

// Brute-force enumerated automorphism group of a finite model, with
// hash-indexed elements. Enumeration happens once; everything downstream
// works with element indices.
class Group {
public:
    static std::shared_ptr<const Group> enumerate(const FiniteModel& m);

    const FiniteModel& model() const { return model_; }
    int size() const { return static_cast<int>(elems_.size()); }
    int id() const { return 0; }
    const Elt& elt(int i) const { return elems_[i]; }
    int index_of(const Elt& e) const;

    int mul(int a, int b) const;  // (a*b) acts as "apply b, then a"
    int inv(int a) const;

    int act_point(int g, int p) const;  // set models
    std::vector<uint8_t> act_vector(int g, const std::vector<uint8_t>& x) const;
    Subobject act(int g, const Subobject& s) const;

    std::vector<int> members(const SubgroupSpec& spec) const;
    // Greedy small generating set of a subgroup given by its sorted members.
    std::vector<int> small_gens(const std::vector<int>& subgroup) const;
    // Generators of the whole group: adjacent transpositions for sets,
    // a greedy small generating set for vec models.
    const std::vector<int>& gens() const { return gens_; }

    struct DoubleCosets {
        long long count = 0;
        std::vector<int> reps;          // minimal element index per class
        std::vector<long long> sizes;   // matching class sizes
    };
    DoubleCosets double_cosets(const SubgroupSpec& u, const SubgroupSpec& v) const;

    struct FixedCosets {
        long long coset_count = 0;      // |G/U|
        std::vector<int> fixed_reps;    // canonical reps of cosets gU with VgU = gU
    };
    FixedCosets fixed_cosets(const SubgroupSpec& u, const SubgroupSpec& v) const;

    std::vector<int> normalizer(const std::vector<int>& subgroup) const;

    // Canonical coset label: the minimal element index in g*U.
    int coset_canon(int g, const std::vector<int>& u_members) const;

    struct AutQuotient {
        long long order = 0;
        std::vector<int> coset_reps;     // representatives in G of N_G(G_T)/G_T
        std::vector<Elt> restrictions;   // their action on T (perm of T's points,
                                         // or |T| x |T| matrix in T's basis)
        bool stable = true;
        std::string note;
    };
    // Aut(T) := N_G(G_T)/G_T realized as restrictions to T.
    AutQuotient aut_quotient(const Subobject& t) const;

private:
    explicit Group(FiniteModel m) : model_(std::move(m)), gf_(model_.is_set() ? 2 : model_.q) {}

    Elt compose(const Elt& a, const Elt& b) const;
    Elt invert(const Elt& a) const;

    FiniteModel model_;
    GF gf_;
    std::vector<Elt> elems_;
    std::unordered_map<Elt, int, EltHash> index_;
    std::vector<int> gens_;
};

}  // namespace permrep
