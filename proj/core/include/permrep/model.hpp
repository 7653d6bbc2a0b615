#pragma once

#include <string>
#include <vector>

#include "permrep/gf.hpp"

namespace permrep {

// Finite truncation of one of the ambient universes: a plain n-point set
// (acted on by the full symmetric group), or F_q^n with an optional marked
// subspace span(e1..ev) that the group fixes pointwise.
struct FiniteModel {
    enum class Kind { Set, Vec };
    Kind kind = Kind::Set;
    int q = 1;  // 1 for Set
    int n = 0;
    int v = 0;  // marked-subspace dimension, Vec only

    static FiniteModel set(int n)
    {
        require(n >= 0 && n <= 8, "set model truncation must satisfy 0 <= n <= 8, got ", n);
        return FiniteModel{Kind::Set, 1, n, 0};
    }
    static FiniteModel vec(int q, int n, int v)
    {
        require(q == 2 || q == 3 || q == 4, "q must be one of {2,3,4}, got ", q);
        require(n >= 0, "negative dimension");
        require(v >= 0 && v <= n, "marked dimension must satisfy 0 <= v <= n");
        require(n <= 8, "vec model truncation must satisfy n <= 8, got ", n);
        return FiniteModel{Kind::Vec, q, n, v};
    }

    bool is_set() const { return kind == Kind::Set; }
    int length() const { return n; }
    bool operator==(const FiniteModel& o) const
    {
        return kind == o.kind && q == o.q && n == o.n && v == o.v;
    }
    std::string str() const
    {
        return is_set() ? cat("set(n=", n, ")") : cat("vec(q=", q, ",n=", n, ",v=", v, ")");
    }
};

// G-closed subobject at truncation: a sorted point set, or the canonical
// reduced-row-echelon basis of a subspace containing the marked subspace.
struct Subobject {
    bool set_kind = true;
    std::vector<int> pts;                    // Set
    std::vector<std::vector<uint8_t>> rows;  // Vec, RREF rows

    int length() const
    {
        return set_kind ? static_cast<int>(pts.size()) : static_cast<int>(rows.size());
    }
    bool operator==(const Subobject& o) const
    {
        return set_kind == o.set_kind && pts == o.pts && rows == o.rows;
    }
    bool operator<(const Subobject& o) const
    {
        if (length() != o.length())
            return length() < o.length();
        return set_kind ? pts < o.pts : rows < o.rows;
    }
    std::string str() const;
};

Subobject make_set_subobject(std::vector<int> pts);
Subobject make_vec_subobject(const GF& gf, std::vector<std::vector<uint8_t>> vectors);

// Every length-s subobject, canonical and in a deterministic order.
std::vector<Subobject> subobjects(const FiniteModel& m, int s);

long long binomial(int n, int k);
long long gaussian_binomial(int n, int k, int q);
long long subobject_count(const FiniteModel& m, int s);

// #Psi_N of the standard length-N subobject: N for sets, q^N for spaces.
long long q_bracket(const FiniteModel& m, int N);

// d_n(N) = ([N]_q - [0]_q) ... ([N]_q - [n-1]_q), the number of induced
// embeddings of the standard length-n subobject into the length-N one
// (marked-subspace correction factors q^{vn} are applied by callers).
long long embedding_count(const FiniteModel& m, int n, int N);

// The standard length-N subobject: {1..N}, or span(e_1..e_N) together with
// the marked subspace.
Subobject standard_subobject(const FiniteModel& m, int N);

template <class T>
struct Checked {
    T value;
    bool stable = true;
    std::string note;
};

// G-closure of a point collection. For sets this is the collection itself,
// faithful to the infinite model only when n >= |pts| + 2; for spaces it is
// span(pts, marked subspace).
Checked<Subobject> closure(const FiniteModel& m, const std::vector<int>& set_pts);
Checked<Subobject> closure(const FiniteModel& m,
                           const std::vector<std::vector<uint8_t>>& vec_pts);

bool subobject_contains(const FiniteModel& m, const Subobject& big, const Subobject& small);
Subobject subobject_intersection(const FiniteModel& m, const Subobject& a, const Subobject& b);

}  // namespace permrep
