#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permrep/poly.hpp"

namespace permrep {

// Substitution of a variable makes the denominator vanish identically.
class PoleError : public Error {
public:
    PoleError(const std::string& factor, const std::string& msg)
        : Error(msg), vanishing_factor(factor)
    {
    }
    std::string vanishing_factor;
};

// Element of the rational function field K = k(x1..xn) in canonical reduced
// form: gcd(num, den) = 1, den nonzero with grlex-leading coefficient 1,
// zero represented as 0/1. Equal values have identical representations.
template <class K>
class RatFunc {
public:
    RatFunc(int nvars, K proto)
        : num_(nvars, proto),
          den_(Poly<K>::constant(nvars, one_like(proto)))
    {
    }
    explicit RatFunc(Poly<K> p)
        : num_(std::move(p)),
          den_(Poly<K>::constant(num_.nvars(), one_like(num_.proto())))
    {
    }
    RatFunc(Poly<K> numerator, Poly<K> denominator)
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        require(num_.nvars() == den_.nvars(), "mixed variable universes");
        canonicalize();
    }

    static RatFunc constant(int nvars, const K& c)
    {
        return RatFunc(Poly<K>::constant(nvars, c));
    }
    static RatFunc variable(int nvars, int i, const K& proto)
    {
        return RatFunc(Poly<K>::variable(nvars, i, proto));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    const K& proto() const { return num_.proto(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    K constant_value() const
    {
        require(is_constant(), "value is not a constant");
        return num_.constant_value();
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

    // Sum with cross-cancellation: both operands being canonical, the only
    // common factor of the new numerator and denominator divides
    // gcd(den, o.den), so one small gcd finishes the reduction.
    RatFunc operator+(const RatFunc& o) const
    {
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        if (den_ == o.den_) {
            Poly<K> t = num_ + o.num_;
            if (t.is_zero())
                return RatFunc(nvars(), proto());
            Poly<K> g2 = poly_gcd(t, den_);
            if (g2.is_one())
                return normalized(std::move(t), den_);
            return normalized(div_exact(t, g2), div_exact(den_, g2));
        }
        Poly<K> g = poly_gcd(den_, o.den_);
        if (g.is_one())
            return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        Poly<K> db = div_exact(den_, g);
        Poly<K> dd = div_exact(o.den_, g);
        Poly<K> t = num_ * dd + o.num_ * db;
        Poly<K> g2 = poly_gcd(t, g);
        if (!g2.is_one()) {
            t = div_exact(t, g2);
            g = div_exact(g, g2);
        }
        return normalized(std::move(t), g * db * dd);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const
    {
        if (is_zero() || o.is_zero())
            return RatFunc(nvars(), proto());
        Poly<K> g1 = poly_gcd(num_, o.den_);
        Poly<K> g2 = poly_gcd(o.num_, den_);
        Poly<K> n = g1.is_one() ? num_ : div_exact(num_, g1);
        Poly<K> on = g2.is_one() ? o.num_ : div_exact(o.num_, g2);
        Poly<K> d = g2.is_one() ? den_ : div_exact(den_, g2);
        Poly<K> od = g1.is_one() ? o.den_ : div_exact(o.den_, g1);
        return normalized(n * on, d * od);
    }
    RatFunc operator/(const RatFunc& o) const
    {
        require(!o.is_zero(), "division by zero");
        return *this * o.inv();
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    RatFunc inv() const
    {
        require(!is_zero(), "inverse of zero");
        return normalized(den_, num_);  // a swapped coprime pair stays coprime
    }

    bool operator==(const RatFunc& o) const
    {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc permuted(const std::vector<int>& img) const
    {
        // a ring automorphism preserves coprimality, so only the leading
        // normalization needs redoing
        Poly<K> n = num_.permuted(img);
        Poly<K> d = den_.permuted(img);
        K lc = d.leading_coeff();
        if (!(lc == one_like(proto()))) {
            K s = inv_of(lc);
            n = n.scaled(s);
            d = d.scaled(s);
        }
        return RatFunc(std::move(n), std::move(d), raw_tag{});
    }

    using SubstTarget = typename Poly<K>::SubstTarget;
    RatFunc substituted(const std::vector<std::optional<SubstTarget>>& assign,
                        const std::vector<std::string>& names_for_errors = {}) const
    {
        Poly<K> d = den_.substituted(assign);
        if (d.is_zero()) {
            std::string factor = names_for_errors.empty()
                                     ? std::string("denominator")
                                     : den_.str(names_for_errors);
            throw PoleError(factor,
                            cat("denominator vanishes under assignment: ", factor));
        }
        return RatFunc(num_.substituted(assign), std::move(d));
    }

    std::string str(const std::vector<std::string>& names) const
    {
        if (den_.is_one())
            return num_.str(names);
        return cat("(", num_.str(names), ")/(", den_.str(names), ")");
    }

private:
    struct raw_tag {};
    RatFunc(Poly<K> n, Poly<K> d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    // For pairs already known to be coprime: only the leading normalization.
    static RatFunc normalized(Poly<K> n, Poly<K> d)
    {
        if (n.is_zero())
            return RatFunc(n.nvars(), n.proto());
        K lc = d.leading_coeff();
        if (!(lc == one_like(n.proto()))) {
            K s = inv_of(lc);
            n = n.scaled(s);
            d = d.scaled(s);
        }
        return RatFunc(std::move(n), std::move(d), raw_tag{});
    }

    void canonicalize()
    {
        require(!den_.is_zero(), "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(nvars(), one_like(proto()));
            return;
        }
        if (!num_.is_constant() && !den_.is_constant()) {
            Poly<K> g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = div_exact(num_, g);
                den_ = div_exact(den_, g);
            }
        }
        K lc = den_.leading_coeff();
        if (!(lc == one_like(proto()))) {
            K s = inv_of(lc);
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    Poly<K> num_, den_;
};

template <class K>
RatFunc<K> zero_like(const RatFunc<K>& a)
{
    return RatFunc<K>(a.nvars(), a.proto());
}
template <class K>
RatFunc<K> one_like(const RatFunc<K>& a)
{
    return RatFunc<K>::constant(a.nvars(), one_like(a.proto()));
}
template <class K>
bool is_zero(const RatFunc<K>& a)
{
    return a.is_zero();
}
template <class K>
RatFunc<K> inv_of(const RatFunc<K>& a)
{
    return a.inv();
}

// Applies a permutation of the variables (a field automorphism).
template <class K>
RatFunc<K> permute_vars(const RatFunc<K>& f, const std::vector<int>& sigma)
{
    require(static_cast<int>(sigma.size()) == f.nvars(),
            "permutation arity mismatch: ", sigma.size(), " vs ", f.nvars());
    std::vector<char> seen(sigma.size(), 0);
    for (int t : sigma) {
        require(t >= 0 && t < static_cast<int>(sigma.size()) && !seen[t],
                "not a permutation of the declared variables");
        seen[t] = 1;
    }
    return f.permuted(sigma);
}

}  // namespace permrep
