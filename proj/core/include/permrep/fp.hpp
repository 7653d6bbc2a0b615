#pragma once

#include <cstdint>
#include <string>

#include "permrep/common.hpp"

namespace permrep {

// Element of the prime field F_p for a runtime modulus p.
// The modulus travels with the element; operations on mismatched moduli throw.
class Fp {
public:
    Fp() = default;  // unset sentinel, for container internals only
    Fp(uint64_t p, long long value) : p_(p)
    {
        require(p >= 2, "prime field modulus must be >= 2");
        long long r = value % static_cast<long long>(p);
        if (r < 0)
            r += static_cast<long long>(p);
        v_ = static_cast<uint64_t>(r);
    }

    uint64_t modulus() const { return p_; }
    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return make(p_, v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const
    {
        match(o);
        uint64_t s = v_ + o.v_;
        if (s >= p_)
            s -= p_;
        return make(p_, s);
    }
    Fp operator-(const Fp& o) const
    {
        match(o);
        return make(p_, v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_);
    }
    Fp operator*(const Fp& o) const
    {
        match(o);
        return make(p_, static_cast<uint64_t>(
                            (static_cast<unsigned __int128>(v_) * o.v_) % p_));
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const
    {
        require(v_ != 0, "inverse of zero in F_", p_);
        // extended Euclid
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        require(r == 1, "modulus ", p_, " is not prime (gcd(", v_, ", p) = ", r, ")");
        if (t < 0)
            t += static_cast<long long>(p_);
        return make(p_, static_cast<uint64_t>(t));
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(uint64_t p, uint64_t v)
    {
        Fp f;
        f.p_ = p;
        f.v_ = v;
        return f;
    }
    void match(const Fp& o) const
    {
        require(p_ == o.p_ && p_ != 0, "mixed prime-field moduli: ", p_, " vs ", o.p_);
    }

    uint64_t v_ = 0;
    uint64_t p_ = 0;
};

inline Fp zero_like(const Fp& a) { return Fp(a.modulus(), 0); }
inline Fp one_like(const Fp& a) { return Fp(a.modulus(), 1); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp inv_of(const Fp& a) { return a.inv(); }
inline std::string scalar_str(const Fp& a) { return a.str(); }
inline Fp scalar_from_decimal(const Fp& proto, const std::string& digits)
{
    uint64_t p = proto.modulus();
    unsigned __int128 v = 0;
    for (char c : digits) {
        require(c >= '0' && c <= '9', "bad digit in integer literal");
        v = (v * 10 + static_cast<unsigned>(c - '0')) % p;
    }
    return Fp(p, static_cast<long long>(static_cast<uint64_t>(v)));
}

}  // namespace permrep
