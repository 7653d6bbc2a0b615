#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "permrep/common.hpp"

namespace permrep {

// Arbitrary-precision rational number, always kept in canonical form
// (lowest terms, positive denominator, zero is 0/1).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rat(long num, long den)
    {
        require(den != 0, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class v) : v_(std::move(v))
    {
        require(sgn(v_.get_den()) != 0, "rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional sign.
    static Rat from_string(const std::string& s)
    {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            fail("cannot parse rational '", s, "'");
        require(sgn(v.get_den()) != 0, "rational with zero denominator: '", s, "'");
        v.canonicalize();
        return Rat(std::move(v), raw_tag{});
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_), raw_tag{}); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), raw_tag{}); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), raw_tag{}); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), raw_tag{}); }
    Rat operator/(const Rat& o) const
    {
        require(!o.is_zero(), "division by zero");
        return Rat(mpq_class(v_ / o.v_), raw_tag{});
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inv() const
    {
        require(!is_zero(), "inverse of zero");
        return Rat(mpq_class(1 / v_), raw_tag{});
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    struct raw_tag {};
    Rat(mpq_class v, raw_tag) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat inv_of(const Rat& a) { return a.inv(); }
inline std::string scalar_str(const Rat& a) { return a.str(); }
inline Rat scalar_from_decimal(const Rat&, const std::string& digits)
{
    return Rat(mpz_class(digits));
}

}  // namespace permrep
