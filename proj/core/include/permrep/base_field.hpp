#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "permrep/common.hpp"

namespace permrep {

// Ground field selector: the rationals or a prime field F_p.
struct BaseField {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;

    static BaseField rationals() { return BaseField{Kind::Rationals, 0}; }
    static BaseField prime(uint64_t p)
    {
        require(p >= 2, "prime field modulus must be >= 2");
        mpz_class z(static_cast<unsigned long>(p));
        require(mpz_probab_prime_p(z.get_mpz_t(), 40) != 0, p, " is not prime");
        return BaseField{Kind::Prime, p};
    }

    bool operator==(const BaseField& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

    std::string str() const
    {
        return kind == Kind::Rationals ? "Q" : cat("F", p);
    }
};

}  // namespace permrep
