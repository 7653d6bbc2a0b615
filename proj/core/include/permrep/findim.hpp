#pragma once

#include <optional>

#include "permrep/bisym.hpp"
#include "permrep/matrix.hpp"

namespace permrep {

struct FindimResult {
    bool cocycle_ok = false;   // Phi(X,Z) = Phi(X,Y) Phi(Y,Z), Phi(Y,X) = Phi(X,Y)^{-1}
    bool found_point = false;  // a regular integer specialization Y0 exists in the box
    std::vector<long> y0;
    std::optional<Matrix<QFunc>> c;  // C(X) = Phi(X, Y0), entries in the X block only
    bool verified = false; // Phi(X,Y) = C(X) C(Y)^{-1} holds symbolically
    std::string note;
};

// Trivializes a block cocycle over k = Q: Phi is d x d over k(X, Y) with
// X = (x1..xr) and Y = (x_{r+1}..x_{2r}); searches integer points Y0 in an
// expanding box (L-infinity radius doubling up to max_box) where both
// Phi(X, Y0) and Phi(Y0, Z) are regular.
FindimResult trivialize_findim(const Matrix<QFunc>& phi, int r, int max_box = 64);

}  // namespace permrep
