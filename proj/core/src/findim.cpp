#include "permrep/findim.hpp"

namespace permrep {

namespace {

// Relabels the two r-blocks of phi into chosen blocks of a 3r-variable ring.
Matrix<QFunc> block_lift(const Matrix<QFunc>& phi, int r, int block_x, int block_y)
{
    int ambient = 3 * r;
    Matrix<QFunc> out(phi.rows(), phi.cols(), QFunc(ambient, Rat()));
    std::vector<std::optional<QFunc::SubstTarget>> assign(ambient);
    for (int i = 0; i < r; ++i) {
        assign[i] = QFunc::SubstTarget(block_x * r + i);
        assign[r + i] = QFunc::SubstTarget(block_y * r + i);
    }
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.cols(); ++j)
            out.at(i, j) = lift_vars(phi.at(i, j), ambient).substituted(assign);
    return out;
}

// Substitutes rational constants into one block (0 = X block, 1 = Y block).
std::optional<Matrix<QFunc>> substitute_block(const Matrix<QFunc>& phi, int r, int block,
                                              const std::vector<long>& pt)
{
    std::vector<std::optional<QFunc::SubstTarget>> assign(2 * r);
    for (int i = 0; i < r; ++i)
        assign[block * r + i] = QFunc::SubstTarget(Rat(pt[i]));
    Matrix<QFunc> out = phi;
    for (int i = 0; i < phi.rows(); ++i) {
        for (int j = 0; j < phi.cols(); ++j) {
            try {
                out.at(i, j) = phi.at(i, j).substituted(assign);
            } catch (const PoleError&) {
                return std::nullopt;
            }
        }
    }
    return out;
}

}  // namespace

FindimResult trivialize_findim(const Matrix<QFunc>& phi, int r, int max_box)
{
    require(r >= 1, "block size must be positive");
    require(phi.rows() == phi.cols(), "Phi must be square");
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.cols(); ++j)
            require(phi.at(i, j).nvars() == 2 * r, "Phi entries must live in k(X, Y)");

    FindimResult out;

    // symbolic cocycle identities with three independent blocks
    Matrix<QFunc> xy = block_lift(phi, r, 0, 1);
    Matrix<QFunc> yz = block_lift(phi, r, 1, 2);
    Matrix<QFunc> xz = block_lift(phi, r, 0, 2);
    Matrix<QFunc> yx = block_lift(phi, r, 1, 0);
    if (xz != xy * yz) {
        out.note = "cocycle identity Phi(X,Z) = Phi(X,Y) Phi(Y,Z) fails";
        return out;
    }
    auto xy_inv = inverse(xy);
    if (!xy_inv || yx != *xy_inv) {
        out.note = "inversion identity Phi(Y,X) = Phi(X,Y)^{-1} fails";
        return out;
    }
    out.cocycle_ok = true;

    // expanding-box search for a regular integer point Y0
    for (int box = 1; box <= max_box && !out.found_point; box *= 2) {
        std::vector<long> pt(r, -box);
        for (;;) {
            long linf = 0;
            for (long x : pt)
                linf = std::max(linf, std::abs(x));
            bool fresh_shell = (box == 1) || (linf > box / 2);
            if (fresh_shell) {
                auto cx = substitute_block(phi, r, 1, pt);  // Phi(X, Y0)
                auto cz = substitute_block(phi, r, 0, pt);  // Phi(Y0, Z)
                if (cx && cz) {
                    out.found_point = true;
                    out.y0 = pt;
                    out.c = *cx;
                    break;
                }
            }
            int i = r - 1;
            while (i >= 0 && pt[i] == box)
                pt[i--] = -box;
            if (i < 0)
                break;
            ++pt[i];
        }
    }
    if (!out.found_point) {
        out.note = cat("no regular integer point found within the box [-", max_box, ", ",
                       max_box, "]^", r);
        return out;
    }

    // verify Phi(X,Y) = C(X) C(Y)^{-1} symbolically in the 2r-variable ring
    std::vector<int> swap_blocks(2 * r);
    for (int i = 0; i < r; ++i) {
        swap_blocks[i] = r + i;
        swap_blocks[r + i] = i;
    }
    Matrix<QFunc> cy = *out.c;
    for (int i = 0; i < cy.rows(); ++i)
        for (int j = 0; j < cy.cols(); ++j)
            cy.at(i, j) = permute_vars(out.c->at(i, j), swap_blocks);
    auto cy_inv = inverse(cy);
    if (!cy_inv) {
        out.note = "specialized matrix C(Y0) is singular";
        return out;
    }
    out.verified = (phi == *out.c * *cy_inv);
    if (!out.verified)
        out.note = "transformed cocycle is not the identity";
    return out;
}

}  // namespace permrep
