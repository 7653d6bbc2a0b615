#include <gmpxx.h>

#include "permrep/poly.hpp"

namespace permrep::detail {

namespace {

uint64_t mod_pow_add_chain(uint64_t base, uint32_t e, uint64_t p)
{
    unsigned __int128 r = 1, b = base % p;
    while (e) {
        if (e & 1u)
            r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1u;
    }
    return static_cast<uint64_t>(r);
}

// f with denominators cleared, coefficients reduced mod p; false if p kills
// the clearing factor.
bool poly_mod_p(const Poly<Rat>& f, uint64_t p, std::vector<std::pair<Mono, uint64_t>>& out)
{
    mpz_class l = 1;
    for (const auto& [m, c] : f.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(l.get_mpz_t(), pz.get_mpz_t()))
        return false;
    out.clear();
    for (const auto& [m, c] : f.terms()) {
        mpz_class z = c.num() * (l / c.den());
        mpz_class r = z % pz;
        if (r < 0)
            r += pz;
        out.emplace_back(m, r.get_ui());
    }
    return true;
}

// Image of f under x_i -> a_i t + b_i over F_p, as dense coefficients in t.
std::vector<uint64_t> line_image(const std::vector<std::pair<Mono, uint64_t>>& terms,
                                 const std::vector<uint64_t>& a,
                                 const std::vector<uint64_t>& b, uint64_t p)
{
    std::vector<uint64_t> acc(1, 0);
    for (const auto& [m, c] : terms) {
        std::vector<uint64_t> t(1, c);
        for (size_t i = 0; i < m.size(); ++i) {
            for (uint32_t e = 0; e < m[i]; ++e) {
                // multiply by (a_i t + b_i)
                std::vector<uint64_t> nt(t.size() + 1, 0);
                for (size_t k = 0; k < t.size(); ++k) {
                    nt[k] = (nt[k] + static_cast<unsigned __int128>(t[k]) * b[i] % p) % p;
                    nt[k + 1] =
                        (nt[k + 1] + static_cast<unsigned __int128>(t[k]) * a[i] % p) % p;
                }
                t = std::move(nt);
            }
        }
        if (acc.size() < t.size())
            acc.resize(t.size(), 0);
        for (size_t k = 0; k < t.size(); ++k)
            acc[k] = (acc[k] + t[k]) % p;
    }
    while (!acc.empty() && acc.back() == 0)
        acc.pop_back();
    return acc;
}

int euclid_gcd_degree(std::vector<uint64_t> f, std::vector<uint64_t> g, uint64_t p)
{
    auto deg = [](const std::vector<uint64_t>& v) { return static_cast<int>(v.size()) - 1; };
    while (!g.empty()) {
        // f mod g
        while (deg(f) >= deg(g)) {
            uint64_t lead = f.back();
            if (lead != 0) {
                uint64_t ginv = mod_pow_add_chain(g.back(), static_cast<uint32_t>(p - 2), p);
                uint64_t q = static_cast<uint64_t>(
                    static_cast<unsigned __int128>(lead) * ginv % p);
                size_t shift = f.size() - g.size();
                for (size_t k = 0; k < g.size(); ++k) {
                    unsigned __int128 sub = static_cast<unsigned __int128>(q) * g[k] % p;
                    f[shift + k] = (f[shift + k] + p - static_cast<uint64_t>(sub)) % p;
                }
            }
            while (!f.empty() && f.back() == 0)
                f.pop_back();
            if (f.empty())
                break;
        }
        std::swap(f, g);
    }
    return deg(f);
}

}  // namespace

std::optional<int> modular_gcd_degree_q(const Poly<Rat>& f, const Poly<Rat>& g)
{
    if (f.is_zero() || g.is_zero())
        return std::nullopt;
    const uint64_t primes[] = {1000003, 2000003};
    uint64_t state = 0x9e3779b97f4a7c15ull ^ (f.terms().size() * 1315423911ull) ^
                     (g.terms().size() * 2654435761ull);
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (uint64_t p : primes) {
        std::vector<std::pair<Mono, uint64_t>> fm, gm;
        if (!poly_mod_p(f, p, fm) || !poly_mod_p(g, p, gm))
            continue;
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::vector<uint64_t> a(f.nvars()), b(f.nvars());
            for (int i = 0; i < f.nvars(); ++i) {
                a[i] = next() % (p - 1) + 1;
                b[i] = next() % p;
            }
            auto fi = line_image(fm, a, b, p);
            auto gi = line_image(gm, a, b, p);
            bool f_full = static_cast<int>(fi.size()) - 1 == f.total_degree();
            bool g_full = static_cast<int>(gi.size()) - 1 == g.total_degree();
            bool usable = (f_full && !gi.empty()) || (g_full && !fi.empty());
            if (!usable)
                continue;
            return euclid_gcd_degree(fi, gi, p);
        }
    }
    return std::nullopt;
}

bool certified_coprime_q(const Poly<Rat>& f, const Poly<Rat>& g)
{
    auto d = modular_gcd_degree_q(f, g);
    return d && *d == 0;
}

}  // namespace permrep::detail
