#include "permrep/bisym.hpp"

#include <algorithm>
#include <functional>

#include "permrep/parse.hpp"

namespace permrep {

namespace {

std::vector<int> adjacent_swap(int nvars, int i)
{
    std::vector<int> p(nvars);
    for (int k = 0; k < nvars; ++k)
        p[k] = k;
    std::swap(p[i], p[i + 1]);
    return p;
}

void subsets_of(const std::vector<int>& t, int size,
                const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (size_t i = from; i < t.size(); ++i) {
            cur.push_back(t[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

BiSym make_bisym(int m, int n, QFunc f)
{
    require(0 <= m && m <= n, "need 0 <= M <= N, got M = ", m, ", N = ", n);
    require(f.nvars() == n, "expected a function of ", n, " variables");
    for (int i = 0; i + 1 < m; ++i)
        require(permute_vars(f, adjacent_swap(n, i)) == f,
                "not symmetric in the first ", m, " variables (swap at ", i + 1, ")");
    for (int i = m; i + 1 < n; ++i)
        require(permute_vars(f, adjacent_swap(n, i)) == f,
                "not symmetric in the last ", n - m, " variables (swap at ", i + 1, ")");
    return BiSym{m, n, std::move(f)};
}

BiSym bisym_constant_one(int m, int n)
{
    return BiSym{m, n, QFunc::constant(n, Rat(1))};
}

QFunc lift_vars(const QFunc& f, int ambient)
{
    require(ambient >= f.nvars(), "cannot lift into a smaller variable universe");
    if (ambient == f.nvars())
        return f;
    auto pad = [&](const Poly<Rat>& p) {
        Poly<Rat> out(ambient, Rat());
        for (const auto& [mono, c] : p.terms()) {
            Mono m(ambient, 0);
            std::copy(mono.begin(), mono.end(), m.begin());
            out.add_term(m, c);
        }
        return out;
    };
    return QFunc(pad(f.num()), pad(f.den()));
}

QFunc bisym_value(const BiSym& q, const std::vector<int>& j, const std::vector<int>& t,
                  int ambient)
{
    require(static_cast<int>(j.size()) == q.m && static_cast<int>(t.size()) == q.n,
            "argument sizes must be (M, N) = (", q.m, ", ", q.n, ")");
    require(std::includes(t.begin(), t.end(), j.begin(), j.end()), "J must lie inside T");
    std::vector<int> rest;
    std::set_difference(t.begin(), t.end(), j.begin(), j.end(), std::back_inserter(rest));
    QFunc lifted = lift_vars(q.f, ambient);
    std::vector<std::optional<QFunc::SubstTarget>> assign(ambient);
    for (int s = 0; s < q.m; ++s)
        assign[s] = QFunc::SubstTarget(j[s]);
    for (int s = 0; s < q.n - q.m; ++s)
        assign[q.m + s] = QFunc::SubstTarget(rest[s]);
    return lifted.substituted(assign);
}

WeightedElement normalize_weighted(WeightedElement w)
{
    for (auto& [c, sub] : w.terms) {
        std::sort(sub.begin(), sub.end());
        require(std::adjacent_find(sub.begin(), sub.end()) == sub.end(),
                "subobject has repeated points");
        require(static_cast<int>(sub.size()) == w.level, "subobject size differs from level");
    }
    std::sort(w.terms.begin(), w.terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<QFunc, std::vector<int>>> merged;
    for (auto& term : w.terms) {
        if (!merged.empty() && merged.back().second == term.second)
            merged.back().first += term.first;
        else
            merged.push_back(std::move(term));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.first.is_zero(); }),
                 merged.end());
    w.terms = std::move(merged);
    return w;
}

bool operator==(const WeightedElement& a, const WeightedElement& b)
{
    return a.level == b.level && a.terms == b.terms;
}

std::string weighted_str(const WeightedElement& w, int ambient)
{
    if (w.terms.empty())
        return "0";
    auto names = standard_var_names(ambient);
    std::string out;
    for (size_t i = 0; i < w.terms.size(); ++i) {
        if (i)
            out += " + ";
        out += cat("(", w.terms[i].first.str(names), ")*[");
        for (size_t k = 0; k < w.terms[i].second.size(); ++k)
            out += cat(k ? "," : "", w.terms[i].second[k] + 1);
        out += "]";
    }
    return out;
}

WeightedElement hom_apply(const BiSym& q, const WeightedElement& w, int ambient)
{
    require(w.level == q.n, "element level ", w.level, " does not match N = ", q.n);
    for (const auto& [c, sub] : w.terms) {
        require(c.nvars() == ambient, "coefficient lives in the wrong field");
        for (int p : sub)
            require(p >= 0 && p < ambient, "support of the element exceeds the truncation");
    }
    WeightedElement out{q.m, {}};
    for (const auto& [c, sub] : w.terms) {
        subsets_of(sub, q.m, [&](const std::vector<int>& j) {
            out.terms.emplace_back(c * bisym_value(q, j, sub, ambient), j);
        });
    }
    return normalize_weighted(std::move(out));
}

WeightedElement act_on_weighted(const WeightedElement& w, const std::vector<int>& sigma)
{
    WeightedElement out{w.level, {}};
    for (const auto& [c, sub] : w.terms) {
        std::vector<int> img;
        img.reserve(sub.size());
        for (int p : sub)
            img.push_back(sigma[p]);
        out.terms.emplace_back(permute_vars(c, sigma), std::move(img));
    }
    return normalize_weighted(std::move(out));
}

BiSym hom_compose(const BiSym& q, const BiSym& r)
{
    require(q.n == r.m, "weight mismatch: Q expects level ", q.n, ", R produces level ",
            r.m);
    const int big_n = r.n, mid = r.m, low = q.m;
    std::vector<int> t(big_n), j0(low);
    for (int i = 0; i < big_n; ++i)
        t[i] = i;
    for (int i = 0; i < low; ++i)
        j0[i] = i;
    std::vector<int> middle(t.begin() + low, t.end());
    QFunc acc(big_n, Rat());
    // J runs over the size-mid subsets with J0 <= J <= T
    subsets_of(middle, mid - low, [&](const std::vector<int>& extra) {
        std::vector<int> j = j0;
        j.insert(j.end(), extra.begin(), extra.end());
        std::sort(j.begin(), j.end());
        acc += bisym_value(r, j, t, big_n) * bisym_value(q, j0, j, big_n);
    });
    return make_bisym(low, big_n, std::move(acc));
}

}  // namespace permrep
