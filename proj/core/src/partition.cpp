#include "permrep/partition.hpp"

#include <algorithm>
#include <map>

namespace permrep {

bool is_partition(const Partition& p)
{
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

int partition_weight(const Partition& p)
{
    int w = 0;
    for (int x : p)
        w += x;
    return w;
}

std::vector<Partition> partitions_of(int m)
{
    require(m >= 0, "negative weight");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

long long factorial(int m)
{
    long long r = 1;
    for (int i = 2; i <= m; ++i)
        r *= i;
    return r;
}

long long class_size(const Partition& mu)
{
    int m = partition_weight(mu);
    long long z = 1;
    std::map<int, int> mult;
    for (int part : mu)
        ++mult[part];
    for (auto [part, k] : mult) {
        for (int i = 0; i < k; ++i)
            z *= part;
        z *= factorial(k);
    }
    return factorial(m) / z;
}

namespace {

long long mn_value(const Partition& lambda, const Partition& mu,
                   std::map<std::pair<Partition, Partition>, long long>& memo)
{
    if (lambda.empty())
        return 1;  // mu is empty too when weights match
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    const int l = mu.front();
    Partition rest(mu.begin() + 1, mu.end());

    // beta-numbers beta_i = lambda_i + (k-1-i), strictly decreasing
    const int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i)
        beta[i] = lambda[i] + (k - 1 - i);

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[i] - l;
        if (target < 0)
            continue;
        bool occupied = false;
        int crossed = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i)
                continue;
            if (beta[j] == target)
                occupied = true;
            if (beta[j] > target && beta[j] < beta[i])
                ++crossed;
        }
        if (occupied)
            continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition nl;
        for (int j = 0; j < k; ++j) {
            int part = nb[j] - (k - 1 - j);
            if (part > 0)
                nl.push_back(part);
        }
        long long sign = (crossed % 2 == 0) ? 1 : -1;
        total += sign * mn_value(nl, rest, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu)
{
    require(is_partition(lambda) && is_partition(mu), "malformed partition");
    require(partition_weight(lambda) == partition_weight(mu),
            "weight mismatch: |lambda| = ", partition_weight(lambda),
            ", |mu| = ", partition_weight(mu));
    require(partition_weight(lambda) <= 8, "character weight limited to 8");
    static thread_local std::map<std::pair<Partition, Partition>, long long> memo;
    return mn_value(lambda, mu, memo);
}

long long hook_dimension(const Partition& lambda)
{
    require(is_partition(lambda), "malformed partition");
    int m = partition_weight(lambda);
    // conjugate partition
    std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j)
            ++conj[j];
    long long hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= lambda[i] - j + conj[j] - static_cast<int>(i) - 1;
    require(factorial(m) % hooks == 0, "internal error in hook length formula");
    return factorial(m) / hooks;
}

}  // namespace permrep
