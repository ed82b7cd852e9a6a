#pragma once

// Reference implementations used only as ground truth by the tests. They share
// no code with the library beyond the plain data types.

#include "gallai/coloring.hpp"
#include "gallai/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace oracle {

using gallai::Count;

inline Count choose2(Count m) { return m * (m - 1) / 2; }

/// Number of partitions of m into exactly k positive parts:
/// p(m,k) = p(m-1,k-1) + p(m-k,k).
inline std::int64_t partitions_exactly(int m, int k)
{
    std::vector<std::vector<std::int64_t>> p(static_cast<std::size_t>(m) + 1,
                                             std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
    p[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                p[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
    return p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

/// Plain triple loop over all triangles, colors read from the raw edge array.
inline bool has_rainbow(int n, const std::vector<gallai::Color>& edges)
{
    auto at = [&](int u, int v) {
        // rank of (u,v), u < v, computed from scratch
        int r = 0;
        for (int a = 0; a < u; ++a)
            r += n - 1 - a;
        return edges[static_cast<std::size_t>(r + (v - u - 1))];
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const auto x = at(a, b), y = at(a, c), z = at(b, c);
                if (x != y && y != z && x != z)
                    return true;
            }
    return false;
}

/// Sorted nonzero class sizes of an edge array.
inline std::vector<Count> class_sizes(const std::vector<gallai::Color>& edges)
{
    std::map<gallai::Color, Count> m;
    for (auto c : edges)
        ++m[c];
    std::vector<Count> out;
    for (const auto& [c, v] : m)
        out.push_back(v);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline std::vector<Count> strip(std::vector<Count> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

/// Recursive cut search over (component multiset, residual multiset) that
/// always splits a largest component. Returns the lowest stopping point:
/// 1 when some branch decomposes everything, else the least stuck size.
class CutReference {
public:
    int lowest(int n, std::vector<Count> residual)
    {
        return visit({n}, strip(std::move(residual)));
    }

private:
    using State = std::pair<std::vector<int>, std::vector<Count>>;
    std::map<State, int> memo_;

    int visit(std::vector<int> comps, std::vector<Count> residual)
    {
        comps.erase(std::remove(comps.begin(), comps.end(), 1), comps.end());
        std::sort(comps.begin(), comps.end(), std::greater<>());
        residual = strip(residual);
        if (comps.empty())
            return 1;
        State key{comps, residual};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const int a = comps.front();
        int best = a; // stuck here unless some cut is fundable
        bool any = false;
        for (int a1 = 1; a1 <= a / 2; ++a1)
            for (std::size_t i = 0; i < residual.size(); ++i) {
                const Count cost = static_cast<Count>(a1) * (a - a1);
                if (residual[i] < cost)
                    continue;
                auto next_comps = comps;
                next_comps.erase(next_comps.begin());
                next_comps.push_back(a1);
                next_comps.push_back(a - a1);
                auto next_res = residual;
                next_res[i] -= cost;
                const int r = visit(next_comps, next_res);
                best = any ? std::min(best, r) : r;
                any = true;
            }
        memo_[key] = best;
        return best;
    }
};

} // namespace oracle
