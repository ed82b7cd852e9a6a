#include "gallai/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gallai {

EdgeColoring::EdgeColoring(int n, int k)
    : n_(n), k_(k), edges_(static_cast<std::size_t>(edge_count(n)), kUncolored)
{
}

EdgeColoring::EdgeColoring(int n, int k, std::vector<Color> edges) : n_(n), k_(k), edges_(std::move(edges))
{
    if (edges_.size() != static_cast<std::size_t>(edge_count(n)))
        throw std::invalid_argument("edge array has " + std::to_string(edges_.size()) + " entries, K_" +
                                    std::to_string(n) + " needs " + std::to_string(edge_count(n)));
}

bool EdgeColoring::well_formed() const noexcept
{
    if (n_ < 1 || k_ < 1 || edges_.size() != static_cast<std::size_t>(n_) * (n_ - 1) / 2)
        return false;
    return std::all_of(edges_.begin(), edges_.end(), [this](Color c) { return c >= 1 && c <= k_; });
}

Census census(const EdgeColoring& c)
{
    std::vector<Count> by_color(static_cast<std::size_t>(c.k()) + 1, 0);
    for (Color col : c.edges())
        if (col >= 1 && col <= c.k())
            ++by_color[static_cast<std::size_t>(col)];

    std::vector<int> order(static_cast<std::size_t>(c.k()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return by_color[a] > by_color[b]; });

    Census out;
    out.sequence.n = c.n();
    out.rank_of_color.assign(static_cast<std::size_t>(c.k()) + 1, -1);
    for (std::size_t r = 0; r < order.size(); ++r) {
        out.sequence.counts.push_back(by_color[static_cast<std::size_t>(order[r])]);
        out.rank_of_color[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    }
    return out;
}

std::optional<RainbowWitness> check_gallai(const EdgeColoring& c)
{
    const int n = c.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Color uv = c.color(u, v);
            for (int w = v + 1; w < n; ++w) {
                const Color uw = c.color(u, w);
                if (uw == uv)
                    continue;
                const Color vw = c.color(v, w);
                if (vw != uv && vw != uw)
                    return RainbowWitness{u, v, w, uv, uw, vw};
            }
        }
    return std::nullopt;
}

VerifyResult verify_certificate(const EdgeColoring& c, const GallaiSequence& s)
{
    if (c.n() != s.n)
        return verify::Malformed{"certificate is on K_" + std::to_string(c.n()) + " but the sequence is for K_" +
                                 std::to_string(s.n)};
    if (!c.well_formed())
        return verify::Malformed{"some edge is uncolored or carries a color outside [1.." + std::to_string(c.k()) + "]"};
    if (auto w = check_gallai(c))
        return verify::RainbowFound{*w};
    auto expected = canonical_key(s);
    auto actual = canonical_key(census(c).sequence);
    if (expected != actual)
        return verify::CensusMismatch{std::move(expected), std::move(actual)};
    return verify::Ok{};
}

std::string describe(const VerifyResult& r)
{
    struct {
        std::string operator()(const verify::Ok&) const { return "OK"; }
        std::string operator()(const verify::Malformed& m) const { return "malformed certificate: " + m.reason; }
        std::string operator()(const verify::RainbowFound& f) const
        {
            const auto& w = f.witness;
            return "rainbow triangle (" + std::to_string(w.u) + "," + std::to_string(w.v) + "," + std::to_string(w.w) +
                   ") with colors " + std::to_string(w.c_uv) + "," + std::to_string(w.c_uw) + "," +
                   std::to_string(w.c_vw);
        }
        std::string operator()(const verify::CensusMismatch& m) const
        {
            return "census mismatch: expected " + format_counts(m.expected.parts) + ", certificate has " +
                   format_counts(m.actual.parts);
        }
    } visitor;
    return std::visit(visitor, r);
}

EdgeColoring fill_in_rank_order(int n, std::span<const Count> counts)
{
    std::vector<Color> edges;
    edges.reserve(static_cast<std::size_t>(edge_count(n)));
    for (std::size_t i = 0; i < counts.size(); ++i)
        edges.insert(edges.end(), static_cast<std::size_t>(counts[i]), static_cast<Color>(i + 1));
    return EdgeColoring(n, static_cast<int>(counts.size()), std::move(edges));
}

} // namespace gallai
