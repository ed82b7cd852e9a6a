#pragma once

#include "gallai/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gallai {

using Color = std::int32_t;

// Color 0 marks an edge that has not been colored yet.
inline constexpr Color kUncolored = 0;

/// Rank of the pair {u,v} (u<v) in the order (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::size_t pair_rank(int n, int u, int v)
{
    if (u > v)
        std::swap(u, v);
    const auto uu = static_cast<std::size_t>(u);
    return uu * (2 * static_cast<std::size_t>(n) - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

/// Total color assignment on the edges of K_n, stored as a flat
/// upper-triangular array in pair-rank order.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int n, int k);
    EdgeColoring(int n, int k, std::vector<Color> edges);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t edge_total() const noexcept { return edges_.size(); }

    Color color(int u, int v) const { return edges_[pair_rank(n_, u, v)]; }
    void set_color(int u, int v, Color c) { edges_[pair_rank(n_, u, v)] = c; }

    const std::vector<Color>& edges() const noexcept { return edges_; }

    /// Every edge carries a color in [1..k].
    bool well_formed() const noexcept;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Color> edges_;
};

struct RainbowWitness {
    int u = 0, v = 0, w = 0;
    Color c_uv = 0, c_uw = 0, c_vw = 0;

    friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

struct Census {
    GallaiSequence sequence;
    // rank_of_color[c] is the position of color c in sequence.counts (index 0 unused).
    std::vector<int> rank_of_color;
};

Census census(const EdgeColoring& c);

/// Lexicographically least rainbow triangle, or nullopt if the coloring is Gallai.
std::optional<RainbowWitness> check_gallai(const EdgeColoring& c);

namespace verify {
    struct Ok {};
    struct Malformed {
        std::string reason;
    };
    struct RainbowFound {
        RainbowWitness witness;
    };
    struct CensusMismatch {
        SequenceKey expected;
        SequenceKey actual;
    };
}

using VerifyResult = std::variant<verify::Ok, verify::Malformed, verify::RainbowFound, verify::CensusMismatch>;

VerifyResult verify_certificate(const EdgeColoring& c, const GallaiSequence& s);

inline bool is_ok(const VerifyResult& r) { return std::holds_alternative<verify::Ok>(r); }
std::string describe(const VerifyResult& r);

/// Fills the first counts[0] edges in pair-rank order with color 1, the next
/// counts[1] with color 2, and so on. Gallai whenever at most two counts are nonzero.
EdgeColoring fill_in_rank_order(int n, std::span<const Count> counts);

} // namespace gallai
