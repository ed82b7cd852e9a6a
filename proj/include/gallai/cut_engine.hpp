#pragma once

#include "gallai/coloring.hpp"
#include "gallai/sequence.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gallai {

enum class Strategy { greedy_largest, star_first, halving, paper_order };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// One cut: a component K_a split into K_first and K_second (first <= second
/// for ordinary cuts), every cross edge colored `color` (1-based index into
/// the residual sequence).
struct Cut {
    int component = 0;
    int first = 0;
    int second = 0;
    int color = 0;

    Count cost() const { return static_cast<Count>(first) * second; }
    friend bool operator==(const Cut&, const Cut&) = default;
};

struct TraceNode {
    int depth = 0;
    std::vector<int> components; // sizes > 1, non-increasing
    std::vector<Count> residual; // indexed like the input sequence
    std::optional<Cut> via;      // cut that produced this node from its parent

    friend bool operator==(const TraceNode&, const TraceNode&) = default;
};

/// Branch tree in DFS pre-order. A node's parent is the nearest earlier node
/// one level shallower.
struct CutTrace {
    std::vector<TraceNode> nodes;

    std::optional<std::size_t> parent(std::size_t index) const;
    /// Indices from the root down to `leaf`.
    std::vector<std::size_t> path_to(std::size_t leaf) const;
    /// Cuts along the path from the root down to `leaf`.
    std::vector<Cut> cuts_to(std::size_t leaf) const;
    /// Index of the fully decomposed node, if the trace contains one.
    std::optional<std::size_t> success_leaf() const;
};

enum class TraceMode { none, full };

struct CutOptions {
    Strategy strategy = Strategy::greedy_largest;
    std::size_t budget = 1'000'000; // tree nodes
    TraceMode trace = TraceMode::full;
    bool dedupe_states = true;
};

struct CutSuccess {
    EdgeColoring coloring;
    CutTrace trace;
    std::vector<Cut> path;
    std::size_t nodes_explored = 0;
};

/// Every explored branch got stuck. stuck_size is the smallest K_a at which a
/// branch became irreducible.
struct IrreducibleReport {
    int stuck_size = 0;
    std::vector<Count> stuck_residual;
    std::vector<Cut> path_to_stuck;
    CutTrace trace;
    std::optional<std::size_t> stuck_node;
    std::size_t nodes_explored = 0;
};

struct BudgetExhausted {
    std::size_t nodes_explored = 0;
};

struct Refused {
    std::string reason;
};

using CutResult = std::variant<CutSuccess, IrreducibleReport, BudgetExhausted, Refused>;

CutResult run_cut_algorithm(const GallaiSequence& s, const CutOptions& options = {});

class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(std::size_t nodes)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes)
    {
    }
    std::size_t nodes() const noexcept { return nodes_; }

private:
    std::size_t nodes_;
};

struct StoppingPoint {
    int p = 1;
    std::size_t nodes_explored = 0;
};

/// 1 if some branch decomposes K_n completely, otherwise the smallest stuck
/// component size over all branches. Throws SearchBudgetExceeded.
StoppingPoint lowest_stopping_point(const GallaiSequence& s, std::size_t budget = 1'000'000);

struct LargeSchedule {
    int n0 = 0;
    int threshold = 0;     // 2k(n0+1)
    Count surplus = 0;     // internal edges of the peeled blocks
    Count surplus_needed = 0;
    std::vector<int> blocks;
};

struct LargeSuccess {
    CutSuccess result;
    LargeSchedule schedule;
};

using LargeResult = std::variant<LargeSuccess, IrreducibleReport, BudgetExhausted, Refused>;

/// Peels K_j blocks for j = n0..1 while the peel is guaranteed fundable, then
/// finishes K_{2k} and the blocks with the cut search.
LargeResult construct_large_n(const GallaiSequence& s, int k, std::size_t budget = 1'000'000);

/// Applies cuts in order to concrete vertex sets. Each cut takes the first
/// live component of the stated size and gives its lowest indices to `first`.
EdgeColoring materialize(int n, int k, const std::vector<Cut>& cuts);

/// Rebuilds the coloring of the success branch recorded in a trace.
EdgeColoring replay(const CutTrace& trace, int n, int k);

std::string format_trace(const CutTrace& trace);
CutTrace parse_trace(std::istream& in);

// Peeling arithmetic: C(n,2) >= k j(n-j), so the largest color of any
// (n,k)-sequence can fund removing a K_j.
bool peel_always_funded(Count n, Count k, Count j);
// ceil(C(2k-1,2)/k)
Count ceil_average_at_star_threshold(Count k);

} // namespace gallai
