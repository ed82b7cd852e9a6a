#include "gallai/cut_engine.hpp"

#include "gallai/bounds.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace gallai {

std::string_view strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::greedy_largest: return "greedy_largest";
    case Strategy::star_first: return "star_first";
    case Strategy::halving: return "halving";
    case Strategy::paper_order: return "paper_order";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name)
{
    for (Strategy s : {Strategy::greedy_largest, Strategy::star_first, Strategy::halving, Strategy::paper_order})
        if (strategy_name(s) == name)
            return s;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> CutTrace::parent(std::size_t index) const
{
    const int depth = nodes.at(index).depth;
    for (std::size_t i = index; i-- > 0;)
        if (nodes[i].depth == depth - 1)
            return i;
    return std::nullopt;
}

std::vector<std::size_t> CutTrace::path_to(std::size_t leaf) const
{
    std::vector<std::size_t> path{leaf};
    while (auto p = parent(path.back()))
        path.push_back(*p);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Cut> CutTrace::cuts_to(std::size_t leaf) const
{
    std::vector<Cut> cuts;
    for (std::size_t i : path_to(leaf))
        if (nodes[i].via)
            cuts.push_back(*nodes[i].via);
    return cuts;
}

std::optional<std::size_t> CutTrace::success_leaf() const
{
    for (std::size_t i = nodes.size(); i-- > 0;)
        if (nodes[i].components.empty())
            return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

    struct VectorHash {
        std::size_t operator()(const std::vector<Count>& v) const noexcept
        {
            std::size_t h = v.size();
            for (Count c : v)
                h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    struct Choice {
        int first;
        int color; // 0-based
    };

    std::vector<Choice> ordered_choices(int a, const std::vector<Count>& residual, Strategy strategy)
    {
        const int colors = static_cast<int>(residual.size());
        std::vector<int> by_index(static_cast<std::size_t>(colors));
        std::iota(by_index.begin(), by_index.end(), 0);

        std::vector<Choice> out;
        auto legal = [&](int a1, int c) { return static_cast<Count>(a1) * (a - a1) <= residual[static_cast<std::size_t>(c)]; };

        switch (strategy) {
        case Strategy::greedy_largest:
        case Strategy::halving: {
            auto order = by_index;
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return residual[static_cast<std::size_t>(x)] > residual[static_cast<std::size_t>(y)]; });
            for (int c : order)
                for (int a1 = a / 2; a1 >= 1; --a1)
                    if (legal(a1, c))
                        out.push_back({a1, c});
            break;
        }
        case Strategy::paper_order:
            for (int c : by_index)
                for (int a1 = a / 2; a1 >= 1; --a1)
                    if (legal(a1, c))
                        out.push_back({a1, c});
            break;
        case Strategy::star_first: {
            // best fit: the smallest residual that still pays for the cut
            auto order = by_index;
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return residual[static_cast<std::size_t>(x)] < residual[static_cast<std::size_t>(y)]; });
            for (int a1 = 1; a1 <= a / 2; ++a1)
                for (int c : order)
                    if (legal(a1, c))
                        out.push_back({a1, c});
            break;
        }
        }
        return out;
    }

    void insert_sorted_desc(std::vector<int>& comps, int size)
    {
        if (size <= 1)
            return;
        comps.insert(std::upper_bound(comps.begin(), comps.end(), size, std::greater<>()), size);
    }

    /// Depth-first search over the branch tree. Components are unlabeled
    /// sizes; the residual is indexed like the input sequence.
    class CutSearch {
    public:
        CutSearch(Strategy strategy, std::size_t budget, bool record, bool dedupe)
            : strategy_(strategy), budget_(budget), record_(record), dedupe_(dedupe)
        {
        }

        enum class Outcome { success, irreducible, budget };

        Outcome run(std::vector<int> components, std::vector<Count> residual)
        {
            std::sort(components.begin(), components.end(), std::greater<>());
            components.erase(std::remove_if(components.begin(), components.end(), [](int c) { return c <= 1; }),
                             components.end());
            try {
                if (visit(components, residual, 0, std::nullopt))
                    return Outcome::success;
            }
            catch (const SearchBudgetExceeded&) {
                return Outcome::budget;
            }
            return Outcome::irreducible;
        }

        std::vector<Cut> success_path;
        std::vector<Cut> stuck_path;
        std::vector<Count> stuck_residual;
        std::optional<std::size_t> stuck_node;
        int min_stuck = 0;
        std::size_t nodes = 0;
        CutTrace trace;

    private:
        bool visit(std::vector<int>& comps, std::vector<Count>& residual, int depth, std::optional<Cut> via)
        {
            if (++nodes > budget_)
                throw SearchBudgetExceeded(nodes - 1);
            if (record_)
                trace.nodes.push_back({depth, comps, residual, via});
            if (via)
                path_.push_back(*via);

            bool done = false;
            if (comps.empty()) {
                success_path = path_;
                done = true;
            }
            else if (dedupe_ && !remember(comps, residual)) {
                done = false;
            }
            else {
                const int a = comps.front();
                auto choices = ordered_choices(a, residual, strategy_);
                if (choices.empty()) {
                    if (min_stuck == 0 || a < min_stuck) {
                        min_stuck = a;
                        stuck_path = path_;
                        stuck_residual = residual;
                        if (record_)
                            stuck_node = trace.nodes.size() - 1;
                    }
                }
                for (const auto& ch : choices) {
                    const int a2 = a - ch.first;
                    const Count cost = static_cast<Count>(ch.first) * a2;
                    auto child = comps;
                    child.erase(child.begin());
                    insert_sorted_desc(child, ch.first);
                    insert_sorted_desc(child, a2);
                    residual[static_cast<std::size_t>(ch.color)] -= cost;
                    const bool ok = visit(child, residual, depth + 1, Cut{a, ch.first, a2, ch.color + 1});
                    residual[static_cast<std::size_t>(ch.color)] += cost;
                    if (ok) {
                        done = true;
                        break;
                    }
                }
            }
            if (via)
                path_.pop_back();
            return done;
        }

        // Colors are interchangeable for solvability, so states are keyed on
        // the sorted residual.
        bool remember(const std::vector<int>& comps, const std::vector<Count>& residual)
        {
            std::vector<Count> key(comps.begin(), comps.end());
            key.push_back(-1);
            auto tail = residual;
            std::sort(tail.begin(), tail.end(), std::greater<>());
            key.insert(key.end(), tail.begin(), tail.end());
            return seen_.insert(std::move(key)).second;
        }

        Strategy strategy_;
        std::size_t budget_;
        bool record_;
        bool dedupe_;
        std::vector<Cut> path_;
        std::unordered_set<std::vector<Count>, VectorHash> seen_;
    };

    IrreducibleReport make_irreducible(CutSearch& search)
    {
        IrreducibleReport r;
        r.stuck_size = search.min_stuck;
        r.stuck_residual = search.stuck_residual;
        r.path_to_stuck = search.stuck_path;
        r.trace = std::move(search.trace);
        r.stuck_node = search.stuck_node;
        r.nodes_explored = search.nodes;
        return r;
    }

    std::optional<int> known_g(int j)
    {
        switch (j) {
        case 3: return 5;
        case 4: return 8;
        case 5: return 10;
        default: return std::nullopt;
        }
    }

    CutResult run_halving(const GallaiSequence& s, const CutOptions& options)
    {
        const int k = static_cast<int>(s.k());
        if (k % 2 == 0 || k < 3)
            return Refused{"halving needs an odd number of colors k = 2j-1"};
        const int j = (k + 1) / 2;
        const auto g = known_g(j);
        if (!g)
            return Refused{"halving needs g(j) for j = " + std::to_string(j) + ", known only for j in {3,4,5}"};
        if (s.n != 2 * *g)
            return Refused{"halving needs n = 2g(j) = " + std::to_string(2 * *g)};
        const Count half_cost = static_cast<Count>(*g) * *g;
        if (s.counts.front() < half_cost)
            return Refused{"halving needs e_1 >= g(j)^2 = " + std::to_string(half_cost)};

        auto residual = s.counts;
        residual[0] -= half_cost;

        // Rank colors by what is left; even ranks go to one copy, odd ranks
        // (from the third) to the other, the top color fills both.
        std::vector<int> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return residual[x] > residual[y]; });

        const Count half_edges = edge_count(*g);
        std::vector<Count> allot_a(static_cast<std::size_t>(k), 0), allot_b(static_cast<std::size_t>(k), 0);
        Count sum_a = 0, sum_b = 0;
        for (int r = 1; r < k; ++r) {
            const auto c = static_cast<std::size_t>(order[static_cast<std::size_t>(r)]);
            if (r % 2 == 1) {
                allot_a[c] = residual[c];
                sum_a += residual[c];
            }
            else {
                allot_b[c] = residual[c];
                sum_b += residual[c];
            }
        }
        const auto top = static_cast<std::size_t>(order[0]);
        const Count fill_a = half_edges - sum_a, fill_b = half_edges - sum_b;
        if (fill_a < 0 || fill_b < 0 || fill_a + fill_b != residual[top])
            throw std::logic_error("halving allotment does not balance");
        allot_a[top] = fill_a;
        allot_b[top] = fill_b;

        CutTrace trace;
        const bool record = options.trace == TraceMode::full;
        const Cut halving_cut{s.n, *g, *g, static_cast<int>(1)};
        if (record) {
            trace.nodes.push_back({0, {s.n}, s.counts, std::nullopt});
            trace.nodes.push_back({1, {*g, *g}, residual, halving_cut});
        }
        std::size_t nodes = 2;
        std::vector<Cut> path{halving_cut};

        // copy A first, with copy B's budget parked in the residual
        CutSearch first(Strategy::greedy_largest, options.budget, record, options.dedupe_states);
        auto outcome = first.run({*g}, allot_a);
        nodes += first.nodes;
        if (outcome == CutSearch::Outcome::budget)
            return BudgetExhausted{nodes};
        if (outcome == CutSearch::Outcome::irreducible)
            return Refused{"first half " + to_string(GallaiSequence{*g, allot_a}) + " is not cut-colorable"};
        int leaf_depth = 1;
        if (record) {
            for (auto& node : first.trace.nodes) {
                if (node.depth == 0)
                    continue;
                node.depth += 1;
                insert_sorted_desc(node.components, *g);
                for (std::size_t c = 0; c < node.residual.size(); ++c)
                    node.residual[c] += allot_b[c];
                leaf_depth = node.depth;
                trace.nodes.push_back(std::move(node));
            }
        }
        path.insert(path.end(), first.success_path.begin(), first.success_path.end());

        CutSearch second(Strategy::greedy_largest, options.budget, record, options.dedupe_states);
        outcome = second.run({*g}, allot_b);
        nodes += second.nodes;
        if (outcome == CutSearch::Outcome::budget)
            return BudgetExhausted{nodes};
        if (outcome == CutSearch::Outcome::irreducible)
            return Refused{"second half " + to_string(GallaiSequence{*g, allot_b}) + " is not cut-colorable"};
        if (record) {
            for (auto& node : second.trace.nodes) {
                if (node.depth == 0)
                    continue;
                node.depth += leaf_depth;
                trace.nodes.push_back(std::move(node));
            }
        }
        path.insert(path.end(), second.success_path.begin(), second.success_path.end());

        CutSuccess ok;
        ok.coloring = materialize(s.n, k, path);
        ok.trace = std::move(trace);
        ok.path = std::move(path);
        ok.nodes_explored = nodes;
        return ok;
    }

} // namespace

CutResult run_cut_algorithm(const GallaiSequence& s, const CutOptions& options)
{
    if (s.counts.empty())
        return Refused{"empty sequence"};
    if (options.strategy == Strategy::halving)
        return run_halving(s, options);

    CutSearch search(options.strategy, options.budget, options.trace == TraceMode::full, options.dedupe_states);
    switch (search.run({s.n}, s.counts)) {
    case CutSearch::Outcome::success: {
        CutSuccess ok;
        ok.coloring = materialize(s.n, static_cast<int>(s.k()), search.success_path);
        ok.path = std::move(search.success_path);
        ok.trace = std::move(search.trace);
        ok.nodes_explored = search.nodes;
        return ok;
    }
    case CutSearch::Outcome::budget: return BudgetExhausted{search.nodes};
    case CutSearch::Outcome::irreducible: break;
    }
    return make_irreducible(search);
}

StoppingPoint lowest_stopping_point(const GallaiSequence& s, std::size_t budget)
{
    CutSearch search(Strategy::greedy_largest, budget, false, true);
    switch (search.run({s.n}, s.counts)) {
    case CutSearch::Outcome::success: return {1, search.nodes};
    case CutSearch::Outcome::budget: throw SearchBudgetExceeded(search.nodes);
    case CutSearch::Outcome::irreducible: break;
    }
    return {search.min_stuck, search.nodes};
}

// ---------------------------------------------------------------------------

LargeResult construct_large_n(const GallaiSequence& s, int k, std::size_t budget)
{
    if (k < 2)
        return Refused{"k must be at least 2"};
    if (static_cast<int>(s.nonzero()) != k)
        return Refused{"sequence has " + std::to_string(s.nonzero()) + " nonzero colors, expected " + std::to_string(k)};

    LargeSchedule plan;
    const auto ub = upper_bound_n0(k);
    plan.n0 = static_cast<int>(ub.n0);
    plan.threshold = static_cast<int>(ub.n);
    plan.surplus_needed = (3 * static_cast<Count>(k) * k - 7 * static_cast<Count>(k) + 2) / 2;
    if (s.n < plan.threshold)
        return Refused{"n = " + std::to_string(s.n) + " is below the schedule threshold 2k(n0+1) = " +
                       std::to_string(plan.threshold)};

    const auto colors = s.counts.size();
    std::vector<Count> residual = s.counts;
    std::vector<Cut> path;
    CutTrace trace;
    trace.nodes.push_back({0, {s.n}, residual, std::nullopt});

    int a = s.n;
    const int two_k = 2 * k;
    for (int j = plan.n0; j >= 1; --j) {
        while (j >= 2 ? a >= two_k * j : a > two_k) {
            const Count cost = static_cast<Count>(j) * (a - j);
            const auto best = static_cast<std::size_t>(std::max_element(residual.begin(), residual.end()) - residual.begin());
            if (residual[best] < cost)
                throw std::logic_error("peel of K_" + std::to_string(j) + " from K_" + std::to_string(a) +
                                       " is unfunded; the peeling guarantee was violated");
            residual[best] -= cost;
            Cut cut{a, j, a - j, static_cast<int>(best) + 1};
            path.push_back(cut);
            a -= j;
            plan.blocks.push_back(j);
            plan.surplus += edge_count(j);
            std::vector<int> comps;
            comps.push_back(a);
            for (int b : plan.blocks)
                insert_sorted_desc(comps, b);
            trace.nodes.push_back({static_cast<int>(path.size()), comps, residual, cut});
        }
    }

    std::vector<int> comps{a};
    comps.insert(comps.end(), plan.blocks.begin(), plan.blocks.end());
    CutSearch finish(Strategy::greedy_largest, budget, true, true);
    const auto outcome = finish.run(comps, residual);
    const std::size_t nodes = path.size() + finish.nodes;
    if (outcome == CutSearch::Outcome::budget)
        return BudgetExhausted{nodes};
    const int base_depth = static_cast<int>(path.size());
    for (auto& node : finish.trace.nodes) {
        if (node.depth == 0)
            continue;
        node.depth += base_depth;
        trace.nodes.push_back(std::move(node));
    }
    if (outcome == CutSearch::Outcome::irreducible) {
        auto report = make_irreducible(finish);
        report.trace = std::move(trace);
        report.stuck_node.reset();
        path.insert(path.end(), report.path_to_stuck.begin(), report.path_to_stuck.end());
        report.path_to_stuck = std::move(path);
        report.nodes_explored = nodes;
        return report;
    }
    path.insert(path.end(), finish.success_path.begin(), finish.success_path.end());

    LargeSuccess out;
    out.schedule = std::move(plan);
    out.result.coloring = materialize(s.n, static_cast<int>(colors), path);
    out.result.path = std::move(path);
    out.result.trace = std::move(trace);
    out.result.nodes_explored = nodes;
    return out;
}

// ---------------------------------------------------------------------------

EdgeColoring materialize(int n, int k, const std::vector<Cut>& cuts)
{
    EdgeColoring out(n, k);
    std::vector<std::vector<int>> groups(1);
    groups[0].resize(static_cast<std::size_t>(n));
    std::iota(groups[0].begin(), groups[0].end(), 0);

    for (const auto& cut : cuts) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return static_cast<int>(g.size()) == cut.component; });
        if (it == groups.end() || cut.first + cut.second != cut.component || cut.first < 1 || cut.second < 1)
            throw std::invalid_argument("cut K_" + std::to_string(cut.component) + " -> " + std::to_string(cut.first) +
                                        "+" + std::to_string(cut.second) + " does not apply");
        std::vector<int> whole = std::move(*it);
        groups.erase(it);
        std::sort(whole.begin(), whole.end());
        std::vector<int> left(whole.begin(), whole.begin() + cut.first);
        std::vector<int> right(whole.begin() + cut.first, whole.end());
        for (int u : left)
            for (int v : right)
                out.set_color(u, v, cut.color);
        if (left.size() > 1)
            groups.push_back(std::move(left));
        if (right.size() > 1)
            groups.push_back(std::move(right));
    }
    return out;
}

EdgeColoring replay(const CutTrace& trace, int n, int k)
{
    const auto leaf = trace.success_leaf();
    if (!leaf)
        throw std::invalid_argument("trace has no fully decomposed node");
    return materialize(n, k, trace.cuts_to(*leaf));
}

// ---------------------------------------------------------------------------

std::string format_trace(const CutTrace& trace)
{
    std::ostringstream out;
    for (const auto& node : trace.nodes) {
        out << node.depth << " | {";
        for (std::size_t i = 0; i < node.components.size(); ++i)
            out << (i ? "," : "") << node.components[i];
        out << "} | (" << format_counts(node.residual) << ") | ";
        if (node.via)
            out << "cut(" << node.via->component << "->" << node.via->first << "+" << node.via->second << ", color "
                << node.via->color << ")";
        else
            out << "root";
        out << '\n';
    }
    return out.str();
}

namespace {

    std::string trim(std::string_view s)
    {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\r'))
            s.remove_suffix(1);
        return std::string(s);
    }

    std::vector<int> parse_ints(const std::string& inner)
    {
        std::vector<int> out;
        if (inner.empty())
            return out;
        for (Count c : parse_counts(inner))
            out.push_back(static_cast<int>(c));
        return out;
    }

} // namespace

CutTrace parse_trace(std::istream& in)
{
    CutTrace trace;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            auto bar = line.find('|', pos);
            fields.push_back(trim(std::string_view(line).substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
            if (bar == std::string::npos)
                break;
            pos = bar + 1;
        }
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("trace line " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() != 4)
            throw fail("expected 4 fields");
        TraceNode node;
        node.depth = std::stoi(fields[0]);
        const auto& s = fields[1];
        const auto& r = fields[2];
        if (s.size() < 2 || s.front() != '{' || s.back() != '}')
            throw fail("bad component multiset");
        if (r.size() < 2 || r.front() != '(' || r.back() != ')')
            throw fail("bad residual");
        node.components = parse_ints(s.substr(1, s.size() - 2));
        node.residual = r.size() > 2 ? parse_counts(r.substr(1, r.size() - 2)) : std::vector<Count>{};
        if (fields[3] != "root") {
            Cut cut;
            if (std::sscanf(fields[3].c_str(), "cut(%d->%d+%d, color %d)", &cut.component, &cut.first, &cut.second,
                            &cut.color) != 4)
                throw fail("bad cut field");
            node.via = cut;
        }
        trace.nodes.push_back(std::move(node));
    }
    return trace;
}

// ---------------------------------------------------------------------------

bool peel_always_funded(Count n, Count k, Count j)
{
    const __int128 lhs = static_cast<__int128>(edge_count(n));
    const __int128 rhs = static_cast<__int128>(k) * j * (n - j);
    return lhs >= rhs;
}

Count ceil_average_at_star_threshold(Count k)
{
    const Count e = edge_count(2 * k - 1);
    return (e + k - 1) / k;
}

} // namespace gallai
