#include "gallai/exact.hpp"

#include "gallai/cut_engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace gallai {

std::size_t CountsHash::operator()(const std::vector<Count>& v) const noexcept
{
    std::size_t h = v.size();
    for (Count c : v)
        h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------------------
// MemoStore

std::optional<MemoStore::Entry> MemoStore::find(const SequenceKey& key) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void MemoStore::insert(const SequenceKey& key, Entry entry)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, entry);
    if (!inserted && (entry.witness || !it->second.witness))
        it->second = std::move(entry);
}

std::size_t MemoStore::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void MemoStore::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

void MemoStore::save(std::ostream& out) const
{
    std::map<SequenceKey, Answer> sorted;
    {
        std::shared_lock lock(mutex_);
        for (const auto& [key, entry] : entries_)
            sorted.emplace(key, entry.answer);
    }
    out << format_tag << '\n';
    for (const auto& [key, answer] : sorted)
        out << to_string(key) << ' ' << (answer == Answer::yes ? "YES" : "NO") << '\n';
}

std::optional<std::string> MemoStore::load(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != format_tag)
        return "missing or mismatched format tag (want '" + std::string(format_tag) + "')";

    std::vector<std::pair<SequenceKey, Answer>> parsed;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto colon = line.find(':');
        const auto space = line.rfind(' ');
        if (colon == std::string::npos || space == std::string::npos || space < colon)
            return "line " + std::to_string(lineno) + " is malformed";
        try {
            SequenceKey key;
            key.n = std::stoi(line.substr(0, colon));
            const auto body = line.substr(colon + 1, space - colon - 1);
            if (!body.empty())
                key.parts = parse_counts(body);
            const auto verdict = line.substr(space + 1);
            if (verdict != "YES" && verdict != "NO")
                return "line " + std::to_string(lineno) + " has verdict '" + verdict + "'";
            Count sum = 0;
            for (Count c : key.parts) {
                if (c <= 0)
                    return "line " + std::to_string(lineno) + " has a non-positive part";
                sum += c;
            }
            if (key.n < 1 || sum != edge_count(key.n) || !std::is_sorted(key.parts.begin(), key.parts.end(), std::greater<>()))
                return "line " + std::to_string(lineno) + " is not a canonical sequence";
            parsed.emplace_back(std::move(key), verdict == "YES" ? Answer::yes : Answer::no);
        }
        catch (const std::exception& e) {
            return "line " + std::to_string(lineno) + ": " + e.what();
        }
    }
    std::unique_lock lock(mutex_);
    for (auto& [key, answer] : parsed)
        entries_.try_emplace(std::move(key), Entry{answer, std::nullopt});
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ExactDecider

struct ExactDecider::Plan {
    std::vector<int> parts;     // block sizes, non-increasing
    std::vector<int> base;      // canonical color indices, one or two
    Count first_base_total = 0; // cross edges carried by base[0]
    std::vector<std::vector<Count>> part_counts;
};

namespace {

    bool trivially_yes(const SequenceKey& key) { return key.n <= 2 || key.parts.size() <= 2; }

    /// Nonzero colors of `counts` by decreasing count; position s of the
    /// result is canonical color s+1 of the induced key.
    std::vector<int> canonical_order(std::span<const Count> counts)
    {
        std::vector<int> idx;
        for (std::size_t c = 0; c < counts.size(); ++c)
            if (counts[c] != 0)
                idx.push_back(static_cast<int>(c));
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return counts[a] > counts[b]; });
        return idx;
    }

    std::size_t nonzero_count(const std::vector<Count>& v)
    {
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Count c) { return c != 0; }));
    }

    void all_partitions(int rest, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out)
    {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            all_partitions(rest - p, p, cur, out);
            cur.pop_back();
        }
    }

    std::vector<Count> pair_products(const std::vector<int>& parts)
    {
        std::vector<Count> out;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                out.push_back(static_cast<Count>(parts[i]) * parts[j]);
        return out;
    }

    std::vector<char> subset_sums(const std::vector<Count>& items, Count total)
    {
        std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
        reach[0] = 1;
        for (Count w : items)
            for (Count t = total; t >= w; --t)
                if (reach[static_cast<std::size_t>(t - w)])
                    reach[static_cast<std::size_t>(t)] = 1;
        return reach;
    }

    /// Greedy split of residual into parts of size <= 2, or any parts when
    /// at most two colors remain: each part draws from the lowest colors left.
    void greedy_split(const std::vector<int>& parts, std::size_t from, std::vector<Count> residual,
                      std::vector<std::vector<Count>>& out)
    {
        for (std::size_t i = from; i < parts.size(); ++i) {
            std::vector<Count> x(residual.size(), 0);
            Count need = edge_count(parts[i]);
            for (std::size_t c = 0; c < residual.size() && need > 0; ++c) {
                const Count take = std::min(need, residual[c]);
                x[c] = take;
                residual[c] -= take;
                need -= take;
            }
            out[i] = std::move(x);
        }
    }

} // namespace

ExactDecider::ExactDecider(MemoStore& memo, ExactOptions options) : memo_(memo), options_(options) {}

const std::vector<std::vector<int>>& ExactDecider::partitions_of(int n)
{
    auto it = partitions_.find(n);
    if (it != partitions_.end())
        return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    all_partitions(n, n, cur, out); // reverse-lexicographic: largest first part first
    return partitions_.emplace(n, std::move(out)).first->second;
}

Verdict ExactDecider::decide(const GallaiSequence& s, bool want_witness)
{
    if (s.n > options_.scale_cap)
        throw ScaleCapExceeded("n = " + std::to_string(s.n) + " exceeds the exact-scale cap " +
                               std::to_string(options_.scale_cap));
    const SearchStats before = stats_;
    const auto key = canonical_key(s);

    Verdict v;
    v.answer = solve(key) ? Answer::yes : Answer::no;
    if (v.yes() && want_witness) {
        const auto w = witness(key);
        const auto order = canonical_order(s.counts);
        std::vector<Color> edges(w.edges().size());
        for (std::size_t e = 0; e < edges.size(); ++e)
            edges[e] = static_cast<Color>(order[static_cast<std::size_t>(w.edges()[e] - 1)] + 1);
        v.witness = EdgeColoring(s.n, static_cast<int>(s.k()), std::move(edges));
    }
    v.stats.nodes = stats_.nodes - before.nodes;
    v.stats.memo_hits = stats_.memo_hits - before.memo_hits;
    v.stats.constructive_hits = stats_.constructive_hits - before.constructive_hits;
    return v;
}

bool ExactDecider::is_g_sequence(const SequenceKey& key) { return solve(key); }

bool ExactDecider::solve(const SequenceKey& key)
{
    if (trivially_yes(key))
        return true;
    if (auto hit = memo_.find(key)) {
        ++stats_.memo_hits;
        return hit->answer == Answer::yes;
    }
    auto w = search(key);
    const bool yes = w.has_value();
    memo_.insert(key, {yes ? Answer::yes : Answer::no, std::move(w)});
    return yes;
}

EdgeColoring ExactDecider::witness(const SequenceKey& key)
{
    if (trivially_yes(key))
        return fill_in_rank_order(key.n, key.parts);
    if (auto hit = memo_.find(key); hit && hit->witness)
        return *hit->witness;
    auto w = search(key);
    if (!w)
        throw std::logic_error("no witness for " + to_string(key) + ", which was recorded as a G-sequence");
    memo_.insert(key, {Answer::yes, w});
    return *w;
}

std::optional<EdgeColoring> ExactDecider::search(const SequenceKey& key)
{
    if (trivially_yes(key))
        return fill_in_rank_order(key.n, key.parts);
    ++stats_.nodes;

    if (options_.constructive_first) {
        CutOptions cut;
        cut.budget = options_.constructive_budget;
        cut.trace = TraceMode::none;
        auto r = run_cut_algorithm(GallaiSequence{key.n, key.parts}, cut);
        if (auto* ok = std::get_if<CutSuccess>(&r)) {
            ++stats_.constructive_hits;
            return std::move(ok->coloring);
        }
    }
    if (auto plan = find_plan(key))
        return build(key, *plan);
    return std::nullopt;
}

std::optional<ExactDecider::Plan> ExactDecider::find_plan(const SequenceKey& key)
{
    const int n = key.n;
    const auto& e = key.parts;
    const std::size_t colors = e.size();
    const Count total = edge_count(n);
    const bool prune = options_.base_color_pruning;

    auto attempt = [&](const std::vector<int>& parts, std::vector<int> base, Count t_first,
                       std::vector<Count>& residual) -> std::optional<Plan> {
        if (!distribute(parts, 0, residual, nullptr))
            return std::nullopt;
        Plan plan{parts, std::move(base), t_first, std::vector<std::vector<Count>>(parts.size())};
        if (!distribute(parts, 0, residual, &plan.part_counts))
            throw std::logic_error("distribution feasibility changed between passes");
        return plan;
    };

    // One base color on two parts: the cut K_n -> K_{n-a1} + K_{a1}.
    for (int a1 = 1; a1 <= n / 2; ++a1) {
        const Count cost = static_cast<Count>(a1) * (n - a1);
        const std::vector<int> parts{n - a1, a1};
        for (std::size_t b = 0; b < colors; ++b) {
            if (e[b] < cost || (b > 0 && e[b] == e[b - 1]))
                continue;
            auto residual = e;
            residual[b] -= cost;
            if (auto plan = attempt(parts, {static_cast<int>(b)}, cost, residual))
                return plan;
        }
    }

    for (const auto& parts : partitions_of(n)) {
        const std::size_t m = parts.size();
        if (m < 2 || (prune && m < 4))
            continue;
        Count internal = 0;
        for (int p : parts)
            internal += edge_count(p);
        const Count cross = total - internal;

        if (!prune && m > 2) {
            for (std::size_t b = 0; b < colors; ++b) {
                if (e[b] < cross || (b > 0 && e[b] == e[b - 1]))
                    continue;
                auto residual = e;
                residual[b] -= cross;
                if (auto plan = attempt(parts, {static_cast<int>(b)}, cross, residual))
                    return plan;
            }
        }

        const auto reach = subset_sums(pair_products(parts), cross);
        const Count floor_each = prune ? n - 1 : 0;
        std::vector<std::pair<Count, Count>> tried;
        for (std::size_t b1 = 0; b1 < colors; ++b1)
            for (std::size_t b2 = b1 + 1; b2 < colors; ++b2) {
                if (e[b1] < floor_each || e[b2] < floor_each)
                    continue;
                if (e[b1] + e[b2] < cross)
                    continue;
                const std::pair<Count, Count> values{e[b1], e[b2]};
                if (std::find(tried.begin(), tried.end(), values) != tried.end())
                    continue;
                tried.push_back(values);
                for (Count t1 = std::max(floor_each, cross - e[b2]); t1 <= std::min(e[b1], cross - floor_each); ++t1) {
                    if (!reach[static_cast<std::size_t>(t1)])
                        continue;
                    auto residual = e;
                    residual[b1] -= t1;
                    residual[b2] -= cross - t1;
                    if (auto plan = attempt(parts, {static_cast<int>(b1), static_cast<int>(b2)}, t1, residual))
                        return plan;
                }
            }
    }
    return std::nullopt;
}

bool ExactDecider::distribute(const std::vector<int>& parts, std::size_t from, std::vector<Count>& residual,
                              std::vector<std::vector<Count>>* out)
{
    std::size_t last = parts.size();
    while (last > from && parts[last - 1] <= 1)
        --last;
    if (out)
        for (std::size_t i = last; i < parts.size(); ++i)
            (*out)[i].assign(residual.size(), 0);
    if (last == from)
        return true;

    if (parts[from] <= 2 || nonzero_count(residual) <= 2) {
        if (out)
            greedy_split(parts, from, residual, *out);
        return true;
    }

    const int p = parts[from];
    if (from + 1 == last) {
        const bool ok = solve(canonical_key(p, residual));
        if (ok && out)
            (*out)[from] = residual;
        return ok;
    }

    std::vector<Count> memo_key(parts.begin() + static_cast<std::ptrdiff_t>(from), parts.begin() + static_cast<std::ptrdiff_t>(last));
    memo_key.push_back(-1);
    {
        auto sorted = residual;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        memo_key.insert(memo_key.end(), sorted.begin(), sorted.end());
    }
    if (auto it = dist_memo_.find(memo_key); it != dist_memo_.end() && (!out || !it->second))
        return it->second;

    // Colors by decreasing residual; among equal residuals the fill is
    // non-increasing, since those colors are interchangeable downstream.
    std::vector<int> order(residual.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residual[a] > residual[b]; });
    std::vector<Count> suffix_cap(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;)
        suffix_cap[i] = suffix_cap[i + 1] + residual[static_cast<std::size_t>(order[i])];

    const Count target = edge_count(p);
    std::vector<Count> x(residual.size(), 0);
    bool found = false;

    std::function<bool(std::size_t, Count)> fill = [&](std::size_t pos, Count need) -> bool {
        if (need == 0) {
            if (!solve(canonical_key(p, x)))
                return false;
            for (std::size_t c = 0; c < x.size(); ++c)
                residual[c] -= x[c];
            const bool ok = distribute(parts, from + 1, residual, out);
            for (std::size_t c = 0; c < x.size(); ++c)
                residual[c] += x[c];
            if (ok && out)
                (*out)[from] = x;
            return ok;
        }
        if (pos == order.size() || suffix_cap[pos] < need)
            return false;
        const auto c = static_cast<std::size_t>(order[pos]);
        Count hi = std::min(need, residual[c]);
        if (pos > 0) {
            const auto prev = static_cast<std::size_t>(order[pos - 1]);
            if (residual[prev] == residual[c])
                hi = std::min(hi, x[prev]);
        }
        const Count lo = std::max<Count>(0, need - suffix_cap[pos + 1]);
        for (Count v = hi; v >= lo; --v) {
            x[c] = v;
            if (fill(pos + 1, need - v)) {
                x[c] = 0;
                return true;
            }
        }
        x[c] = 0;
        return false;
    };
    found = fill(0, target);
    dist_memo_[std::move(memo_key)] = found;
    return found;
}

EdgeColoring ExactDecider::build(const SequenceKey& key, const Plan& plan)
{
    const int n = key.n;
    EdgeColoring out(n, static_cast<int>(key.parts.size()));

    std::vector<int> start(plan.parts.size() + 1, 0);
    for (std::size_t i = 0; i < plan.parts.size(); ++i)
        start[i + 1] = start[i] + plan.parts[i];

    // Choose which block pairs carry base[0] so their products hit first_base_total.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < plan.parts.size(); ++i)
        for (std::size_t j = i + 1; j < plan.parts.size(); ++j)
            pairs.emplace_back(i, j);
    std::vector<Color> pair_color(pairs.size(), static_cast<Color>(plan.base[0] + 1));
    if (plan.base.size() == 2) {
        const Count cap = plan.first_base_total;
        std::vector<std::vector<char>> reach(pairs.size() + 1, std::vector<char>(static_cast<std::size_t>(cap) + 1, 0));
        reach[0][0] = 1;
        for (std::size_t l = 0; l < pairs.size(); ++l) {
            const Count w = static_cast<Count>(plan.parts[pairs[l].first]) * plan.parts[pairs[l].second];
            for (Count t = 0; t <= cap; ++t)
                reach[l + 1][static_cast<std::size_t>(t)] =
                    reach[l][static_cast<std::size_t>(t)] || (t >= w && reach[l][static_cast<std::size_t>(t - w)]);
        }
        if (!reach[pairs.size()][static_cast<std::size_t>(cap)])
            throw std::logic_error("base color split is not a subset sum");
        Count t = cap;
        for (std::size_t l = pairs.size(); l-- > 0;) {
            const Count w = static_cast<Count>(plan.parts[pairs[l].first]) * plan.parts[pairs[l].second];
            if (reach[l][static_cast<std::size_t>(t)]) {
                pair_color[l] = static_cast<Color>(plan.base[1] + 1);
            }
            else {
                t -= w;
            }
        }
    }
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        const auto [i, j] = pairs[l];
        for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = start[j]; v < start[j + 1]; ++v)
                out.set_color(u, v, pair_color[l]);
    }

    for (std::size_t i = 0; i < plan.parts.size(); ++i) {
        const int p = plan.parts[i];
        if (p < 2)
            continue;
        const auto& x = plan.part_counts[i];
        const auto order = canonical_order(x);
        const auto sub = witness(canonical_key(p, x));
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v)
                out.set_color(start[i] + u, start[i] + v,
                              static_cast<Color>(order[static_cast<std::size_t>(sub.color(u, v) - 1)] + 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// sweep / g_of_k

SweepReport sweep(int n, int k, MemoStore& memo, const SweepOptions& options)
{
    if (n > options.exact.scale_cap)
        throw ScaleCapExceeded("n = " + std::to_string(n) + " exceeds the exact-scale cap " +
                               std::to_string(options.exact.scale_cap));
    SweepReport report;
    report.n = n;
    report.k = k;
    const auto sequences = all_sequences(n, k, true);
    std::vector<char> is_non_g(sequences.size(), 0);
    std::vector<char> verified(sequences.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> decided{0};
    // With stop_at_first, indices past the earliest non-G hit are skipped;
    // everything before it is still decided, so the reported hit is the
    // first in enumeration order regardless of scheduling.
    std::atomic<std::size_t> first_hit{sequences.size()};
    std::atomic<bool> stop{false};
    std::mutex stats_mutex;

    auto worker = [&]() {
        ExactDecider decider(memo, options.exact);
        for (std::size_t i = next++; i < sequences.size() && i < first_hit && !stop; i = next++) {
            const auto& s = sequences[i];
            auto v = decider.decide(s, options.verify_witnesses);
            ++decided;
            if (!v.yes()) {
                is_non_g[i] = 1;
                if (options.stop_at_first) {
                    std::size_t seen = first_hit.load();
                    while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
                    }
                }
                continue;
            }
            if (options.verify_witnesses) {
                const auto result = verify_certificate(*v.witness, s);
                if (!is_ok(result))
                    throw std::logic_error("witness for " + to_string(s) + " failed verification: " + describe(result));
                verified[i] = 1;
            }
        }
        std::lock_guard lock(stats_mutex);
        report.stats.nodes += decider.stats().nodes;
        report.stats.memo_hits += decider.stats().memo_hits;
        report.stats.constructive_hits += decider.stats().constructive_hits;
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t]() {
                try {
                    worker();
                }
                catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                    stop = true;
                }
            });
        for (auto& th : pool)
            th.join();
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
    }

    for (std::size_t i = 0; i < sequences.size(); ++i) {
        if (is_non_g[i]) {
            report.non_g.push_back(sequences[i]);
            if (options.stop_at_first)
                break;
        }
    }
    report.checked = decided;
    report.witnesses_verified = static_cast<std::size_t>(std::count(verified.begin(), verified.end(), 1));
    return report;
}

GResult g_of_k(int k, int n_max, MemoStore& memo, const SweepOptions& options)
{
    if (k < 2)
        throw std::invalid_argument("g(k) needs k >= 2");
    GResult r;
    r.k = k;
    r.checked_to = n_max;
    auto level = options;
    level.stop_at_first = true;
    for (int n = n_max; n >= 1; --n) {
        r.checked_from = n;
        auto report = sweep(n, k, memo, level);
        if (!report.non_g.empty()) {
            r.last_non_g = report.non_g.front();
            if (n == n_max)
                r.lower_evidence = n_max + 1;
            else
                r.g = n + 1;
            return r;
        }
    }
    r.g = 1;
    return r;
}

// ---------------------------------------------------------------------------

Count max_internal_edges(int n, int j)
{
    if (!(2 * j > n && j < n))
        throw std::domain_error("max_internal_edges needs n/2 < j < n, got n = " + std::to_string(n) +
                                ", j = " + std::to_string(j));
    return edge_count(j) + edge_count(n - j);
}

Count brute_force_internal(int n, int j)
{
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    all_partitions(n, j, cur, parts);
    Count best = -1;
    for (const auto& p : parts) {
        Count internal = 0;
        for (int x : p)
            internal += edge_count(x);
        best = std::max(best, internal);
    }
    return best;
}

Verdict tiny_oracle(const GallaiSequence& s)
{
    const int n = s.n;
    const auto k = static_cast<int>(s.k());
    const Count edges = edge_count(n);
    double space = 1;
    for (Count i = 0; i < edges; ++i)
        space *= k;
    if (space > 1e8)
        throw ScaleCapExceeded("tiny_oracle: " + std::to_string(k) + "^" + std::to_string(edges) + " colorings exceed 1e8");

    Verdict v;
    if (edges == 0) {
        v.answer = Answer::yes;
        v.witness = EdgeColoring(n, k, {});
        return v;
    }

    std::vector<std::pair<int, int>> pair_of;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            pair_of.emplace_back(u, w);

    // Edge (0,1) can be assumed to carry the first nonzero color: move any
    // edge of that color there by relabeling vertices.
    std::size_t first_color = 0;
    while (s.counts[first_color] == 0)
        ++first_color;

    std::vector<Color> colors(static_cast<std::size_t>(edges), 0);
    std::vector<Count> left = s.counts;
    colors[0] = static_cast<Color>(first_color + 1);
    --left[first_color];

    auto gallai = [&]() {
        auto at = [&](int a, int b) { return colors[pair_rank(n, a, b)]; };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const Color x = at(a, b), y = at(a, c), z = at(b, c);
                    if (x != y && x != z && y != z)
                        return false;
                }
        return true;
    };

    std::function<bool(std::size_t)> go = [&](std::size_t e) -> bool {
        ++v.stats.nodes;
        if (e == colors.size())
            return gallai();
        for (int c = 0; c < k; ++c) {
            if (left[static_cast<std::size_t>(c)] == 0)
                continue;
            --left[static_cast<std::size_t>(c)];
            colors[e] = static_cast<Color>(c + 1);
            if (go(e + 1))
                return true;
            ++left[static_cast<std::size_t>(c)];
        }
        return false;
    };

    if (go(1)) {
        v.answer = Answer::yes;
        v.witness = EdgeColoring(n, k, colors);
    }
    return v;
}

} // namespace gallai
