#pragma once

#include "gallai/coloring.hpp"
#include "gallai/sequence.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gallai {

enum class Answer { yes, no };

class ScaleCapExceeded : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SearchStats {
    std::size_t nodes = 0;             // decomposition searches started
    std::size_t memo_hits = 0;
    std::size_t constructive_hits = 0; // keys settled by the cut search alone
};

struct Verdict {
    Answer answer = Answer::no;
    std::optional<EdgeColoring> witness; // in the colors of the queried sequence
    SearchStats stats;

    bool yes() const { return answer == Answer::yes; }
};

/// Shared verdict cache keyed on canonical sequences. Witnesses are kept in
/// canonical colors (color i+1 is key.parts[i]) when known.
class MemoStore {
public:
    struct Entry {
        Answer answer = Answer::no;
        std::optional<EdgeColoring> witness;
    };

    static constexpr const char* format_tag = "# gallai-memo v1";

    std::optional<Entry> find(const SequenceKey& key) const;
    void insert(const SequenceKey& key, Entry entry);
    std::size_t size() const;
    void clear();

    /// One "n:e1,e2,... YES|NO" line per entry, sorted by key.
    void save(std::ostream& out) const;
    /// Replaces nothing and returns a reason when the stream is not a valid
    /// cache of this format version.
    std::optional<std::string> load(std::istream& in);

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<SequenceKey, Entry, SequenceKeyHash> entries_;
};

struct ExactOptions {
    int scale_cap = 12;
    // Restrict to decompositions whose base colors are connected: one base
    // color with two parts, or two base colors on >= 4 parts each spanning
    // >= n-1 cross edges. Off means the plain decomposition theorem.
    bool base_color_pruning = true;
    bool constructive_first = true;
    std::size_t constructive_budget = 2'000;
};

struct CountsHash {
    std::size_t operator()(const std::vector<Count>& v) const noexcept;
};

class ExactDecider {
public:
    explicit ExactDecider(MemoStore& memo, ExactOptions options = {});

    /// Throws ScaleCapExceeded when s.n exceeds the configured cap.
    Verdict decide(const GallaiSequence& s, bool want_witness = true);

    bool is_g_sequence(const SequenceKey& key);
    /// Witness in canonical colors; key must be a G-sequence.
    EdgeColoring witness(const SequenceKey& key);

    const SearchStats& stats() const { return stats_; }
    const ExactOptions& options() const { return options_; }

private:
    struct Plan;

    bool solve(const SequenceKey& key);
    std::optional<EdgeColoring> search(const SequenceKey& key);
    std::optional<Plan> find_plan(const SequenceKey& key);
    EdgeColoring build(const SequenceKey& key, const Plan& plan);
    bool distribute(const std::vector<int>& parts, std::size_t from, std::vector<Count>& residual,
                    std::vector<std::vector<Count>>* out);
    const std::vector<std::vector<int>>& partitions_of(int n);

    MemoStore& memo_;
    ExactOptions options_;
    SearchStats stats_;
    std::unordered_map<std::vector<Count>, bool, CountsHash> dist_memo_;
    std::unordered_map<int, std::vector<std::vector<int>>> partitions_;
};

struct SweepOptions {
    ExactOptions exact;
    int jobs = 1;
    bool verify_witnesses = true;
    bool stop_at_first = false;
};

struct SweepReport {
    int n = 0;
    int k = 0;
    std::size_t checked = 0;
    std::size_t witnesses_verified = 0;
    std::vector<GallaiSequence> non_g; // in enumeration order
    SearchStats stats;
};

/// Every strict (n,k)-sequence that is not a G-sequence.
SweepReport sweep(int n, int k, MemoStore& memo, const SweepOptions& options = {});

struct GResult {
    int k = 0;
    std::optional<int> g;      // set when a non-G level was found below n_max
    int lower_evidence = 0;    // when g is unset: g(k) >= lower_evidence
    int checked_from = 0;      // lowest n swept
    int checked_to = 0;        // n_max
    std::optional<GallaiSequence> last_non_g;
};

/// Sweeps n = n_max, n_max-1, ... until a level with a non-G sequence shows up.
GResult g_of_k(int k, int n_max, MemoStore& memo, const SweepOptions& options = {});

/// C(j,2) + C(n-j,2); requires n/2 < j < n.
Count max_internal_edges(int n, int j);
/// Max of sum C(x_i,2) over all partitions of n with parts <= j.
Count brute_force_internal(int n, int j);

/// Exhaustive search over all k-colorings of K_n. Throws ScaleCapExceeded
/// when k^C(n,2) > 1e8.
Verdict tiny_oracle(const GallaiSequence& s);

} // namespace gallai
