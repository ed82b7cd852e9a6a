#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

using Count = std::int64_t;

// Largest magnitude any count-valued computation may reach before we refuse.
inline constexpr Count kCountLimit = Count{1} << 62;

class SequenceError : public std::invalid_argument {
public:
    enum class Kind { empty, sum_mismatch, negative_entry, bad_vertex_count, overflow, parse };

    SequenceError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Checked n(n-1)/2. Throws SequenceError{overflow} past kCountLimit.
Count edge_count(Count n);

/// Checked a*b for nonnegative operands.
Count checked_mul(Count a, Count b);
Count checked_add(Count a, Count b);

/// A candidate color-class profile for K_n: counts sum to C(n,2) and are
/// kept sorted non-increasing. Zero entries are allowed (absent colors).
struct GallaiSequence {
    int n = 0;
    std::vector<Count> counts;

    std::size_t k() const noexcept { return counts.size(); }
    std::size_t nonzero() const noexcept;
    bool strict() const noexcept;

    friend bool operator==(const GallaiSequence&, const GallaiSequence&) = default;
};

GallaiSequence validate(int n, std::span<const Count> raw, bool strict = false);

/// Memoization key: n plus the sorted counts with zeros removed.
struct SequenceKey {
    int n = 0;
    std::vector<Count> parts;

    friend auto operator<=>(const SequenceKey&, const SequenceKey&) = default;
    friend bool operator==(const SequenceKey&, const SequenceKey&) = default;
};

SequenceKey canonical_key(const GallaiSequence& s);
SequenceKey canonical_key(int n, std::span<const Count> counts);

struct SequenceKeyHash {
    std::size_t operator()(const SequenceKey& key) const noexcept;
};

/// Streams every ordered (n,k)-sequence once, in reverse-lexicographic
/// order of the sorted tuple. Non-strict streams pad shorter partitions
/// with zeros up to k entries.
class SequenceStream {
public:
    SequenceStream(int n, int k, bool strict);

    std::optional<GallaiSequence> next();

private:
    bool advance();

    int n_;
    int k_;
    bool strict_;
    Count total_;
    std::vector<Count> parts_;
    bool started_ = false;
    bool done_ = false;
};

SequenceStream enumerate_sequences(int n, int k, bool strict);
std::vector<GallaiSequence> all_sequences(int n, int k, bool strict);

std::string format_counts(std::span<const Count> counts, char sep = ',');
std::vector<Count> parse_counts(const std::string& text);
std::string to_string(const GallaiSequence& s);
std::string to_string(const SequenceKey& key);

} // namespace gallai
