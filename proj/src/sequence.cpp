#include "gallai/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gallai {

Count checked_mul(Count a, Count b)
{
    __int128 r = static_cast<__int128>(a) * b;
    if (r >= kCountLimit || r <= -kCountLimit)
        throw SequenceError(SequenceError::Kind::overflow, "count arithmetic overflow in multiplication");
    return static_cast<Count>(r);
}

Count checked_add(Count a, Count b)
{
    __int128 r = static_cast<__int128>(a) + b;
    if (r >= kCountLimit || r <= -kCountLimit)
        throw SequenceError(SequenceError::Kind::overflow, "count arithmetic overflow in addition");
    return static_cast<Count>(r);
}

Count edge_count(Count n)
{
    if (n < 0)
        throw SequenceError(SequenceError::Kind::bad_vertex_count, "negative vertex count");
    if (n < 2)
        return 0;
    // n(n-1) is even, so halve the even factor first to keep the range wide.
    return (n % 2 == 0) ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

std::size_t GallaiSequence::nonzero() const noexcept
{
    return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](Count c) { return c != 0; }));
}

bool GallaiSequence::strict() const noexcept
{
    return std::all_of(counts.begin(), counts.end(), [](Count c) { return c > 0; });
}

GallaiSequence validate(int n, std::span<const Count> raw, bool strict)
{
    if (n < 1)
        throw SequenceError(SequenceError::Kind::bad_vertex_count, "vertex count must be positive, got " + std::to_string(n));
    if (raw.empty())
        throw SequenceError(SequenceError::Kind::empty, "sequence must have at least one entry");

    Count sum = 0;
    for (Count c : raw) {
        if (c < 0 || (strict && c == 0))
            throw SequenceError(SequenceError::Kind::negative_entry,
                                std::string(strict ? "non-positive" : "negative") + " entry " + std::to_string(c));
        sum = checked_add(sum, c);
    }
    const Count expected = edge_count(n);
    if (sum != expected)
        throw SequenceError(SequenceError::Kind::sum_mismatch,
                            "sum mismatch: expected C(" + std::to_string(n) + ",2) = " + std::to_string(expected) +
                                ", got " + std::to_string(sum));

    GallaiSequence s{n, {raw.begin(), raw.end()}};
    std::sort(s.counts.begin(), s.counts.end(), std::greater<>());
    return s;
}

SequenceKey canonical_key(int n, std::span<const Count> counts)
{
    SequenceKey key{n, {}};
    key.parts.reserve(counts.size());
    for (Count c : counts)
        if (c != 0)
            key.parts.push_back(c);
    std::sort(key.parts.begin(), key.parts.end(), std::greater<>());
    return key;
}

SequenceKey canonical_key(const GallaiSequence& s) { return canonical_key(s.n, s.counts); }

std::size_t SequenceKeyHash::operator()(const SequenceKey& key) const noexcept
{
    std::size_t h = std::hash<int>{}(key.n);
    for (Count c : key.parts)
        h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------------------

SequenceStream::SequenceStream(int n, int k, bool strict)
    : n_(n), k_(k), strict_(strict), total_(edge_count(n)), parts_(static_cast<std::size_t>(std::max(k, 0)), 0)
{
    if (k < 1 || (strict && total_ < k))
        done_ = true;
}

namespace {

    // Largest-lexicographic fill of `slots` entries bounded by `cap`, summing to `rest`.
    void fill_largest(std::vector<Count>& parts, std::size_t from, Count rest, Count cap, bool strict)
    {
        const std::size_t k = parts.size();
        for (std::size_t j = from; j < k; ++j) {
            const Count after = static_cast<Count>(k - j - 1);
            Count v = strict ? std::min(cap, rest - after) : std::min(cap, rest);
            parts[j] = v;
            rest -= v;
            cap = v;
        }
    }

    bool suffix_feasible(Count rest, Count slots, Count cap, bool strict)
    {
        if (rest < 0)
            return false;
        if (slots == 0)
            return rest == 0;
        if (strict)
            return rest >= slots && rest <= slots * cap;
        return rest <= slots * cap;
    }

} // namespace

bool SequenceStream::advance()
{
    const std::size_t k = parts_.size();
    if (k < 2)
        return false;
    std::vector<Count> prefix_sums(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
        prefix_sums[i + 1] = prefix_sums[i] + parts_[i];

    for (std::size_t ii = k - 1; ii-- > 0;) {
        const Count lower = strict_ ? 1 : 0;
        const Count v = parts_[ii] - 1;
        if (v < lower)
            continue;
        const Count rest = total_ - prefix_sums[ii] - v;
        const Count slots = static_cast<Count>(k - ii - 1);
        if (!suffix_feasible(rest, slots, v, strict_))
            continue;
        parts_[ii] = v;
        fill_largest(parts_, ii + 1, rest, v, strict_);
        return true;
    }
    return false;
}

std::optional<GallaiSequence> SequenceStream::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_largest(parts_, 0, total_, total_, strict_);
    }
    else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return GallaiSequence{n_, parts_};
}

SequenceStream enumerate_sequences(int n, int k, bool strict) { return SequenceStream(n, k, strict); }

std::vector<GallaiSequence> all_sequences(int n, int k, bool strict)
{
    std::vector<GallaiSequence> out;
    auto stream = enumerate_sequences(n, k, strict);
    while (auto s = stream.next())
        out.push_back(std::move(*s));
    return out;
}

// ---------------------------------------------------------------------------

std::string format_counts(std::span<const Count> counts, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(counts[i]);
    }
    return out;
}

std::vector<Count> parse_counts(const std::string& text)
{
    std::vector<Count> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string_view field(text.data() + pos, comma - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        Count value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw SequenceError(SequenceError::Kind::parse, "cannot parse sequence entry '" + std::string(field) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string to_string(const GallaiSequence& s) { return "(" + format_counts(s.counts) + ")"; }

std::string to_string(const SequenceKey& key)
{
    return std::to_string(key.n) + ":" + format_counts(key.parts);
}

} // namespace gallai
