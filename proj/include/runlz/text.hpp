#pragma once

// Byte strings, 1-based spans and the handful of word predicates every other
// module builds on. Symbols are ordered by their unsigned byte value.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace runlz {

/// Inclusive 1-based range [start..end] inside a text.
///
/// An empty span has end == start - 1; its start is the anchor position it
/// is attached to (for example the first symbol of the run an empty domain
/// precedes).
struct Span {
    std::size_t start = 1;
    std::size_t end = 0;

    static constexpr Span empty_at(std::size_t anchor) { return {anchor, anchor - 1}; }
    static constexpr Span of_length(std::size_t start, std::size_t length)
    {
        return {start, start + length - 1};
    }

    constexpr bool empty() const { return end + 1 == start; }
    constexpr std::size_t length() const { return end + 1 - start; }
    constexpr bool contains(std::size_t pos) const { return start <= pos && pos <= end; }

    /// True when both spans are non-empty and share at least one position.
    constexpr bool overlaps(const Span& other) const
    {
        return !empty() && !other.empty() && start <= other.end && other.start <= end;
    }

    /// True when every position of *this lies inside outer (empty spans
    /// count as inside when their anchor does).
    constexpr bool within(const Span& outer) const
    {
        return outer.start <= start && end <= outer.end;
    }

    friend constexpr bool operator==(const Span&, const Span&) = default;
};

/// Immutable byte sequence. Positions handed to and returned from the API are
/// 1-based, matching the s[i..j] convention used in reports.
class Text {
public:
    Text() = default;
    explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

    std::size_t size() const { return bytes_.size(); }
    bool empty() const { return bytes_.empty(); }

    std::string_view view() const { return bytes_; }
    const std::string& str() const { return bytes_; }

    /// Symbol at 1-based position pos, as an unsigned value.
    unsigned char at(std::size_t pos) const { return static_cast<unsigned char>(bytes_.at(pos - 1)); }

    /// Bytes covered by span (empty view for empty spans). Throws
    /// std::out_of_range if the span leaves the text.
    std::string_view slice(const Span& span) const;

    /// Whole-text span [1..|s|] (empty_at(1) for the empty text).
    Span whole() const { return Span::of_length(1, bytes_.size()); }

    friend bool operator==(const Text&, const Text&) = default;

private:
    std::string bytes_;
};

/// Lexicographic order: u < v iff u is a proper prefix of v or the first
/// mismatching symbol of u is smaller.
std::strong_ordering lex_compare(std::string_view u, std::string_view v);

/// True iff w is strictly smaller than each of its non-empty proper
/// suffixes. Throws std::invalid_argument for the empty word.
bool is_lyndon(std::string_view w);

/// Smallest 1-based start of pattern in s, or nullopt. Throws
/// std::invalid_argument for an empty pattern.
std::optional<std::size_t> leftmost_occurrence(std::string_view s, std::string_view pattern);

/// Renders bytes for reports: printable ASCII is kept, a backslash is
/// doubled and everything else becomes \xNN.
std::string escape_bytes(std::string_view bytes);

/// Formats a span as "[start..end]" (or "[]@anchor" when empty).
std::string to_string(const Span& span);

} // namespace runlz
