#pragma once

#include "runlz/text.hpp"

#include <cstddef>
#include <vector>

namespace runlz {

/// Non-overlapping LZ factorization s = p_1 ... p_z. Each phrase is either the
/// leftmost occurrence of a letter or the longest prefix of the remaining
/// suffix that occurs entirely inside p_1 ... p_{i-1}.
struct LZFactorization {
    std::vector<Span> phrases;

    std::size_t z() const { return phrases.size(); }

    /// Length of the factorized text.
    std::size_t text_length() const { return phrases.empty() ? 0 : phrases.back().end; }

    /// Sorted phrase start positions.
    std::vector<std::size_t> boundary_positions() const;

    friend bool operator==(const LZFactorization&, const LZFactorization&) = default;
};

/// Greedy parse; O(n) work per phrase via a Z-array over the phrase
/// candidate and the already parsed prefix.
LZFactorization lz_factorize(const Text& s);

/// Literal transcription of the greedy rule: grows every phrase one symbol
/// at a time while leftmost_occurrence still finds it inside the prefix.
/// Throws std::invalid_argument when |s| exceeds max_length.
LZFactorization oracle_lz_naive(const Text& s, std::size_t max_length = 10000);

/// True iff some phrase starts inside window. Throws std::invalid_argument
/// when window is empty or leaves the text.
bool contains_boundary(const LZFactorization& lz, const Span& window);

/// Number of phrase starts inside window (same preconditions as
/// contains_boundary).
std::size_t count_boundaries(const LZFactorization& lz, const Span& window);

} // namespace runlz
