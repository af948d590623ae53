#pragma once

// Upper-bound check m < 2z, the extended-domain partition behind it, the
// lower-bound family s_k and an exhaustive search over small alphabets.

#include "runlz/domains.hpp"
#include "runlz/text.hpp"
#include "runlz/verify.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace runlz {

struct TheoremReport {
    std::size_t m = 0;
    std::size_t z = 0;
    std::size_t t = 0;  ///< parts in the extended-domain partition
    bool passes = false; ///< m < 2z
    long long slack = 0; ///< 2z - m
};

/// Throws std::invalid_argument for the empty text.
TheoremReport check_theorem(const Text& s);

struct Partition {
    std::vector<PartitionPart> parts;
    std::size_t t() const { return parts.size(); }
};

/// s = extdom_1(F_{i_1}) ... extdom_1(F_{i_t}), i_t = m. Empty text gives t = 0.
Partition extdom_partition(const Text& s);

/// s_k = B_0 B_1 ... B_k a with B_0 = b and
/// B_i = (a^i b a^1 b) ... (a^i b a^{i-1} b) a^i b.
Text generate_family(std::size_t k);

/// Block B_i of the family (i >= 0).
std::string family_block(std::size_t i);

struct FamilyCounts {
    std::size_t k = 0;
    std::size_t m_k = 0; ///< k^2/2 + k/2 + 2
    std::size_t z_k = 0; ///< k^2/2 - k/2 + 4
};

/// Closed-form sizes; throws std::invalid_argument("formula domain") for k < 2.
FamilyCounts expected_counts(std::size_t k);

/// Phrase list of the LZ parse of s_k from the recurrence
/// LZ(s_k) = LZ(s_{k-1}) a^{k-1}baba^{k-1} aba^2ba^{k-1} ... aba^{k-2}ba^{k-1} aba^{k-1}ba^kba
/// with LZ(s_2) = b, a, ba, aba, baaba. Throws std::invalid_argument for k < 2.
std::vector<std::string> expected_lz_phrases(std::size_t k);

/// Lyndon factors of s_k in order: b, then a^i b a^1 b, ..., a^i b a^{i-1} b,
/// a^i b for every block B_i (i >= 1), then the final a. All exponents are 1.
std::vector<std::string> expected_lyndon_factors(std::size_t k);

/// Maps the symbols used in w, in increasing order, onto 'a', 'b', ...
/// Preserves the relative order of symbols and therefore both factorizations.
std::string canonical_relabel(std::string_view w);

struct SearchRecord {
    std::size_t sigma = 0;
    std::size_t n = 0;
    std::string text;
    std::size_t m = 0;
    std::size_t z = 0;

    long long slack() const { return 2 * static_cast<long long>(z) - static_cast<long long>(m); }
    long long m_minus_z() const { return static_cast<long long>(m) - static_cast<long long>(z); }
    double ratio() const { return static_cast<double>(m) / static_cast<double>(z); }
};

struct LengthSummary {
    std::size_t n = 0;
    std::uint64_t strings = 0;
    long long max_m_minus_z = 0;
    std::string max_m_minus_z_witness;
    double max_ratio = 0.0;
    std::string max_ratio_witness;
};

struct SearchOptions {
    std::size_t sigma = 2;
    std::size_t max_len = 8;
    std::size_t min_len = 1;
    bool dedupe = false;        ///< keep only canonically relabelled strings
    bool verify_lemmas = false; ///< also run the full lemma verifier per string
    std::size_t jobs = 1;
    std::uint64_t budget = 50'000'000; ///< cap on the number of enumerated strings
};

struct SearchSummary {
    std::size_t sigma = 0;
    std::size_t max_len = 0;
    bool dedupe = false;
    std::uint64_t strings = 0;
    std::uint64_t violations = 0; ///< strings with m >= 2z
    std::string first_violation;
    std::vector<LengthSummary> per_length;
    /// Per-check failure totals, present when verify_lemmas was requested.
    std::vector<CheckResult> lemma_checks;
    std::uint64_t lemma_failures = 0;
    std::string first_lemma_failure; ///< "<string>: <check>: <witness>"

    bool passed() const { return violations == 0 && lemma_failures == 0; }
};

using RecordSink = std::function<void(const SearchRecord&)>;

/// Enumerates every string over {a, ..., a + sigma - 1} with length in
/// [min_len, max_len], in length-then-lexicographic order, records m and z
/// and aggregates per-length extremes. Work is split over jobs by string
/// prefix; records reach sink in enumeration order regardless of jobs.
///
/// Throws std::invalid_argument when sigma is 0 or above 26, or when the
/// enumeration exceeds options.budget.
SearchSummary exhaustive_search(const SearchOptions& options, const RecordSink& sink = {});

} // namespace runlz
