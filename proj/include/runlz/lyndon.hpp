#pragma once

#include "runlz/text.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace runlz {

/// One Lyndon run F_i = f_i^{e_i}. The factor span points at the first period
/// of the run; later periods are implied by the exponent.
struct LyndonRun {
    Span factor;
    std::size_t exponent = 0;
    Span run;

    friend bool operator==(const LyndonRun&, const LyndonRun&) = default;
};

/// Lyndon factorization s = f_1^{e_1} ... f_m^{e_m} with f_1 > f_2 > ... > f_m.
/// Run indices in this API are 1-based.
struct LyndonFactorization {
    std::vector<LyndonRun> runs;

    std::size_t m() const { return runs.size(); }
    const LyndonRun& run(std::size_t i) const { return runs.at(i - 1); }

    /// Span of F_first ... F_last (first <= last).
    Span runs_span(std::size_t first, std::size_t last) const;

    /// Index of the run whose first symbol is at pos, if any.
    std::optional<std::size_t> run_starting_at(std::size_t pos) const;

    /// Index of the run covering pos. pos must lie inside the text.
    std::size_t run_covering(std::size_t pos) const;

    friend bool operator==(const LyndonFactorization&, const LyndonFactorization&) = default;
};

/// Linear-time factorization (Duval's scan). Empty input yields m = 0.
LyndonFactorization lyndon_factorize(const Text& s);

/// Independent oracle: enumerates every split of s into a non-increasing
/// sequence of Lyndon words (memoised over position and previous factor),
/// requires exactly one to exist and returns it grouped into runs.
///
/// Throws std::invalid_argument when |s| exceeds max_length and
/// std::logic_error("uniqueness violated") when zero or several splits exist.
LyndonFactorization oracle_lyndon_dp(const Text& s, std::size_t max_length = 24);

/// Rebuilds the text from the factor spans and exponents.
std::string reassemble(const Text& s, const LyndonFactorization& lf);

} // namespace runlz
