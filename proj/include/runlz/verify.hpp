#pragma once

// Empirical checks of every structural statement the upper-bound argument
// relies on, run against the actual LZ parse of one string. All of them are
// proven to hold for every input, so a failure indicates a defect in this
// library rather than a counterexample.

#include "runlz/domains.hpp"
#include "runlz/lz.hpp"
#include "runlz/text.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace runlz {

struct CheckResult {
    std::string name;
    std::string statement;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string counterexample; ///< first failing instance, empty when passed

    bool passed() const { return failures == 0; }
};

struct LemmaReport {
    std::size_t input_length = 0;
    std::size_t m = 0;
    std::size_t z = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t total_failures() const;
    /// Throws std::out_of_range for an unknown check name.
    const CheckResult& check(std::string_view name) const;
};

/// Names of all checks, in report order.
const std::vector<std::string>& lemma_check_names();

LemmaReport verify_lemmas(const Text& s);
LemmaReport verify_lemmas(const DomainAnalyzer& analyzer, const LZFactorization& lz);

} // namespace runlz
