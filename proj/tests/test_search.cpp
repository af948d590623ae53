#include "runlz/bounds.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace runlz {
namespace {

std::vector<SearchRecord> collect(const SearchOptions& options, SearchSummary* summary = nullptr)
{
    std::vector<SearchRecord> records;
    const auto result = exhaustive_search(options, [&](const SearchRecord& r) { records.push_back(r); });
    if (summary) {
        *summary = result;
    }
    return records;
}

TEST(Search, UnaryStrings)
{
    SearchOptions options;
    options.sigma = 1;
    options.max_len = 5;
    SearchSummary summary;
    const auto records = collect(options, &summary);
    ASSERT_EQ(records.size(), 5u);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto& r = records[n - 1];
        EXPECT_EQ(r.text, std::string(n, 'a'));
        EXPECT_EQ(r.m, 1u);
        EXPECT_GT(r.slack(), 0);
    }
    EXPECT_LT(records[0].z, records[4].z);
    EXPECT_TRUE(summary.passed());
}

TEST(Search, BinaryUpTo16HasNoViolations)
{
    SearchOptions options;
    options.sigma = 2;
    options.max_len = 16;
    options.jobs = 2;
    const auto summary = exhaustive_search(options);
    EXPECT_EQ(summary.strings, 131070u);
    EXPECT_EQ(summary.violations, 0u);
    ASSERT_EQ(summary.per_length.size(), 16u);
    EXPECT_EQ(summary.per_length.back().strings, 65536u);
}

TEST(Search, BinaryRatiosStayBelowTwo)
{
    SearchOptions options;
    options.sigma = 2;
    options.max_len = 12;
    const auto summary = exhaustive_search(options);
    for (const auto& l : summary.per_length) {
        EXPECT_LT(l.max_ratio, 2.0) << "n=" << l.n;
        EXPECT_EQ(l.max_ratio_witness.size(), l.n);
    }
    // The family string s_2 ties the best gap at length 12.
    EXPECT_EQ(summary.per_length.back().max_m_minus_z, 0);
}

TEST(Search, OrderIsIndependentOfJobs)
{
    SearchOptions options;
    options.sigma = 3;
    options.max_len = 7;
    options.min_len = 3;
    options.jobs = 1;
    const auto serial = collect(options);
    options.jobs = 4;
    const auto parallel = collect(options);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t r = 0; r < serial.size(); ++r) {
        EXPECT_EQ(serial[r].text, parallel[r].text);
        EXPECT_EQ(serial[r].m, parallel[r].m);
        EXPECT_EQ(serial[r].z, parallel[r].z);
    }
    EXPECT_EQ(serial.front().text, "aaa");
    EXPECT_EQ(serial.back().text, "ccccccc");
}

TEST(Search, DedupeKeepsCanonicalStrings)
{
    SearchOptions options;
    options.sigma = 2;
    options.max_len = 8;
    options.dedupe = true;
    const auto records = collect(options);
    std::size_t expected = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        expected += (std::size_t{1} << n) - 1;
    }
    EXPECT_EQ(records.size(), expected);
    for (const auto& r : records) {
        EXPECT_EQ(canonical_relabel(r.text), r.text);
    }
}

TEST(Search, LemmaVerificationOnTernary)
{
    SearchOptions options;
    options.sigma = 3;
    options.max_len = 7;
    options.verify_lemmas = true;
    options.jobs = 3;
    const auto summary = exhaustive_search(options);
    EXPECT_TRUE(summary.passed()) << summary.first_lemma_failure;
    EXPECT_EQ(summary.lemma_checks.size(), lemma_check_names().size());
    EXPECT_GT(summary.lemma_checks.front().instances, 0u);
}

TEST(Search, RejectsBadOptions)
{
    SearchOptions options;
    options.sigma = 0;
    EXPECT_THROW(exhaustive_search(options), std::invalid_argument);
    options.sigma = 27;
    EXPECT_THROW(exhaustive_search(options), std::invalid_argument);
    options.sigma = 2;
    options.max_len = 30;
    EXPECT_THROW(exhaustive_search(options), std::invalid_argument);
    options.max_len = 4;
    options.min_len = 5;
    EXPECT_THROW(exhaustive_search(options), std::invalid_argument);
}

} // namespace
} // namespace runlz
