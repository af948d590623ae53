#include "runlz/bounds.hpp"
#include "runlz/lz.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace runlz {
namespace {

using runlz::testing::for_each_string;
using runlz::testing::kRunExample;

std::vector<std::string> phrase_texts(const Text& s, const LZFactorization& lz)
{
    std::vector<std::string> out;
    for (const auto& p : lz.phrases) {
        out.emplace_back(s.slice(p));
    }
    return out;
}

// Occurrence of w ending at or before position limit (1-based).
bool occurs_before(std::string_view s, std::string_view w, std::size_t limit)
{
    return leftmost_occurrence(s.substr(0, limit), w).has_value();
}

TEST(LZFactorize, FamilyBaseCases)
{
    const Text s2 = generate_family(2);
    EXPECT_EQ(s2.str(), "babaababaaba");
    const auto lz2 = lz_factorize(s2);
    EXPECT_EQ(phrase_texts(s2, lz2), (std::vector<std::string>{"b", "a", "ba", "aba", "baaba"}));
    EXPECT_EQ(lz2.boundary_positions(), (std::vector<std::size_t>{1, 2, 3, 5, 8}));

    const Text s3 = generate_family(3);
    EXPECT_EQ(phrase_texts(s3, lz_factorize(s3)),
              (std::vector<std::string>{"b", "a", "ba", "aba", "baaba", "aababaa", "abaabaaaba"}));
}

TEST(LZFactorize, SmallWords)
{
    const Text s("aaaa");
    EXPECT_EQ(phrase_texts(s, lz_factorize(s)), (std::vector<std::string>{"a", "a", "aa"}));
    EXPECT_EQ(phrase_texts(Text("ba"), lz_factorize(Text("ba"))), (std::vector<std::string>{"b", "a"}));
    EXPECT_EQ(lz_factorize(Text()).z(), 0u);
}

TEST(LZFactorize, RunExampleString)
{
    // Frozen from the naive oracle: the last phrase bababbaba re-occurs at [6..14].
    const Text s(kRunExample);
    const auto lz = lz_factorize(s);
    EXPECT_EQ(lz.z(), 8u);
    EXPECT_EQ(lz.boundary_positions(), (std::vector<std::size_t>{1, 2, 3, 4, 7, 9, 14, 17}));
    EXPECT_EQ(lz.phrases.back(), (Span{17, 25}));
    EXPECT_EQ(lz, oracle_lz_naive(s));
}

TEST(ContainsBoundary, Windows)
{
    const Text fig(kRunExample);
    const auto lz = lz_factorize(fig);
    EXPECT_TRUE(contains_boundary(lz, Span{10, 14}));
    EXPECT_TRUE(contains_boundary(lz, Span{1, 1}));
    EXPECT_FALSE(contains_boundary(lz, Span{10, 13}));
    EXPECT_EQ(count_boundaries(lz, fig.whole()), 8u);

    const auto lz2 = lz_factorize(generate_family(2));
    EXPECT_TRUE(contains_boundary(lz2, Span{8, 9}));
    EXPECT_FALSE(contains_boundary(lz2, Span{9, 12}));
    EXPECT_EQ(count_boundaries(lz2, Span{2, 5}), 3u);
}

TEST(ContainsBoundary, RejectsBadWindows)
{
    const auto lz = lz_factorize(Text("abc"));
    EXPECT_THROW(contains_boundary(lz, Span{3, 4}), std::invalid_argument);
    EXPECT_THROW(contains_boundary(lz, Span::empty_at(2)), std::invalid_argument);
    EXPECT_THROW(count_boundaries(lz, Span{0, 1}), std::invalid_argument);
}

TEST(LZOracle, Examples)
{
    EXPECT_EQ(oracle_lz_naive(Text("ba")).z(), 2u);
    EXPECT_EQ(oracle_lz_naive(Text("aaaa")), lz_factorize(Text("aaaa")));
    EXPECT_EQ(oracle_lz_naive(generate_family(2)).z(), 5u);
    EXPECT_THROW(oracle_lz_naive(Text("abc"), 2), std::invalid_argument);
}

TEST(LZOracle, AgreesOnAllBinaryUpTo12)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        for_each_string(2, n, [](const std::string& w) {
            const Text s(w);
            ASSERT_EQ(lz_factorize(s), oracle_lz_naive(s)) << w;
        });
    }
}

TEST(LZOracle, AgreesOnRandomStrings)
{
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 2000; ++round) {
        const Text s(runlz::testing::random_string(rng, 2 + round % 3, 1 + round % 200));
        ASSERT_EQ(lz_factorize(s), oracle_lz_naive(s)) << s.str();
    }
}

TEST(LZFactorize, GreedyAndNonOverlappingProperties)
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 400; ++round) {
        const std::string w = runlz::testing::random_string(rng, 2 + round % 3, 1 + round % 80);
        const Text s(w);
        const auto lz = lz_factorize(s);
        std::size_t next = 1;
        std::set<char> seen;
        for (const auto& p : lz.phrases) {
            ASSERT_EQ(p.start, next);
            const std::size_t prefix = p.start - 1;
            const std::string_view phrase = s.slice(p);
            if (seen.count(phrase[0]) == 0) {
                EXPECT_EQ(p.length(), 1u) << w;
            } else {
                EXPECT_TRUE(occurs_before(w, phrase, prefix)) << w;
                if (p.end < s.size()) {
                    EXPECT_FALSE(occurs_before(w, s.slice(Span{p.start, p.end + 1}), prefix)) << w;
                }
            }
            for (const char c : phrase) {
                seen.insert(c);
            }
            next = p.end + 1;
        }
        EXPECT_EQ(next, s.size() + 1);
        EXPECT_GE(lz.z(), seen.size());
    }
}

} // namespace
} // namespace runlz
