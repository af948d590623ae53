#include "runlz/bounds.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace runlz {
namespace {

using runlz::testing::kRunExample;

std::string rep(char c, std::size_t n)
{
    return std::string(n, c);
}

TEST(Family, Generator)
{
    EXPECT_EQ(generate_family(0).str(), "ba");
    EXPECT_EQ(generate_family(1).str(), "baba");
    EXPECT_EQ(generate_family(3).str(), "b" + std::string("ab") + "aababaab" + "aaababaaabaabaaab" + "a");
    EXPECT_EQ(family_block(0), "b");
    EXPECT_EQ(family_block(1), "ab");
    EXPECT_EQ(family_block(4), "aaaababaaaabaabaaaabaaabaaaab");
}

TEST(Family, ClosedFormCounts)
{
    EXPECT_THROW(expected_counts(0), std::invalid_argument);
    EXPECT_THROW(expected_counts(1), std::invalid_argument);
    const auto c2 = expected_counts(2);
    EXPECT_EQ(c2.m_k, 5u);
    EXPECT_EQ(c2.z_k, 5u);
    const auto c3 = expected_counts(3);
    EXPECT_EQ(c3.m_k, 8u);
    EXPECT_EQ(c3.z_k, 7u);
    const auto c10 = expected_counts(10);
    EXPECT_EQ(c10.m_k, 57u);
    EXPECT_EQ(c10.z_k, 49u);
}

TEST(Family, PhraseRecurrence)
{
    EXPECT_THROW(expected_lz_phrases(1), std::invalid_argument);
    const std::vector<std::string> base{"b", "a", "ba", "aba", "baaba"};
    EXPECT_EQ(expected_lz_phrases(2), base);
    auto three = base;
    three.insert(three.end(), {"aababaa", "abaabaaaba"});
    EXPECT_EQ(expected_lz_phrases(3), three);
    const auto four = expected_lz_phrases(4);
    ASSERT_EQ(four.size(), three.size() + 3);
    EXPECT_EQ(four.back(), "aba" + rep('a', 2) + "b" + rep('a', 4) + "ba");
    EXPECT_EQ(four[7], rep('a', 3) + "bab" + rep('a', 3));
}

TEST(Family, ExactForKUpTo40)
{
    for (std::size_t k = 2; k <= 40; ++k) {
        const Text s = generate_family(k);
        const auto lf = lyndon_factorize(s);
        const auto lz = lz_factorize(s);
        const auto expected = expected_counts(k);
        EXPECT_EQ(lf.m(), expected.m_k) << "k=" << k;
        EXPECT_EQ(lz.z(), expected.z_k) << "k=" << k;
        std::vector<std::string> phrases;
        for (const auto& p : lz.phrases) {
            phrases.emplace_back(s.slice(p));
        }
        EXPECT_EQ(phrases, expected_lz_phrases(k)) << "k=" << k;
        EXPECT_EQ(expected.m_k - expected.z_k, k - 2);
    }
}

TEST(Family, LyndonFactorsFollowBlocks)
{
    for (std::size_t k = 2; k <= 15; ++k) {
        const Text s = generate_family(k);
        const auto lf = lyndon_factorize(s);
        std::vector<std::string> factors;
        for (const auto& r : lf.runs) {
            factors.emplace_back(s.slice(r.factor));
            EXPECT_EQ(r.exponent, 1u);
        }
        EXPECT_EQ(factors, expected_lyndon_factors(k));

        // No run straddles a block boundary.
        std::vector<std::size_t> block_ends;
        std::size_t pos = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            pos += family_block(i).size();
            block_ends.push_back(pos);
        }
        for (const std::size_t end : block_ends) {
            EXPECT_TRUE(lf.run_starting_at(end + 1).has_value()) << "k=" << k << " boundary " << end;
        }
    }
}

TEST(Family, GapGrowsLikeSquareRoot)
{
    double previous = 0.0;
    for (std::size_t k = 3; k <= 200; ++k) {
        const auto c = expected_counts(k);
        const double gap = static_cast<double>(c.m_k) - static_cast<double>(c.z_k);
        const double normalised = gap * gap / static_cast<double>(c.z_k);
        EXPECT_GT(normalised, previous) << "k=" << k;
        EXPECT_LT(normalised, 2.0);
        previous = normalised;
    }
    EXPECT_GT(previous, 1.9);
}

TEST(CheckTheorem, Examples)
{
    const auto t2 = check_theorem(generate_family(2));
    EXPECT_EQ(t2.m, 5u);
    EXPECT_EQ(t2.z, 5u);
    EXPECT_TRUE(t2.passes);
    EXPECT_EQ(t2.slack, 5);

    const auto t3 = check_theorem(generate_family(3));
    EXPECT_EQ(t3.m, 8u);
    EXPECT_EQ(t3.z, 7u);
    EXPECT_TRUE(t3.passes);

    const auto fig = check_theorem(Text(kRunExample));
    EXPECT_EQ(fig.m, 5u);
    EXPECT_EQ(fig.z, 8u);
    EXPECT_EQ(fig.t, 1u);
    EXPECT_TRUE(fig.passes);

    EXPECT_THROW(check_theorem(Text()), std::invalid_argument);
}

TEST(Partition, Examples)
{
    const auto ba = extdom_partition(Text("ba"));
    ASSERT_EQ(ba.t(), 2u);
    EXPECT_EQ(ba.parts[0].span, (Span{1, 1}));
    EXPECT_EQ(ba.parts[1].span, (Span{2, 2}));
    EXPECT_EQ(ba.parts[0].k, 0u);

    const auto fig = extdom_partition(Text(kRunExample));
    ASSERT_EQ(fig.t(), 1u);
    EXPECT_EQ(fig.parts[0].span, (Span{1, 25}));
    EXPECT_EQ(fig.parts[0].k, 4u);

    const Text s2 = generate_family(2);
    const auto p2 = extdom_partition(s2);
    EXPECT_GE(5u, (5 + p2.t() + 1) / 2);
    EXPECT_EQ(p2.parts.back().run, 5u);

    EXPECT_EQ(extdom_partition(Text()).t(), 0u);
}

TEST(Partition, TilesTextAndBoundsZ)
{
    std::mt19937_64 rng(41);
    for (int r = 0; r < 1000; ++r) {
        const Text s(runlz::testing::random_string(rng, 2 + r % 3, 1 + r % 100));
        const auto partition = extdom_partition(s);
        const auto lz = lz_factorize(s);
        const std::size_t m = lyndon_factorize(s).m();
        std::size_t next = 1;
        for (const auto& part : partition.parts) {
            EXPECT_EQ(part.span.start, next);
            EXPECT_GE(count_boundaries(lz, part.span), (part.k + 1) / 2 + 1);
            next = part.span.end + 1;
        }
        EXPECT_EQ(next, s.size() + 1);
        EXPECT_EQ(partition.parts.back().run, m);
        EXPECT_GE(lz.z(), (m + partition.t() + 1) / 2) << s.str();
        EXPECT_LT(m, 2 * lz.z());
    }
}

TEST(CanonicalRelabel, PreservesOrder)
{
    EXPECT_EQ(canonical_relabel("bdb"), "aba");
    EXPECT_EQ(canonical_relabel("zzy"), "bba");
    EXPECT_EQ(canonical_relabel(""), "");
    std::mt19937_64 rng(43);
    for (int r = 0; r < 200; ++r) {
        std::string w = runlz::testing::random_string(rng, 6, 1 + r % 30);
        for (auto& c : w) {
            c = static_cast<char>(c + 10);
        }
        const Text original(w);
        const Text relabelled(canonical_relabel(w));
        EXPECT_EQ(lyndon_factorize(original), lyndon_factorize(relabelled));
        EXPECT_EQ(lz_factorize(original), lz_factorize(relabelled));
    }
}

} // namespace
} // namespace runlz
