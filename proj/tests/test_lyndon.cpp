#include "runlz/bounds.hpp"
#include "runlz/lyndon.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace runlz {
namespace {

using runlz::testing::for_each_string;
using runlz::testing::kRunExample;

struct Expected {
    std::string factor;
    std::size_t exponent;
    Span run;
};

void expect_runs(const Text& s, const LyndonFactorization& lf, const std::vector<Expected>& want)
{
    ASSERT_EQ(lf.m(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(s.slice(lf.runs[i].factor), want[i].factor) << "run " << i + 1;
        EXPECT_EQ(lf.runs[i].exponent, want[i].exponent) << "run " << i + 1;
        EXPECT_EQ(lf.runs[i].run, want[i].run) << "run " << i + 1;
    }
}

void expect_well_formed(const Text& s, const LyndonFactorization& lf)
{
    EXPECT_EQ(reassemble(s, lf), s.str());
    std::size_t next = 1;
    for (std::size_t i = 1; i <= lf.m(); ++i) {
        const auto& r = lf.run(i);
        EXPECT_EQ(r.run.start, next);
        EXPECT_EQ(r.run.length(), r.exponent * r.factor.length());
        EXPECT_TRUE(is_lyndon(s.slice(r.factor)));
        if (i > 1) {
            EXPECT_TRUE(lex_compare(s.slice(lf.run(i - 1).factor), s.slice(r.factor)) > 0);
        }
        next = r.run.end + 1;
    }
    EXPECT_EQ(next, s.size() + 1);
}

TEST(LyndonFactorize, RunExampleString)
{
    const Text s(kRunExample);
    expect_runs(s, lyndon_factorize(s),
                {{"abb", 2, {1, 6}},
                 {"ababbababbb", 1, {7, 17}},
                 {"ababb", 1, {18, 22}},
                 {"ab", 1, {23, 24}},
                 {"a", 1, {25, 25}}});
}

TEST(LyndonFactorize, SmallWords)
{
    expect_runs(Text("aaaa"), lyndon_factorize(Text("aaaa")), {{"a", 4, {1, 4}}});
    expect_runs(Text("banana"), lyndon_factorize(Text("banana")),
                {{"b", 1, {1, 1}}, {"an", 2, {2, 5}}, {"a", 1, {6, 6}}});
    expect_runs(Text("ba"), lyndon_factorize(Text("ba")), {{"b", 1, {1, 1}}, {"a", 1, {2, 2}}});
    EXPECT_EQ(lyndon_factorize(Text()).m(), 0u);
}

TEST(LyndonFactorize, FamilyThree)
{
    const Text s = generate_family(3);
    EXPECT_EQ(s.str(), std::string("b") + "ab" + "aababaab" + "aaababaaabaabaaab" + "a");
    const auto lf = lyndon_factorize(s);
    EXPECT_EQ(lf.m(), 8u);
    std::vector<std::string> factors;
    for (const auto& r : lf.runs) {
        factors.emplace_back(s.slice(r.factor));
        EXPECT_EQ(r.exponent, 1u);
    }
    EXPECT_EQ(factors, (std::vector<std::string>{"b", "ab", "aabab", "aab", "aaabab", "aaabaab", "aaab", "a"}));
}

TEST(LyndonFactorize, RunQueries)
{
    const Text s(kRunExample);
    const auto lf = lyndon_factorize(s);
    EXPECT_EQ(lf.runs_span(2, 4), (Span{7, 24}));
    EXPECT_EQ(lf.run_starting_at(18), 3u);
    EXPECT_EQ(lf.run_starting_at(19), std::nullopt);
    EXPECT_EQ(lf.run_covering(19), 3u);
    EXPECT_EQ(lf.run_covering(25), 5u);
}

TEST(LyndonOracle, SmallCases)
{
    EXPECT_EQ(oracle_lyndon_dp(Text("banana")), lyndon_factorize(Text("banana")));
    EXPECT_EQ(oracle_lyndon_dp(Text("a")).m(), 1u);
    EXPECT_EQ(oracle_lyndon_dp(Text("ba")).m(), 2u);
    EXPECT_EQ(oracle_lyndon_dp(Text()).m(), 0u);
}

TEST(LyndonOracle, RejectsLongInputByDefault)
{
    EXPECT_THROW(oracle_lyndon_dp(Text(std::string(25, 'a'))), std::invalid_argument);
    EXPECT_NO_THROW(oracle_lyndon_dp(Text(std::string(25, 'a')), 25));
}

TEST(LyndonOracle, AgreesOnAllBinaryUpTo12)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        for_each_string(2, n, [](const std::string& w) {
            const Text s(w);
            const auto lf = lyndon_factorize(s);
            ASSERT_EQ(oracle_lyndon_dp(s), lf) << w;
            expect_well_formed(s, lf);
        });
    }
}

TEST(LyndonOracle, AgreesOnAllTernaryUpTo8)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        for_each_string(3, n, [](const std::string& w) {
            const Text s(w);
            ASSERT_EQ(oracle_lyndon_dp(s), lyndon_factorize(s)) << w;
        });
    }
}

TEST(LyndonFactorize, EarlierFactorsDominateLaterRuns)
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const Text s(runlz::testing::random_string(rng, 2 + round % 3, 1 + round % 60));
        const auto lf = lyndon_factorize(s);
        expect_well_formed(s, lf);
        for (std::size_t i = 2; i <= lf.m(); ++i) {
            for (std::size_t j = 1; j < i; ++j) {
                EXPECT_TRUE(lex_compare(s.slice(lf.run(j).factor), s.slice(lf.run(i).run)) > 0) << s.str();
            }
        }
    }
}

TEST(LyndonFactorize, ArbitraryBytes)
{
    const Text s(std::string("\xff\x00\x80\x00\x80", 5));
    const auto lf = lyndon_factorize(s);
    expect_well_formed(s, lf);
    EXPECT_EQ(lf, oracle_lyndon_dp(s));
}

} // namespace
} // namespace runlz
