#include "runlz/bounds.hpp"

#include "runlz/lyndon.hpp"
#include "runlz/lz.hpp"

#include <stdexcept>

namespace runlz {

TheoremReport check_theorem(const Text& s)
{
    if (s.empty()) {
        throw std::invalid_argument("theorem check needs a non-empty string");
    }
    const LZFactorization lz = lz_factorize(s);
    const Partition partition = extdom_partition(s);
    TheoremReport report;
    report.m = lyndon_factorize(s).m();
    report.z = lz.z();
    report.t = partition.t();
    report.slack = 2 * static_cast<long long>(report.z) - static_cast<long long>(report.m);
    report.passes = report.slack >= 1;
    return report;
}

Partition extdom_partition(const Text& s)
{
    return {DomainAnalyzer(s).extdom_partition()};
}

std::string family_block(std::size_t i)
{
    if (i == 0) {
        return "b";
    }
    const std::string head = std::string(i, 'a') + "b";
    std::string block;
    for (std::size_t r = 1; r < i; ++r) {
        block += head;
        block += std::string(r, 'a') + "b";
    }
    block += head;
    return block;
}

Text generate_family(std::size_t k)
{
    std::string s;
    for (std::size_t i = 0; i <= k; ++i) {
        s += family_block(i);
    }
    s += 'a';
    return Text(std::move(s));
}

FamilyCounts expected_counts(std::size_t k)
{
    if (k < 2) {
        throw std::invalid_argument("formula domain: k must be at least 2, got " + std::to_string(k));
    }
    // k^2 + k and k^2 - k are even, so the halves are exact.
    return {k, (k * k + k) / 2 + 2, (k * k - k) / 2 + 4};
}

std::vector<std::string> expected_lz_phrases(std::size_t k)
{
    if (k < 2) {
        throw std::invalid_argument("formula domain: k must be at least 2, got " + std::to_string(k));
    }
    std::vector<std::string> phrases{"b", "a", "ba", "aba", "baaba"};
    auto a = [](std::size_t n) { return std::string(n, 'a'); };
    for (std::size_t level = 3; level <= k; ++level) {
        phrases.push_back(a(level - 1) + "bab" + a(level - 1));
        for (std::size_t r = 2; r + 2 <= level; ++r) {
            phrases.push_back("ab" + a(r) + "b" + a(level - 1));
        }
        phrases.push_back("ab" + a(level - 1) + "b" + a(level) + "ba");
    }
    return phrases;
}

std::vector<std::string> expected_lyndon_factors(std::size_t k)
{
    std::vector<std::string> factors{"b"};
    for (std::size_t i = 1; i <= k; ++i) {
        const std::string head = std::string(i, 'a') + "b";
        for (std::size_t r = 1; r < i; ++r) {
            factors.push_back(head + std::string(r, 'a') + "b");
        }
        factors.push_back(head);
    }
    factors.emplace_back("a");
    return factors;
}

std::string canonical_relabel(std::string_view w)
{
    bool used[256] = {};
    for (const char c : w) {
        used[static_cast<unsigned char>(c)] = true;
    }
    unsigned char rank[256] = {};
    unsigned next = 'a';
    for (int c = 0; c < 256; ++c) {
        if (used[c]) {
            if (next > 0xff) {
                throw std::invalid_argument("too many distinct symbols to relabel from 'a'");
            }
            rank[c] = static_cast<unsigned char>(next++);
        }
    }
    std::string out(w);
    for (char& c : out) {
        c = static_cast<char>(rank[static_cast<unsigned char>(c)]);
    }
    return out;
}

} // namespace runlz
