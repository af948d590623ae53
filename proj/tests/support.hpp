#pragma once

// Shared fixtures and generators for the test binaries.

#include "runlz/domains.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

namespace runlz::testing {

/// Factorization-free domain table: every run has length 1, so run i
/// occupies position i and spans can be derived from anchors alone.
class SyntheticLookup final : public DomainLookup {
public:
    SyntheticLookup(std::size_t m, std::map<std::pair<std::size_t, std::size_t>, std::size_t> anchors);

    std::size_t run_count() const override { return m_; }
    /// Throws std::out_of_range for an (i, d) not present in the table.
    Domain domain(std::size_t i, std::size_t d) const override;

private:
    std::size_t m_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> anchors_;
};

/// Anchor table of the 16-run layered example with root dom_2(F_15).
SyntheticLookup layered_example();

inline constexpr const char* kRunExample = "abbabbababbababbbababbaba";

/// Uniform string over the first sigma letters.
std::string random_string(std::mt19937_64& rng, std::size_t sigma, std::size_t length);

/// All strings over the first sigma letters of exactly this length.
template <typename F>
void for_each_string(std::size_t sigma, std::size_t length, F&& f)
{
    std::string w(length, 'a');
    while (true) {
        f(static_cast<const std::string&>(w));
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (static_cast<std::size_t>(w[pos] - 'a') + 1 < sigma) {
                ++w[pos];
                break;
            }
            w[pos] = 'a';
            if (pos == 0) {
                return;
            }
        }
        if (length == 0) {
            return;
        }
    }
}

} // namespace runlz::testing
