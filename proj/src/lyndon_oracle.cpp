#include "runlz/lyndon.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace runlz {

namespace {

// Counts (capped at 2) the ways to split w[pos..] into Lyndon words, each
// lexicographically <= the previous one. prev_len == 0 means no constraint.
class SplitCounter {
public:
    explicit SplitCounter(std::string_view w) : w_(w) {}

    int count(std::size_t pos, std::size_t prev_len)
    {
        if (pos == w_.size()) {
            return 1;
        }
        const auto key = std::make_pair(pos, prev_len);
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second.ways;
        }
        Entry entry;
        const std::string_view prev = w_.substr(pos - prev_len, prev_len);
        for (std::size_t len = 1; pos + len <= w_.size(); ++len) {
            const std::string_view candidate = w_.substr(pos, len);
            // Once a candidate exceeds prev every extension does too.
            if (prev_len != 0 && lex_compare(candidate, prev) == std::strong_ordering::greater) {
                break;
            }
            if (!is_lyndon(candidate)) {
                continue;
            }
            const int ways = count(pos + len, len);
            if (ways > 0 && entry.ways == 0) {
                entry.first_len = len;
            }
            entry.ways = std::min(2, entry.ways + ways);
            if (entry.ways == 2) {
                break;
            }
        }
        memo_.emplace(key, entry);
        return entry.ways;
    }

    std::size_t choice(std::size_t pos, std::size_t prev_len) const
    {
        return memo_.at({pos, prev_len}).first_len;
    }

private:
    struct Entry {
        int ways = 0;
        std::size_t first_len = 0;
    };

    std::string_view w_;
    std::map<std::pair<std::size_t, std::size_t>, Entry> memo_;
};

} // namespace

LyndonFactorization oracle_lyndon_dp(const Text& s, std::size_t max_length)
{
    if (s.size() > max_length) {
        throw std::invalid_argument("oracle input of length " + std::to_string(s.size()) +
                                    " exceeds bound " + std::to_string(max_length));
    }
    const std::string_view w = s.view();
    SplitCounter counter(w);
    if (counter.count(0, 0) != 1) {
        throw std::logic_error("uniqueness violated");
    }

    LyndonFactorization lf;
    std::size_t pos = 0;
    std::size_t prev_len = 0;
    while (pos < w.size()) {
        const std::size_t len = counter.choice(pos, prev_len);
        const bool repeats = !lf.runs.empty() && prev_len == len &&
                             w.substr(pos - len, len) == w.substr(pos, len);
        if (repeats) {
            auto& last = lf.runs.back();
            ++last.exponent;
            last.run.end += len;
        } else {
            lf.runs.push_back({Span::of_length(pos + 1, len), 1, Span::of_length(pos + 1, len)});
        }
        pos += len;
        prev_len = len;
    }
    return lf;
}

} // namespace runlz
