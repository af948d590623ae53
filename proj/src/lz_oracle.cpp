#include "runlz/lz.hpp"

#include <stdexcept>

namespace runlz {

LZFactorization oracle_lz_naive(const Text& s, std::size_t max_length)
{
    if (s.size() > max_length) {
        throw std::invalid_argument("oracle input of length " + std::to_string(s.size()) +
                                    " exceeds bound " + std::to_string(max_length));
    }
    const std::string_view w = s.view();
    LZFactorization lz;
    std::size_t start = 0;
    while (start < w.size()) {
        const std::string_view parsed = w.substr(0, start);
        std::size_t len = 0;
        while (start + len < w.size() &&
               leftmost_occurrence(parsed, w.substr(start, len + 1)).has_value()) {
            ++len;
        }
        // len == 0: the letter has not been seen, so it forms its own phrase.
        len = len == 0 ? 1 : len;
        lz.phrases.push_back(Span::of_length(start + 1, len));
        start += len;
    }
    return lz;
}

} // namespace runlz
