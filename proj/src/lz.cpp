#include "runlz/lz.hpp"

#include <algorithm>
#include <stdexcept>

namespace runlz {

namespace {

// Z-array of seq: z[p] = length of the longest common prefix of seq and seq[p..].
std::vector<std::size_t> z_array(const std::vector<int>& seq)
{
    const std::size_t n = seq.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) {
        return z;
    }
    z[0] = n;
    std::size_t left = 0;
    std::size_t right = 0;
    for (std::size_t p = 1; p < n; ++p) {
        if (p < right) {
            z[p] = std::min(right - p, z[p - left]);
        }
        while (p + z[p] < n && seq[z[p]] == seq[p + z[p]]) {
            ++z[p];
        }
        if (p + z[p] > right) {
            left = p;
            right = p + z[p];
        }
    }
    return z;
}

void check_window(const LZFactorization& lz, const Span& window)
{
    if (window.empty() || window.start < 1 || window.end > lz.text_length()) {
        throw std::invalid_argument("window " + to_string(window) + " outside text of length " +
                                    std::to_string(lz.text_length()));
    }
}

} // namespace

std::vector<std::size_t> LZFactorization::boundary_positions() const
{
    std::vector<std::size_t> starts;
    starts.reserve(phrases.size());
    for (const auto& p : phrases) {
        starts.push_back(p.start);
    }
    return starts;
}

LZFactorization lz_factorize(const Text& s)
{
    const std::string_view w = s.view();
    const std::size_t n = w.size();
    LZFactorization lz;
    std::vector<int> seq;
    std::size_t q = 0; // 0-based start of the next phrase
    while (q < n) {
        // Candidate: w[q .. q + min(n - q, q)) since the copy must fit in w[0..q).
        const std::size_t cand = std::min(n - q, q);
        seq.clear();
        seq.reserve(cand + 1 + q);
        for (std::size_t p = 0; p < cand; ++p) {
            seq.push_back(static_cast<unsigned char>(w[q + p]));
        }
        seq.push_back(-1);
        for (std::size_t p = 0; p < q; ++p) {
            seq.push_back(static_cast<unsigned char>(w[p]));
        }
        const auto z = z_array(seq);
        std::size_t best = 0;
        for (std::size_t p = 0; p < q; ++p) {
            // Source starting at p must end before q.
            best = std::max(best, std::min(z[cand + 1 + p], q - p));
        }
        const std::size_t len = std::max<std::size_t>(best, 1);
        lz.phrases.push_back(Span::of_length(q + 1, len));
        q += len;
    }
    return lz;
}

bool contains_boundary(const LZFactorization& lz, const Span& window)
{
    return count_boundaries(lz, window) > 0;
}

std::size_t count_boundaries(const LZFactorization& lz, const Span& window)
{
    check_window(lz, window);
    const auto first = std::lower_bound(lz.phrases.begin(), lz.phrases.end(), window.start,
                                        [](const Span& p, std::size_t pos) { return p.start < pos; });
    const auto last = std::upper_bound(lz.phrases.begin(), lz.phrases.end(), window.end,
                                       [](std::size_t pos, const Span& p) { return pos < p.start; });
    return first < last ? static_cast<std::size_t>(last - first) : 0;
}

} // namespace runlz
