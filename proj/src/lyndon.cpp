#include "runlz/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace runlz {

Span LyndonFactorization::runs_span(std::size_t first, std::size_t last) const
{
    if (first < 1 || first > last || last > runs.size()) {
        throw std::out_of_range("run range F_" + std::to_string(first) + "..F_" + std::to_string(last) +
                                " outside factorization of size " + std::to_string(runs.size()));
    }
    return {run(first).run.start, run(last).run.end};
}

std::optional<std::size_t> LyndonFactorization::run_starting_at(std::size_t pos) const
{
    const auto it = std::lower_bound(runs.begin(), runs.end(), pos,
                                     [](const LyndonRun& r, std::size_t p) { return r.run.start < p; });
    if (it == runs.end() || it->run.start != pos) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - runs.begin()) + 1;
}

std::size_t LyndonFactorization::run_covering(std::size_t pos) const
{
    const auto it = std::upper_bound(runs.begin(), runs.end(), pos,
                                     [](std::size_t p, const LyndonRun& r) { return p < r.run.start; });
    if (it == runs.begin() || pos > std::prev(it)->run.end) {
        throw std::out_of_range("position " + std::to_string(pos) + " not covered by any run");
    }
    return static_cast<std::size_t>(it - runs.begin());
}

LyndonFactorization lyndon_factorize(const Text& s)
{
    const std::string_view w = s.view();
    const std::size_t n = w.size();
    auto sym = [&](std::size_t p) { return static_cast<unsigned char>(w[p]); };

    LyndonFactorization lf;
    std::size_t k = 0;
    while (k < n) {
        std::size_t i = k;
        std::size_t j = k + 1;
        while (j < n && sym(i) <= sym(j)) {
            i = sym(i) < sym(j) ? k : i + 1;
            ++j;
        }
        const std::size_t period = j - i;
        const std::size_t start = k;
        std::size_t exponent = 0;
        while (k <= i) {
            k += period;
            ++exponent;
        }
        lf.runs.push_back({Span::of_length(start + 1, period), exponent,
                           Span::of_length(start + 1, period * exponent)});
    }
    return lf;
}

std::string reassemble(const Text& s, const LyndonFactorization& lf)
{
    std::string out;
    out.reserve(s.size());
    for (const auto& r : lf.runs) {
        const auto factor = s.slice(r.factor);
        for (std::size_t e = 0; e < r.exponent; ++e) {
            out += factor;
        }
    }
    return out;
}

} // namespace runlz
