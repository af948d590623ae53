#include "support.hpp"

#include <stdexcept>

namespace runlz::testing {

SyntheticLookup::SyntheticLookup(std::size_t m, std::map<std::pair<std::size_t, std::size_t>, std::size_t> anchors)
    : m_(m), anchors_(std::move(anchors))
{
}

Domain SyntheticLookup::domain(std::size_t i, std::size_t d) const
{
    const auto it = anchors_.find({i, d});
    if (it == anchors_.end()) {
        throw std::out_of_range("no synthetic domain for (" + std::to_string(i) + ", " + std::to_string(d) + ")");
    }
    Domain dom;
    dom.i = i;
    dom.d = d;
    dom.j = it->second;
    dom.span = dom.j == i ? Span::empty_at(i) : Span{dom.j, i - 1};
    dom.extended = Span{dom.j, i + d - 1};
    dom.associated = Span::of_length(dom.j, d);
    return dom;
}

SyntheticLookup layered_example()
{
    return SyntheticLookup(16, {{{15, 2}, 1},
                                {{14, 3}, 1},
                                {{13, 4}, 1},
                                {{12, 5}, 12},
                                {{11, 1}, 1},
                                {{10, 2}, 1},
                                {{9, 3}, 8},
                                {{7, 1}, 1},
                                {{6, 2}, 4},
                                {{3, 1}, 1},
                                {{2, 2}, 1},
                                {{1, 3}, 1}});
}

std::string random_string(std::mt19937_64& rng, std::size_t sigma, std::size_t length)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
    std::string w(length, 'a');
    for (auto& c : w) {
        c = static_cast<char>('a' + pick(rng));
    }
    return w;
}

} // namespace runlz::testing
