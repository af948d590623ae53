#include "runlz/text.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace runlz {

std::string_view Text::slice(const Span& span) const
{
    if (span.empty()) {
        return {};
    }
    if (span.start < 1 || span.end > bytes_.size() || span.start > span.end) {
        throw std::out_of_range("span " + to_string(span) + " outside text of length " +
                                std::to_string(bytes_.size()));
    }
    return std::string_view(bytes_).substr(span.start - 1, span.length());
}

std::strong_ordering lex_compare(std::string_view u, std::string_view v)
{
    const std::size_t common = std::min(u.size(), v.size());
    for (std::size_t pos = 0; pos < common; ++pos) {
        const auto a = static_cast<unsigned char>(u[pos]);
        const auto b = static_cast<unsigned char>(v[pos]);
        if (a != b) {
            return a <=> b;
        }
    }
    return u.size() <=> v.size();
}

bool is_lyndon(std::string_view w)
{
    if (w.empty()) {
        throw std::invalid_argument("empty word has no Lyndon status");
    }
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        if (lex_compare(w.substr(cut), w) != std::strong_ordering::greater) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> leftmost_occurrence(std::string_view s, std::string_view pattern)
{
    if (pattern.empty()) {
        throw std::invalid_argument("occurrence search needs a non-empty pattern");
    }
    const auto pos = s.find(pattern);
    if (pos == std::string_view::npos) {
        return std::nullopt;
    }
    return pos + 1;
}

std::string escape_bytes(std::string_view bytes)
{
    std::string out;
    out.reserve(bytes.size());
    for (const char c : bytes) {
        const auto u = static_cast<unsigned char>(c);
        if (u == '\\') {
            out += "\\\\";
        } else if (u >= 0x20 && u < 0x7f) {
            out += c;
        } else {
            char buf[5];
            std::snprintf(buf, sizeof buf, "\\x%02x", u);
            out += buf;
        }
    }
    return out;
}

std::string to_string(const Span& span)
{
    if (span.empty()) {
        return "[]@" + std::to_string(span.start);
    }
    return "[" + std::to_string(span.start) + ".." + std::to_string(span.end) + "]";
}

} // namespace runlz
