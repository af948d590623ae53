#include "runlz/domains.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace runlz {

namespace {

std::string dom_name(std::size_t i, std::size_t d)
{
    return "dom_" + std::to_string(d) + "(F_" + std::to_string(i) + ")";
}

std::size_t ceil_half(std::size_t k) { return (k + 1) / 2; }

} // namespace

Domain compute_domain(const Text& s, const LyndonFactorization& lf, std::size_t i, std::size_t d)
{
    const std::size_t m = lf.m();
    if (i < 1 || d < 1 || i + d - 1 > m) {
        throw std::invalid_argument("order exceeds factorization: " + dom_name(i, d) + " with m = " +
                                    std::to_string(m));
    }
    const Span block = lf.runs_span(i, i + d - 1);
    // The trivial occurrence guarantees a hit.
    const std::size_t occ = *leftmost_occurrence(s.view(), s.slice(block));

    Domain dom;
    dom.i = i;
    dom.d = d;
    dom.associated = Span::of_length(occ, block.length());
    if (occ < block.start) {
        const auto anchor = lf.run_starting_at(occ);
        if (!anchor) {
            throw std::logic_error("leftmost occurrence of F_" + std::to_string(i) + "..F_" +
                                   std::to_string(i + d - 1) + " at " + std::to_string(occ) +
                                   " does not start a Lyndon run");
        }
        dom.j = *anchor;
        dom.span = lf.runs_span(dom.j, i - 1);
    } else {
        dom.j = i;
        dom.span = Span::empty_at(block.start);
    }
    dom.extended = {dom.span.start, block.end};
    return dom;
}

std::vector<std::size_t> CanonicalDecomposition::cluster_sizes() const
{
    std::vector<std::size_t> sizes;
    for (const auto& part : parts) {
        if (part.is_cluster()) {
            sizes.push_back(part.domains.size());
        }
    }
    return sizes;
}

std::vector<Domain> CanonicalDecomposition::loose() const
{
    std::vector<Domain> out;
    for (const auto& part : parts) {
        if (!part.is_cluster()) {
            out.push_back(part.domains.front());
        }
    }
    return out;
}

CanonicalDecomposition canonical_decomposition(const DomainLookup& lookup, const Domain& root)
{
    if (root.empty()) {
        throw std::invalid_argument("decomposition undefined for empty domain");
    }
    const std::size_t j = root.j;

    // Collected right to left, reversed at the end.
    std::vector<CanonicalPart> scanned;
    CanonicalPart cluster{CanonicalPart::Kind::cluster, {root}};
    std::size_t order = root.d;
    std::size_t t = root.i - 1;
    while (t >= j) {
        Domain candidate = lookup.domain(t, order + 1);
        if (candidate.j == j) {
            cluster.domains.push_back(std::move(candidate));
            ++order;
            --t;
            continue;
        }
        if (candidate.j < j) {
            throw std::logic_error(dom_name(t, order + 1) + " reaches left of the root anchor F_" +
                                   std::to_string(j));
        }
        if (!cluster.domains.empty()) {
            scanned.push_back(std::move(cluster));
        }
        cluster = CanonicalPart{CanonicalPart::Kind::cluster, {}};
        t = candidate.j - 1;
        order = 0;
        scanned.push_back({CanonicalPart::Kind::loose, {std::move(candidate)}});
    }
    if (!cluster.domains.empty()) {
        scanned.push_back(std::move(cluster));
    }

    CanonicalDecomposition cd;
    cd.root = root;
    cd.parts.assign(std::make_move_iterator(scanned.rbegin()), std::make_move_iterator(scanned.rend()));
    for (auto& part : cd.parts) {
        std::reverse(part.domains.begin(), part.domains.end());
    }
    return cd;
}

BoundaryBudget boundary_budget(const CanonicalDecomposition& cd)
{
    auto fail = [](const std::string& what) {
        throw std::logic_error("budget inconsistency: " + what);
    };
    if (cd.parts.empty() || !cd.parts.front().is_cluster()) {
        fail("decomposition does not start with a cluster");
    }

    BoundaryBudget b;
    b.k = cd.root.size();
    b.d = cd.root.d;
    b.ell = cd.parts.front().domains.size();
    for (const auto& part : cd.parts) {
        if (part.is_cluster()) {
            if (part.domains.empty()) {
                fail("empty cluster");
            }
            b.S += part.domains.size() - 1;
        } else {
            b.d_h.push_back(part.domains.front().d);
            b.k_h.push_back(part.domains.front().size());
        }
    }
    b.t = b.d_h.size();
    for (const std::size_t kh : b.k_h) {
        b.loose_total += ceil_half(kh) + 1;
    }
    b.total = 1 + b.loose_total + b.S;
    b.lower_bound = ceil_half(b.k) + 1;

    using Signed = long long;
    if (b.t == 0) {
        // A single cluster: the (k+1)-group spanning the whole root domain.
        if (b.ell != b.k + 1 || b.S != b.k) {
            fail("single cluster of size " + std::to_string(b.ell) + " for root of size " + std::to_string(b.k));
        }
    } else {
        Signed sum_k = 0;
        Signed sum_d = 0;
        Signed wide = 0; // loose orders > 1, excluding the rightmost one
        for (std::size_t h = 0; h < b.t; ++h) {
            sum_k += static_cast<Signed>(b.k_h[h]);
            sum_d += static_cast<Signed>(b.d_h[h]);
            if (h + 1 < b.t && b.d_h[h] > 1) {
                ++wide;
            }
        }
        const auto k = static_cast<Signed>(b.k);
        const auto ell = static_cast<Signed>(b.ell);
        const auto d = static_cast<Signed>(b.d);
        const auto t = static_cast<Signed>(b.t);
        if (sum_k != k - ell - sum_d + d) {
            fail("sum of k_h = " + std::to_string(sum_k) + ", expected k - ell - sum d_h + d = " +
                 std::to_string(k - ell - sum_d + d));
        }
        const Signed expected_s = ell - 1 + sum_d - t - d - wide;
        if (static_cast<Signed>(b.S) != expected_s) {
            fail("S = " + std::to_string(b.S) + ", expected " + std::to_string(expected_s));
        }
    }
    if (b.total < b.lower_bound) {
        fail("total " + std::to_string(b.total) + " below ceil(k/2) + 1 = " + std::to_string(b.lower_bound));
    }
    return b;
}

DomainAnalyzer::DomainAnalyzer(Text s) : DomainAnalyzer(s, lyndon_factorize(s)) {}

DomainAnalyzer::DomainAnalyzer(Text s, LyndonFactorization lf) : text_(std::move(s)), lf_(std::move(lf))
{
    const std::size_t m = lf_.m();
    rows_.resize(m);
    for (std::size_t i = 1; i <= m; ++i) {
        rows_[i - 1].reserve(m - i + 1);
        for (std::size_t d = 1; i + d - 1 <= m; ++d) {
            rows_[i - 1].push_back(compute_domain(text_, lf_, i, d));
        }
    }
}

Domain DomainAnalyzer::domain(std::size_t i, std::size_t d) const
{
    if (i < 1 || d < 1 || i + d - 1 > lf_.m()) {
        throw std::invalid_argument("order exceeds factorization: " + dom_name(i, d) + " with m = " +
                                    std::to_string(lf_.m()));
    }
    return rows_[i - 1][d - 1];
}

std::vector<Domain> DomainAnalyzer::all_domains() const
{
    std::vector<Domain> out;
    for (const auto& row : rows_) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::optional<TandemDomain> DomainAnalyzer::tandem(std::size_t i, std::size_t d) const
{
    if (i < 1 || d < 1 || i + d > lf_.m()) {
        return std::nullopt;
    }
    const Domain& inner = rows_[i - 1][d];
    const Domain& outer = rows_[i][d - 1];
    if (inner.j != outer.j) {
        return std::nullopt;
    }
    const std::size_t run_len = lf_.run(i).run.length();
    const Span occ = inner.associated;
    return TandemDomain{i, d, inner, outer, Span{occ.end + 1 - run_len, occ.end}};
}

std::vector<TandemDomain> DomainAnalyzer::find_tandem_domains() const
{
    std::vector<TandemDomain> out;
    for (std::size_t i = 1; i < lf_.m(); ++i) {
        for (std::size_t d = 1; i + d <= lf_.m(); ++d) {
            if (auto td = tandem(i, d)) {
                out.push_back(std::move(*td));
            }
        }
    }
    return out;
}

std::optional<PGroup> DomainAnalyzer::p_group(std::size_t i, std::size_t p, std::size_t d) const
{
    if (i < 1 || p < 2 || d < 1 || i + p + d - 2 > lf_.m()) {
        return std::nullopt;
    }
    PGroup group;
    group.i = i;
    group.p = p;
    group.d = d;
    for (std::size_t t = 0; t < p; ++t) {
        group.members.push_back(rows_[i + t - 1][d + p - 2 - t]);
        if (group.members.back().j != group.members.front().j) {
            return std::nullopt;
        }
    }
    for (std::size_t t = 0; t + 1 < p; ++t) {
        group.tandems.push_back(*tandem(i + t, d + p - 2 - t));
    }
    const Span occ = group.members.front().associated;
    const std::size_t head = lf_.runs_span(i + p - 1, group.last_run()).length();
    group.associated = {occ.start + head, occ.end};
    return group;
}

std::vector<PGroup> DomainAnalyzer::find_p_groups() const
{
    // A group is a chain of consecutive tandems that all end at the same run
    // E; maximal groups are maximal chains for a fixed E.
    std::vector<PGroup> out;
    const std::size_t m = lf_.m();
    for (std::size_t last = 2; last <= m; ++last) {
        std::size_t r = 1;
        while (r < last) {
            if (!tandem(r, last - r)) {
                ++r;
                continue;
            }
            std::size_t end = r;
            while (end + 1 < last && tandem(end + 1, last - end - 1)) {
                ++end;
            }
            out.push_back(*p_group(r, end - r + 2, last - end));
            r = end + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const PGroup& a, const PGroup& b) {
        return std::tie(a.i, a.p, a.d) < std::tie(b.i, b.p, b.d);
    });
    return out;
}

std::vector<PGroup> DomainAnalyzer::all_p_groups() const
{
    std::vector<PGroup> out;
    for (const auto& maximal : find_p_groups()) {
        const std::size_t last = maximal.last_run();
        for (std::size_t first = maximal.i; first + 1 < maximal.i + maximal.p; ++first) {
            for (std::size_t back = first + 1; back < maximal.i + maximal.p; ++back) {
                out.push_back(*p_group(first, back - first + 1, last - back + 1));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PGroup& a, const PGroup& b) {
        return std::tie(a.i, a.p, a.d) < std::tie(b.i, b.p, b.d);
    });
    return out;
}

CanonicalDecomposition DomainAnalyzer::canonical_decomposition(const Domain& root) const
{
    return runlz::canonical_decomposition(*this, root);
}

std::vector<PartitionPart> DomainAnalyzer::extdom_partition() const
{
    std::vector<PartitionPart> parts;
    std::size_t last = lf_.m();
    while (last >= 1) {
        const Domain& dom = rows_[last - 1][0];
        parts.push_back({last, dom.size(), dom.extended});
        last = dom.j - 1;
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
}

} // namespace runlz
