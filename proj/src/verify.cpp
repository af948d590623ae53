#include "runlz/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace runlz {

namespace {

struct CheckSpec {
    const char* name;
    const char* statement;
};

constexpr CheckSpec kChecks[] = {
    {"lyndon.factorization", "runs tile s, factors are Lyndon, strictly decreasing, and reassemble s"},
    {"lyndon.f_vs_F", "f_j > F_i for all j < i"},
    {"domain.prev_occ_prefix", "leftmost occurrence of F_i..F_{i+d-1} starts at F_j and is a prefix of f_j"},
    {"domain.prev_occ_between", "F_i..F_{i+d-1} is a prefix of f_t for every j < t < i"},
    {"domain.prop_suffix", "dom_{d'}(F_i) is a suffix of dom_d(F_i) for d' > d"},
    {"domain.prop_substring", "dom_{d'}(F_k) lies inside dom_d(F_i) for j <= k < i"},
    {"domain.laminar", "two domain spans are nested or disjoint"},
    {"domain.associated_boundary", "the substring associated with a domain contains a phrase start"},
    {"domain.extdom_budget", "extdom of a size-k domain contains at least ceil(k/2) + 1 phrase starts"},
    {"tandem.structure", "dom_{d+1}(F_i) F_i = dom_d(F_{i+1}); associated = x F_{i+1}..F_{i+d} with |associated| = |F_i|"},
    {"tandem.within_extdom", "tandem associated substring lies inside extdom_{d+1}(F_i)"},
    {"tandem.associated_boundary", "the substring associated with a tandem domain contains a phrase start"},
    {"tandem.disjoint_no_overlap", "associated substrings of disjoint tandem domains do not overlap"},
    {"group.tandems_no_overlap", "associated substrings of tandems in one p-group do not overlap"},
    {"group.concatenation", "p-group associated substring = its tandems' associated substrings in reverse order"},
    {"group.boundaries", "p-group associated substring contains at least p - 1 phrase starts"},
    {"group.disjoint_no_overlap", "associated substrings of disjoint p-groups do not overlap"},
    {"subdomain.domain_vs_tandem", "a tandem of subdomains does not overlap the domain's associated substring"},
    {"canonical.structure", "canonical decomposition tiles extdom and alternates clusters correctly"},
    {"canonical.budget", "budget identities hold and extdom holds at least 1 + sum(ceil(k_h/2) + 1) + S starts"},
    {"theorem.m_lt_2z", "m < 2z"},
    {"theorem.partition", "extdom_1 partition tiles s and z >= ceil((m + t) / 2)"},
};

std::size_t ceil_half(std::size_t k) { return (k + 1) / 2; }

std::string dom_name(const Domain& d)
{
    return "dom_" + std::to_string(d.d) + "(F_" + std::to_string(d.i) + ")";
}

std::string tandem_name(const TandemDomain& t)
{
    return "tandem(" + dom_name(t.inner) + ", " + dom_name(t.outer) + ")";
}

std::string group_name(const PGroup& g)
{
    return std::to_string(g.p) + "-group(F_" + std::to_string(g.i) + ", base order " + std::to_string(g.d) + ")";
}

bool starts_with(std::string_view whole, std::string_view prefix)
{
    return whole.size() >= prefix.size() && whole.substr(0, prefix.size()) == prefix;
}

bool is_subdomain(std::size_t k, std::size_t e, const Domain& root)
{
    if (k == root.i && e == root.d) {
        return true;
    }
    return root.j <= k && k < root.i && k + e <= root.i + root.d;
}

class Recorder {
public:
    Recorder()
    {
        for (const auto& spec : kChecks) {
            results_.push_back({spec.name, spec.statement, 0, 0, {}});
        }
    }

    CheckResult& operator[](std::string_view name)
    {
        for (auto& r : results_) {
            if (r.name == name) {
                return r;
            }
        }
        throw std::out_of_range("unknown check " + std::string(name));
    }

    template <typename Witness>
    static void expect(CheckResult& check, bool ok, Witness&& witness)
    {
        ++check.instances;
        if (!ok && check.failures++ == 0) {
            check.counterexample = witness();
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void check_lyndon(const Text& s, const LyndonFactorization& lf, Recorder& rec)
{
    auto& fact = rec["lyndon.factorization"];
    std::size_t next = 1;
    for (std::size_t i = 1; i <= lf.m(); ++i) {
        const auto& r = lf.run(i);
        const auto factor = s.slice(r.factor);
        bool ok = r.run.start == next && r.factor.start == r.run.start && r.exponent >= 1 &&
                  r.run.length() == r.exponent * r.factor.length() && is_lyndon(factor);
        if (ok && i + 1 <= lf.m()) {
            ok = lex_compare(factor, s.slice(lf.run(i + 1).factor)) == std::strong_ordering::greater;
        }
        next = r.run.end + 1;
        Recorder::expect(fact, ok, [&] { return "run F_" + std::to_string(i) + " " + to_string(r.run); });
    }
    Recorder::expect(fact, reassemble(s, lf) == s.str() && next == s.size() + 1,
                     [] { return std::string("runs do not reassemble the input"); });

    auto& fvf = rec["lyndon.f_vs_F"];
    for (std::size_t i = 2; i <= lf.m(); ++i) {
        const auto run = s.slice(lf.run(i).run);
        for (std::size_t j = 1; j < i; ++j) {
            const bool ok = lex_compare(s.slice(lf.run(j).factor), run) == std::strong_ordering::greater;
            Recorder::expect(fvf, ok, [&] { return "f_" + std::to_string(j) + " <= F_" + std::to_string(i); });
        }
    }
}

void check_domains(const DomainAnalyzer& an, const LZFactorization& lz, Recorder& rec)
{
    const Text& s = an.text();
    const auto& lf = an.factorization();
    const std::size_t m = lf.m();
    const auto domains = an.all_domains();

    auto& prefix = rec["domain.prev_occ_prefix"];
    auto& between = rec["domain.prev_occ_between"];
    auto& assoc = rec["domain.associated_boundary"];
    auto& budget = rec["domain.extdom_budget"];
    for (const auto& dom : domains) {
        const auto block = s.slice(lf.runs_span(dom.i, dom.i + dom.d - 1));
        if (dom.empty()) {
            Recorder::expect(prefix, dom.associated.start == lf.run(dom.i).run.start,
                             [&] { return dom_name(dom) + " is empty but its associated span is " +
                                          to_string(dom.associated); });
        } else {
            const bool ok = dom.associated.start == lf.run(dom.j).run.start &&
                            starts_with(s.slice(lf.run(dom.j).factor), block);
            Recorder::expect(prefix, ok, [&] {
                return dom_name(dom) + " associated " + to_string(dom.associated) + " is not a prefix of f_" +
                       std::to_string(dom.j);
            });
            for (std::size_t t = dom.j + 1; t < dom.i; ++t) {
                Recorder::expect(between, starts_with(s.slice(lf.run(t).factor), block), [&] {
                    return "F_" + std::to_string(dom.i) + "..F_" + std::to_string(dom.i + dom.d - 1) +
                           " is not a prefix of f_" + std::to_string(t);
                });
            }
        }
        Recorder::expect(assoc, contains_boundary(lz, dom.associated),
                         [&] { return dom_name(dom) + " associated " + to_string(dom.associated); });
        const std::size_t count = count_boundaries(lz, dom.extended);
        Recorder::expect(budget, count >= ceil_half(dom.size()) + 1, [&] {
            return dom_name(dom) + " extdom " + to_string(dom.extended) + " holds " + std::to_string(count) +
                   " phrase starts for size " + std::to_string(dom.size());
        });
    }

    auto& suffix = rec["domain.prop_suffix"];
    auto& inside = rec["domain.prop_substring"];
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t d = 1; i + d - 1 <= m; ++d) {
            const Domain dom = an.domain(i, d);
            for (std::size_t d2 = d + 1; i + d2 - 1 <= m; ++d2) {
                const Domain wider = an.domain(i, d2);
                Recorder::expect(suffix, wider.j >= dom.j && wider.span.end == dom.span.end,
                                 [&] { return dom_name(wider) + " is not a suffix of " + dom_name(dom); });
            }
            if (dom.empty()) {
                continue;
            }
            for (std::size_t k = dom.j; k < i; ++k) {
                for (std::size_t d2 = 1; k + d2 - 1 <= m; ++d2) {
                    const Domain sub = an.domain(k, d2);
                    Recorder::expect(inside, sub.j >= dom.j && sub.span.within(dom.span),
                                     [&] { return dom_name(sub) + " leaves " + dom_name(dom); });
                }
            }
        }
    }

    auto& laminar = rec["domain.laminar"];
    std::set<std::pair<std::size_t, std::size_t>> unique_spans;
    for (const auto& dom : domains) {
        if (!dom.empty()) {
            unique_spans.emplace(dom.span.start, dom.span.end);
        }
    }
    const std::vector<std::pair<std::size_t, std::size_t>> spans(unique_spans.begin(), unique_spans.end());
    for (std::size_t a = 0; a < spans.size(); ++a) {
        for (std::size_t b = a + 1; b < spans.size(); ++b) {
            const Span x{spans[a].first, spans[a].second};
            const Span y{spans[b].first, spans[b].second};
            const bool ok = !x.overlaps(y) || x.within(y) || y.within(x);
            Recorder::expect(laminar, ok, [&] { return to_string(x) + " crosses " + to_string(y); });
        }
    }
}

void check_tandems_and_groups(const DomainAnalyzer& an, const LZFactorization& lz, Recorder& rec)
{
    const Text& s = an.text();
    const auto& lf = an.factorization();
    const auto tandems = an.find_tandem_domains();

    auto& structure = rec["tandem.structure"];
    auto& within = rec["tandem.within_extdom"];
    auto& boundary = rec["tandem.associated_boundary"];
    for (const auto& td : tandems) {
        const Span run_i = lf.run(td.i).run;
        const auto tail = s.slice(lf.runs_span(td.i + 1, td.i + td.d));
        const auto occurrence = s.slice(td.inner.associated);
        bool ok = td.inner.extended == td.outer.extended && td.outer.span.start == td.inner.span.start &&
                  td.outer.span.end == run_i.end && td.associated.length() == run_i.length() &&
                  starts_with(occurrence, tail);
        if (ok) {
            const std::string expected = std::string(s.slice(run_i).substr(tail.size())) + std::string(tail);
            ok = s.slice(td.associated) == expected;
        }
        Recorder::expect(structure, ok, [&] { return tandem_name(td) + " associated " + to_string(td.associated); });
        Recorder::expect(within, td.associated.within(td.inner.extended),
                         [&] { return tandem_name(td) + " associated " + to_string(td.associated); });
        Recorder::expect(boundary, contains_boundary(lz, td.associated),
                         [&] { return tandem_name(td) + " associated " + to_string(td.associated); });
    }

    auto& disjoint = rec["tandem.disjoint_no_overlap"];
    for (const auto& a : tandems) {
        for (const auto& b : tandems) {
            if (a.i + 1 < b.i) {
                Recorder::expect(disjoint, !a.associated.overlaps(b.associated),
                                 [&] { return tandem_name(a) + " overlaps " + tandem_name(b); });
            }
        }
    }

    auto& in_group = rec["group.tandems_no_overlap"];
    for (const auto& g : an.find_p_groups()) {
        for (std::size_t x = 0; x < g.tandems.size(); ++x) {
            for (std::size_t y = x + 1; y < g.tandems.size(); ++y) {
                Recorder::expect(in_group, !g.tandems[x].associated.overlaps(g.tandems[y].associated), [&] {
                    return group_name(g) + ": " + tandem_name(g.tandems[x]) + " overlaps " + tandem_name(g.tandems[y]);
                });
            }
        }
    }

    const auto groups = an.all_p_groups();
    auto& concat = rec["group.concatenation"];
    auto& counted = rec["group.boundaries"];
    for (const auto& g : groups) {
        const auto head = s.slice(lf.runs_span(g.i + g.p - 1, g.last_run()));
        bool ok = starts_with(s.slice(g.members.front().associated), head);
        std::size_t cursor = g.associated.start;
        for (auto it = g.tandems.rbegin(); ok && it != g.tandems.rend(); ++it) {
            ok = it->associated.start == cursor;
            cursor = it->associated.end + 1;
        }
        ok = ok && cursor == g.associated.end + 1;
        Recorder::expect(concat, ok, [&] { return group_name(g) + " associated " + to_string(g.associated); });

        const std::size_t count = g.associated.empty() ? 0 : count_boundaries(lz, g.associated);
        Recorder::expect(counted, count + 1 >= g.p, [&] {
            return group_name(g) + " associated " + to_string(g.associated) + " holds " + std::to_string(count);
        });
    }

    auto& group_disjoint = rec["group.disjoint_no_overlap"];
    for (const auto& a : groups) {
        for (const auto& b : groups) {
            if (a.i + a.p - 1 < b.i) {
                Recorder::expect(group_disjoint, !a.associated.overlaps(b.associated),
                                 [&] { return group_name(a) + " overlaps " + group_name(b); });
            }
        }
    }

    auto& vs = rec["subdomain.domain_vs_tandem"];
    for (const auto& dom : an.all_domains()) {
        if (dom.empty()) {
            continue;
        }
        for (const auto& td : tandems) {
            if (!is_subdomain(td.i, td.d + 1, dom) || !is_subdomain(td.i + 1, td.d, dom)) {
                continue;
            }
            Recorder::expect(vs, !td.associated.overlaps(dom.associated),
                             [&] { return tandem_name(td) + " overlaps the associated span of " + dom_name(dom); });
        }
    }
}

void check_canonical(const DomainAnalyzer& an, const LZFactorization& lz, Recorder& rec)
{
    const auto& lf = an.factorization();
    auto& structure = rec["canonical.structure"];
    auto& budget_check = rec["canonical.budget"];
    for (const auto& root : an.all_domains()) {
        if (root.empty()) {
            continue;
        }
        CanonicalDecomposition cd;
        std::string problem;
        try {
            cd = an.canonical_decomposition(root);
        } catch (const std::logic_error& e) {
            problem = e.what();
        }

        if (problem.empty()) {
            const auto& parts = cd.parts;
            if (parts.empty() || !parts.front().is_cluster() || !parts.back().is_cluster() ||
                parts.back().domains.back() != root) {
                problem = "decomposition must start with a cluster and end with the root's cluster";
            }
            for (std::size_t p = 0; problem.empty() && p < parts.size(); ++p) {
                const auto& part = parts[p];
                if (part.is_cluster() && p + 1 < parts.size() && parts[p + 1].is_cluster()) {
                    problem = "adjacent clusters";
                }
                for (const auto& dom : part.domains) {
                    if (!dom.extended.within(root.extended) || (part.is_cluster() != (dom.j == root.j))) {
                        problem = dom_name(dom) + " misplaced";
                    }
                }
                if (part.is_cluster() && part.domains.size() >= 2) {
                    const auto& first = part.domains.front();
                    const auto group = an.p_group(first.i, part.domains.size(), part.domains.back().d);
                    if (!group || group->members != part.domains) {
                        problem = "cluster at F_" + std::to_string(first.i) + " is not a p-group";
                    }
                }
            }
            const auto& leftmost = parts.front().domains;
            for (std::size_t x = 0; problem.empty() && x < leftmost.size(); ++x) {
                if (leftmost[x].i != root.j + x) {
                    problem = "leftmost cluster does not start at F_j";
                }
            }
            if (problem.empty() && cd.t() == 0) {
                if (leftmost.size() != root.size() + 1) {
                    problem = "single cluster does not cover the root";
                }
            } else if (problem.empty()) {
                // extdom = F_j..F_{j+ell-1} extdom(loose_1) ... extdom(loose_t)
                std::size_t cursor = lf.run(root.j + leftmost.size() - 1).run.end + 1;
                for (const auto& loose : cd.loose()) {
                    if (loose.extended.start != cursor) {
                        problem = "loose " + dom_name(loose) + " does not continue the tiling at " +
                                  std::to_string(cursor);
                        break;
                    }
                    cursor = loose.extended.end + 1;
                }
                if (problem.empty() && cursor != root.extended.end + 1) {
                    problem = "loose extended domains stop before the end of extdom";
                }
            }
        }
        Recorder::expect(structure, problem.empty(), [&] { return dom_name(root) + ": " + problem; });
        if (!problem.empty()) {
            continue;
        }

        std::string budget_problem;
        try {
            const BoundaryBudget b = boundary_budget(cd);
            const std::size_t actual = count_boundaries(lz, root.extended);
            if (actual < b.total) {
                budget_problem = "extdom holds " + std::to_string(actual) + " phrase starts, budget " +
                                 std::to_string(b.total);
            }
            if (budget_problem.empty() && b.t > 0) {
                const Span region = lf.runs_span(root.j, root.j + b.ell - 1);
                const std::size_t head = count_boundaries(lz, region);
                if (head < 1 + b.S) {
                    budget_problem = "leftmost cluster region " + to_string(region) + " holds " +
                                     std::to_string(head) + " phrase starts, expected 1 + S = " +
                                     std::to_string(1 + b.S);
                }
            }
        } catch (const std::logic_error& e) {
            budget_problem = e.what();
        }
        Recorder::expect(budget_check, budget_problem.empty(), [&] { return dom_name(root) + ": " + budget_problem; });
    }
}

void check_theorem(const DomainAnalyzer& an, const LZFactorization& lz, Recorder& rec)
{
    const std::size_t m = an.factorization().m();
    const std::size_t z = lz.z();
    if (an.text().empty()) {
        return;
    }
    Recorder::expect(rec["theorem.m_lt_2z"], m < 2 * z,
                     [&] { return "m = " + std::to_string(m) + ", z = " + std::to_string(z); });

    const auto parts = an.extdom_partition();
    std::string problem;
    std::size_t cursor = 1;
    std::size_t sum_k = 0;
    for (const auto& part : parts) {
        if (part.span.start != cursor) {
            problem = "part for F_" + std::to_string(part.run) + " starts at " + std::to_string(part.span.start);
            break;
        }
        cursor = part.span.end + 1;
        sum_k += part.k;
        const std::size_t count = count_boundaries(lz, part.span);
        if (count < ceil_half(part.k) + 1) {
            problem = "part " + to_string(part.span) + " holds " + std::to_string(count) + " phrase starts";
            break;
        }
    }
    const std::size_t t = parts.size();
    if (problem.empty() && (cursor != an.text().size() + 1 || parts.back().run != m || sum_k != m - t)) {
        problem = "partition does not tile s";
    }
    if (problem.empty() && z < ceil_half(m + t)) {
        problem = "z = " + std::to_string(z) + " < ceil((m + t) / 2) with t = " + std::to_string(t);
    }
    Recorder::expect(rec["theorem.partition"], problem.empty(), [&] { return problem; });
}

} // namespace

bool LemmaReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t LemmaReport::total_failures() const
{
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.failures;
    }
    return total;
}

const CheckResult& LemmaReport::check(std::string_view name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("unknown check " + std::string(name));
}

const std::vector<std::string>& lemma_check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& spec : kChecks) {
            out.emplace_back(spec.name);
        }
        return out;
    }();
    return names;
}

LemmaReport verify_lemmas(const DomainAnalyzer& analyzer, const LZFactorization& lz)
{
    Recorder rec;
    check_lyndon(analyzer.text(), analyzer.factorization(), rec);
    check_domains(analyzer, lz, rec);
    check_tandems_and_groups(analyzer, lz, rec);
    check_canonical(analyzer, lz, rec);
    check_theorem(analyzer, lz, rec);

    LemmaReport report;
    report.input_length = analyzer.text().size();
    report.m = analyzer.factorization().m();
    report.z = lz.z();
    report.checks = rec.take();
    return report;
}

LemmaReport verify_lemmas(const Text& s)
{
    const LZFactorization lz = lz_factorize(s);
    try {
        const DomainAnalyzer analyzer(s);
        return verify_lemmas(analyzer, lz);
    } catch (const std::logic_error& e) {
        // Domain construction itself failed: a leftmost occurrence did not
        // start at a run boundary.
        Recorder rec;
        auto& prefix = rec["domain.prev_occ_prefix"];
        prefix.instances = 1;
        prefix.failures = 1;
        prefix.counterexample = e.what();
        LemmaReport report;
        report.input_length = s.size();
        report.m = lyndon_factorize(s).m();
        report.z = lz.z();
        report.checks = rec.take();
        return report;
    }
}

} // namespace runlz
