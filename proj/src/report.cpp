#include "runlz/report.hpp"

namespace runlz::report {

namespace {

json domain_ref(const Domain& d)
{
    return {{"i", d.i}, {"d", d.d}, {"j", d.j}};
}

} // namespace

json span(const Span& s)
{
    return {{"start", s.start}, {"end", s.end}, {"length", s.length()}};
}

json runs(const Text& s, const LyndonFactorization& lf)
{
    json out = json::array();
    for (std::size_t i = 1; i <= lf.m(); ++i) {
        const auto& r = lf.run(i);
        out.push_back({{"index", i},
                       {"factor", span(r.factor)},
                       {"factor_text", escape_bytes(s.slice(r.factor))},
                       {"exponent", r.exponent},
                       {"run", span(r.run)}});
    }
    return out;
}

json phrases(const Text& s, const LZFactorization& lz)
{
    json out = json::array();
    for (std::size_t p = 0; p < lz.z(); ++p) {
        out.push_back({{"index", p + 1}, {"span", span(lz.phrases[p])}, {"text", escape_bytes(s.slice(lz.phrases[p]))}});
    }
    return out;
}

json domain(const Domain& d)
{
    json out = domain_ref(d);
    out["size"] = d.size();
    out["empty"] = d.empty();
    out["span"] = span(d.span);
    out["extended"] = span(d.extended);
    out["associated"] = span(d.associated);
    return out;
}

json tandem(const TandemDomain& t)
{
    return {{"i", t.i},
            {"d", t.d},
            {"inner", domain_ref(t.inner)},
            {"outer", domain_ref(t.outer)},
            {"extended", span(t.inner.extended)},
            {"associated", span(t.associated)}};
}

json group(const PGroup& g)
{
    json members = json::array();
    for (const auto& m : g.members) {
        members.push_back(domain_ref(m));
    }
    json tandems = json::array();
    for (const auto& t : g.tandems) {
        tandems.push_back(span(t.associated));
    }
    return {{"i", g.i},
            {"p", g.p},
            {"d", g.d},
            {"members", members},
            {"extended", span(g.members.front().extended)},
            {"tandem_associated", tandems},
            {"associated", span(g.associated)}};
}

json decomposition(const CanonicalDecomposition& cd)
{
    json parts = json::array();
    for (const auto& part : cd.parts) {
        json domains = json::array();
        for (const auto& d : part.domains) {
            domains.push_back(domain(d));
        }
        parts.push_back({{"kind", part.is_cluster() ? "cluster" : "loose"}, {"domains", domains}});
    }
    return {{"root", domain(cd.root)}, {"cluster_sizes", cd.cluster_sizes()}, {"t", cd.t()}, {"parts", parts}};
}

json budget(const BoundaryBudget& b)
{
    return {{"k", b.k},
            {"ell", b.ell},
            {"d", b.d},
            {"d_h", b.d_h},
            {"k_h", b.k_h},
            {"t", b.t},
            {"S", b.S},
            {"loose_total", b.loose_total},
            {"total", b.total},
            {"lower_bound", b.lower_bound}};
}

json partition(const Partition& p)
{
    json out = json::array();
    for (const auto& part : p.parts) {
        out.push_back({{"run", part.run}, {"k", part.k}, {"span", span(part.span)}});
    }
    return out;
}

json theorem(const TheoremReport& t)
{
    return {{"m", t.m}, {"z", t.z}, {"t", t.t}, {"passes", t.passes}, {"slack", t.slack}};
}

json verdicts(const LemmaReport& r)
{
    json out = json::object();
    for (const auto& c : r.checks) {
        json entry = {{"passed", c.passed()},
                      {"statement", c.statement},
                      {"instances", c.instances},
                      {"failures", c.failures}};
        if (!c.passed()) {
            entry["counterexample"] = c.counterexample;
        }
        out[c.name] = entry;
    }
    return out;
}

json search_summary(const SearchSummary& s)
{
    json lengths = json::array();
    for (const auto& l : s.per_length) {
        lengths.push_back({{"n", l.n},
                           {"strings", l.strings},
                           {"max_m_minus_z", l.max_m_minus_z},
                           {"max_m_minus_z_witness", escape_bytes(l.max_m_minus_z_witness)},
                           {"max_ratio", l.max_ratio},
                           {"max_ratio_witness", escape_bytes(l.max_ratio_witness)}});
    }
    json out = {{"sigma", s.sigma},
                {"max_len", s.max_len},
                {"dedupe", s.dedupe},
                {"strings", s.strings},
                {"violations", s.violations},
                {"per_length", lengths}};
    if (s.violations > 0) {
        out["first_violation"] = escape_bytes(s.first_violation);
    }
    if (!s.lemma_checks.empty()) {
        json checks = json::object();
        for (const auto& c : s.lemma_checks) {
            checks[c.name] = {{"instances", c.instances}, {"failures", c.failures}};
        }
        out["lemma_checks"] = checks;
        out["lemma_failures"] = s.lemma_failures;
        if (s.lemma_failures > 0) {
            out["first_lemma_failure"] = escape_bytes(s.first_lemma_failure);
        }
    }
    return out;
}

std::string tsv_header()
{
    return "sigma\tn\tstring\tm\tz\tslack";
}

std::string tsv_line(const SearchRecord& r)
{
    return std::to_string(r.sigma) + '\t' + std::to_string(r.n) + '\t' + escape_bytes(r.text) + '\t' +
           std::to_string(r.m) + '\t' + std::to_string(r.z) + '\t' + std::to_string(r.slack());
}

} // namespace runlz::report
