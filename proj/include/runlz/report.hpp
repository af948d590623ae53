#pragma once

// JSON and TSV renderings of analysis results. Spans are 1-based inclusive
// objects {start, end, length}; byte strings go through escape_bytes.

#include "runlz/bounds.hpp"
#include "runlz/domains.hpp"
#include "runlz/lyndon.hpp"
#include "runlz/lz.hpp"
#include "runlz/verify.hpp"

#include "json.hpp"

#include <string>

namespace runlz::report {

using nlohmann::json;

json span(const Span& s);
json runs(const Text& s, const LyndonFactorization& lf);
json phrases(const Text& s, const LZFactorization& lz);
json domain(const Domain& d);
json tandem(const TandemDomain& t);
json group(const PGroup& g);
json decomposition(const CanonicalDecomposition& cd);
json budget(const BoundaryBudget& b);
json partition(const Partition& p);
json theorem(const TheoremReport& t);
json verdicts(const LemmaReport& r);
json search_summary(const SearchSummary& s);

/// Column names of the search record stream.
std::string tsv_header();
/// sigma, n, string, m, z, slack separated by tabs (no trailing newline).
std::string tsv_line(const SearchRecord& r);

} // namespace runlz::report
