#pragma once

// Domains over a Lyndon factorization and the structures built from them:
// tandem domains, p-groups, canonical subdomain decompositions and the
// phrase-boundary budget of an extended domain.
//
// Notation follows the reports: runs are F_1..F_m (1-based), dom_d(F_i) is
// the block F_j..F_{i-1} that ends right before F_i and starts where the
// leftmost occurrence of F_i..F_{i+d-1} starts, extdom_d(F_i) appends
// F_i..F_{i+d-1} to it.

#include "runlz/lyndon.hpp"
#include "runlz/lz.hpp"
#include "runlz/text.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace runlz {

struct Domain {
    std::size_t i = 0; ///< run the domain belongs to
    std::size_t d = 0; ///< order
    std::size_t j = 0; ///< anchor run; j == i for an empty domain
    Span span;         ///< F_j..F_{i-1}, or empty_at(start of F_i)
    Span extended;     ///< span followed by F_i..F_{i+d-1}
    Span associated;   ///< leftmost occurrence of F_i..F_{i+d-1}

    std::size_t size() const { return i - j; }
    bool empty() const { return j == i; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// Source of domains by (run, order). Implemented by DomainAnalyzer for real
/// strings; the canonical scan only needs this view.
class DomainLookup {
public:
    virtual ~DomainLookup() = default;
    virtual std::size_t run_count() const = 0;
    /// dom_d(F_i); throws std::invalid_argument when i + d - 1 > m.
    virtual Domain domain(std::size_t i, std::size_t d) const = 0;
};

/// Pair dom_{d+1}(F_i), dom_d(F_{i+1}) with a common extended domain.
struct TandemDomain {
    std::size_t i = 0;
    std::size_t d = 0;
    Domain inner; ///< dom_{d+1}(F_i)
    Domain outer; ///< dom_d(F_{i+1})
    /// Suffix x F_{i+1}..F_{i+d} (length |F_i|) of the leftmost occurrence
    /// of F_i..F_{i+d}.
    Span associated;
};

/// p consecutive domains dom_{d+p-1}(F_i), ..., dom_d(F_{i+p-1}) sharing one
/// extended domain.
struct PGroup {
    std::size_t i = 0;
    std::size_t p = 0;
    std::size_t d = 0;
    std::vector<Domain> members;        ///< left to right
    std::vector<TandemDomain> tandems;  ///< p - 1 consecutive pairs, left to right
    /// Suffix x F_{i+1}..F_{i+p+d-2} of the leftmost occurrence of
    /// F_i..F_{i+p+d-2}, where that occurrence starts with F_{i+p-1}..F_{i+p+d-2}.
    Span associated;

    /// Index of the last run referenced by any member's extended domain.
    std::size_t last_run() const { return i + p + d - 2; }
};

struct CanonicalPart {
    enum class Kind { cluster, loose };
    Kind kind = Kind::cluster;
    /// Cluster members left to right (by run), or the single loose subdomain.
    std::vector<Domain> domains;

    bool is_cluster() const { return kind == Kind::cluster; }
};

struct CanonicalDecomposition {
    Domain root;
    /// Clusters and loose subdomains ordered left to right by run index. The
    /// first entry is the cluster holding a domain of F_j, the last one holds
    /// the root.
    std::vector<CanonicalPart> parts;

    std::vector<std::size_t> cluster_sizes() const;
    std::vector<Domain> loose() const;
    std::size_t t() const { return loose().size(); }
};

struct BoundaryBudget {
    std::size_t k = 0;   ///< root size
    std::size_t ell = 0; ///< size of the leftmost cluster
    std::size_t d = 0;   ///< root order
    std::vector<std::size_t> d_h; ///< loose orders, left to right
    std::vector<std::size_t> k_h; ///< loose sizes, left to right
    std::size_t t = 0;
    std::size_t S = 0;           ///< boundaries contributed by clusters: sum of (size - 1)
    std::size_t loose_total = 0; ///< sum of (ceil(k_h / 2) + 1)
    std::size_t total = 0;       ///< 1 + loose_total + S
    std::size_t lower_bound = 0; ///< ceil(k / 2) + 1
};

/// One part of the right-to-left extended-domain partition of the whole text.
struct PartitionPart {
    std::size_t run = 0; ///< i_h; the part is extdom_1(F_{i_h})
    std::size_t k = 0;   ///< size of dom_1(F_{i_h})
    Span span;
};

/// dom_d(F_i) computed from a text and its factorization.
/// Throws std::invalid_argument("order exceeds factorization") when
/// i + d - 1 > m (or i, d < 1), and std::logic_error when the leftmost
/// occurrence does not start at a run boundary.
Domain compute_domain(const Text& s, const LyndonFactorization& lf, std::size_t i, std::size_t d);

inline Span extended_domain(const Domain& dom) { return dom.extended; }

/// Runs the right-to-left canonical subdomain scan of a non-empty root.
/// Throws std::invalid_argument("decomposition undefined for empty domain")
/// for an empty root.
CanonicalDecomposition canonical_decomposition(const DomainLookup& lookup, const Domain& root);

/// Fills the budget for a decomposition and checks its counting identities.
/// Throws std::logic_error("budget inconsistency: ...") when an identity or
/// the final lower-bound chain does not hold.
BoundaryBudget boundary_budget(const CanonicalDecomposition& cd);

/// All domains of one string, precomputed for every (i, d) with
/// i + d - 1 <= m.
class DomainAnalyzer final : public DomainLookup {
public:
    explicit DomainAnalyzer(Text s);
    DomainAnalyzer(Text s, LyndonFactorization lf);

    const Text& text() const { return text_; }
    const LyndonFactorization& factorization() const { return lf_; }

    std::size_t run_count() const override { return lf_.m(); }
    Domain domain(std::size_t i, std::size_t d) const override;

    /// Every (i, d), ascending i then d.
    std::vector<Domain> all_domains() const;

    /// Tandem test for the pair dom_{d+1}(F_i), dom_d(F_{i+1}).
    std::optional<TandemDomain> tandem(std::size_t i, std::size_t d) const;
    /// All tandem domains, ascending i then d.
    std::vector<TandemDomain> find_tandem_domains() const;

    /// The p-group starting at F_i with base order d, if it is one.
    std::optional<PGroup> p_group(std::size_t i, std::size_t p, std::size_t d) const;
    /// Groups that cannot be extended by another member on either side.
    std::vector<PGroup> find_p_groups() const;
    /// Every p-group (p >= 2), including those contained in larger ones.
    std::vector<PGroup> all_p_groups() const;

    CanonicalDecomposition canonical_decomposition(const Domain& root) const;

    /// s = extdom_1(F_{i_1}) ... extdom_1(F_{i_t}) with i_t = m, built by
    /// stripping extdom_1 of the last remaining run.
    std::vector<PartitionPart> extdom_partition() const;

private:
    Text text_;
    LyndonFactorization lf_;
    std::vector<std::vector<Domain>> rows_; // rows_[i - 1][d - 1]
};

} // namespace runlz
