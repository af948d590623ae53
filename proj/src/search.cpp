#include "runlz/bounds.hpp"

#include "runlz/lyndon.hpp"
#include "runlz/lz.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace runlz {

namespace {

struct ChunkResult {
    std::uint64_t strings = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
    LengthSummary length;
    std::vector<SearchRecord> records;
    std::vector<CheckResult> lemma_checks;
    std::uint64_t lemma_failures = 0;
    std::string first_lemma_failure;
};

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
    std::uint64_t out = 1;
    for (std::size_t e = 0; e < exp; ++e) {
        if (out > cap / base) {
            return cap + 1;
        }
        out *= base;
    }
    return out;
}

void merge_length(LengthSummary& into, const LengthSummary& part)
{
    if (part.strings == 0) {
        return;
    }
    if (into.strings == 0 || part.max_m_minus_z > into.max_m_minus_z) {
        into.max_m_minus_z = part.max_m_minus_z;
        into.max_m_minus_z_witness = part.max_m_minus_z_witness;
    }
    if (into.strings == 0 || part.max_ratio > into.max_ratio) {
        into.max_ratio = part.max_ratio;
        into.max_ratio_witness = part.max_ratio_witness;
    }
    into.strings += part.strings;
}

void merge_checks(std::vector<CheckResult>& into, const std::vector<CheckResult>& part)
{
    if (into.empty()) {
        into = part;
        return;
    }
    for (std::size_t c = 0; c < into.size(); ++c) {
        into[c].instances += part[c].instances;
        if (into[c].failures == 0 && part[c].failures > 0) {
            into[c].counterexample = part[c].counterexample;
        }
        into[c].failures += part[c].failures;
    }
}

class ChunkRunner {
public:
    ChunkRunner(const SearchOptions& options, bool keep_records, std::atomic<bool>& abort)
        : options_(options), keep_records_(keep_records), abort_(abort)
    {
    }

    // Enumerates all strings of length n whose first prefix_len symbols spell
    // prefix (in base sigma, most significant first).
    ChunkResult run(std::size_t n, std::size_t prefix_len, std::uint64_t prefix) const
    {
        const std::size_t sigma = options_.sigma;
        ChunkResult out;
        out.length.n = n;
        std::string w(n, 'a');
        for (std::size_t pos = prefix_len; pos-- > 0;) {
            w[pos] = static_cast<char>('a' + prefix % sigma);
            prefix /= sigma;
        }
        while (!abort_.load(std::memory_order_relaxed)) {
            if (!options_.dedupe || canonical_relabel(w) == w) {
                visit(w, out);
            }
            // Odometer over the free suffix; a carry out of it ends the chunk.
            bool exhausted = true;
            for (std::size_t pos = n; pos > prefix_len;) {
                --pos;
                if (static_cast<std::size_t>(w[pos] - 'a') + 1 < sigma) {
                    ++w[pos];
                    exhausted = false;
                    break;
                }
                w[pos] = 'a';
            }
            if (exhausted) {
                break;
            }
        }
        return out;
    }

private:
    void visit(const std::string& w, ChunkResult& out) const
    {
        const Text text(w);
        const LZFactorization lz = lz_factorize(text);
        SearchRecord rec{options_.sigma, w.size(), w, 0, lz.z()};
        LemmaReport report;
        if (options_.verify_lemmas) {
            report = verify_lemmas(text);
            rec.m = report.m;
        } else {
            rec.m = lyndon_factorize(text).m();
        }

        ++out.strings;
        LengthSummary& len = out.length;
        if (len.strings == 0 || rec.m_minus_z() > len.max_m_minus_z) {
            len.max_m_minus_z = rec.m_minus_z();
            len.max_m_minus_z_witness = w;
        }
        if (len.strings == 0 || rec.ratio() > len.max_ratio) {
            len.max_ratio = rec.ratio();
            len.max_ratio_witness = w;
        }
        ++len.strings;

        if (rec.slack() < 1) {
            if (out.violations++ == 0) {
                out.first_violation = w;
            }
            abort_.store(true, std::memory_order_relaxed);
        }
        if (options_.verify_lemmas) {
            merge_checks(out.lemma_checks, report.checks);
            if (!report.passed()) {
                if (out.lemma_failures == 0) {
                    for (const auto& c : report.checks) {
                        if (!c.passed()) {
                            out.first_lemma_failure = w + ": " + c.name + ": " + c.counterexample;
                            break;
                        }
                    }
                }
                out.lemma_failures += report.total_failures();
                abort_.store(true, std::memory_order_relaxed);
            }
        }
        if (keep_records_) {
            out.records.push_back(std::move(rec));
        }
    }

    const SearchOptions& options_;
    bool keep_records_;
    std::atomic<bool>& abort_;
};

} // namespace

SearchSummary exhaustive_search(const SearchOptions& options, const RecordSink& sink)
{
    if (options.sigma < 1 || options.sigma > 26) {
        throw std::invalid_argument("alphabet size must be in 1..26, got " + std::to_string(options.sigma));
    }
    if (options.min_len < 1 || options.min_len > options.max_len) {
        throw std::invalid_argument("length range must satisfy 1 <= min-len <= max-len");
    }
    std::uint64_t total = 0;
    for (std::size_t n = options.min_len; n <= options.max_len; ++n) {
        total += checked_pow(options.sigma, n, options.budget);
        if (total > options.budget) {
            throw std::invalid_argument("search of " + std::to_string(options.sigma) + "^" +
                                        std::to_string(options.max_len) + " strings exceeds budget of " +
                                        std::to_string(options.budget));
        }
    }

    SearchSummary summary;
    summary.sigma = options.sigma;
    summary.max_len = options.max_len;
    summary.dedupe = options.dedupe;
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    std::atomic<bool> abort{false};
    const ChunkRunner runner(options, static_cast<bool>(sink), abort);

    for (std::size_t n = options.min_len; n <= options.max_len && !abort.load(); ++n) {
        // Enough prefixes for every worker to stay busy, never longer than n.
        std::size_t prefix_len = 0;
        std::uint64_t chunks = 1;
        while (prefix_len < n && chunks < 8 * jobs) {
            ++prefix_len;
            chunks *= options.sigma;
        }

        std::vector<ChunkResult> results(chunks);
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                results[c] = runner.run(n, prefix_len, c);
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < jobs; ++w) {
                pool.emplace_back(worker);
            }
            for (auto& t : pool) {
                t.join();
            }
        }

        LengthSummary length;
        length.n = n;
        for (auto& r : results) {
            summary.strings += r.strings;
            if (r.violations > 0 && summary.violations == 0) {
                summary.first_violation = r.first_violation;
            }
            summary.violations += r.violations;
            merge_length(length, r.length);
            if (options.verify_lemmas) {
                merge_checks(summary.lemma_checks, r.lemma_checks);
                if (r.lemma_failures > 0 && summary.lemma_failures == 0) {
                    summary.first_lemma_failure = r.first_lemma_failure;
                }
                summary.lemma_failures += r.lemma_failures;
            }
            if (sink) {
                for (const auto& rec : r.records) {
                    sink(rec);
                }
            }
        }
        length.n = n;
        summary.per_length.push_back(std::move(length));
    }
    return summary;
}

} // namespace runlz
