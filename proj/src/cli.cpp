#include "runlz/cli.hpp"

#include "runlz/bounds.hpp"
#include "runlz/domains.hpp"
#include "runlz/lyndon.hpp"
#include "runlz/lz.hpp"
#include "runlz/report.hpp"
#include "runlz/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace runlz::cli {

namespace {

using report::json;

std::size_t default_jobs()
{
    if (const char* env = std::getenv(kJobsEnv)) {
        try {
            const auto parsed = std::stoul(env);
            if (parsed > 0) {
                return parsed;
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct InputFlags {
    std::optional<std::string> literal;
    std::string path;
    bool strip = false;
    bool keep = false;
    std::string format = "human";
};

void add_input(CLI::App& sub, InputFlags& flags, bool with_format = true)
{
    auto* text = sub.add_option("--text", flags.literal, "Analyse this literal string");
    auto* file = sub.add_option("--file", flags.path, "Read the input bytes from a file");
    text->excludes(file);
    auto* strip = sub.add_flag("--strip-newline", flags.strip, "Remove one trailing line terminator");
    auto* keep = sub.add_flag("--keep-newline", flags.keep, "Keep a trailing line terminator on standard input");
    strip->excludes(keep);
    if (with_format) {
        sub.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    }
}

OutputFormat parse_format(const std::string& name)
{
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "tsv") {
        return OutputFormat::tsv;
    }
    return OutputFormat::human;
}

Text read_input(const RunConfig& config, std::istream& in)
{
    std::string bytes;
    bool strip = config.strip_newline.value_or(false);
    switch (config.source) {
    case InputSource::literal:
        bytes = config.literal;
        break;
    case InputSource::file: {
        std::ifstream file(config.path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot read input file '" + config.path + "'");
        }
        bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        if (file.bad()) {
            throw std::invalid_argument("error while reading '" + config.path + "'");
        }
        break;
    }
    case InputSource::standard_input:
        bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        strip = config.strip_newline.value_or(true);
        break;
    }
    if (strip && !bytes.empty() && bytes.back() == '\n') {
        bytes.pop_back();
        if (!bytes.empty() && bytes.back() == '\r') {
            bytes.pop_back();
        }
    }
    return Text(std::move(bytes));
}

std::string dom_label(const Domain& d)
{
    return "dom_" + std::to_string(d.d) + "(F_" + std::to_string(d.i) + ")";
}

std::string dom_line(const Domain& d)
{
    std::string line = dom_label(d) + " = ";
    if (d.empty()) {
        line += "empty";
    } else if (d.j + 1 == d.i) {
        line += "F_" + std::to_string(d.j) + " " + to_string(d.span);
    } else {
        line += "F_" + std::to_string(d.j) + "..F_" + std::to_string(d.i - 1) + " " + to_string(d.span);
    }
    return line + "  k=" + std::to_string(d.size()) + " extdom " + to_string(d.extended) + " associated " +
           to_string(d.associated);
}

void emit(std::ostream& out, const json& doc)
{
    out << doc.dump(2) << '\n';
}

int cmd_lyndon(const RunConfig& config, const Text& s, std::ostream& out, std::ostream& err)
{
    const LyndonFactorization lf = lyndon_factorize(s);
    bool oracle_ok = true;
    if (config.oracle_check) {
        oracle_ok = oracle_lyndon_dp(s, s.size()) == lf;
    }
    if (config.format == OutputFormat::json) {
        json doc = {{"input_len", s.size()}, {"m", lf.m()}, {"runs", report::runs(s, lf)}};
        if (config.oracle_check) {
            doc["verdicts"] = {{"oracle_lyndon_dp", oracle_ok}};
        }
        emit(out, doc);
    } else {
        out << "input_len=" << s.size() << " m=" << lf.m() << '\n';
        for (std::size_t i = 1; i <= lf.m(); ++i) {
            const auto& r = lf.run(i);
            out << "F_" << i << ' ' << to_string(r.run) << ' ' << escape_bytes(s.slice(r.factor)) << '^'
                << r.exponent << '\n';
        }
        if (config.oracle_check) {
            out << "oracle_lyndon_dp: " << (oracle_ok ? "match" : "MISMATCH") << '\n';
        }
    }
    if (!oracle_ok) {
        err << "defect: Lyndon factorization disagrees with the brute-force oracle\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_lz(const RunConfig& config, const Text& s, std::ostream& out, std::ostream& err)
{
    const LZFactorization lz = lz_factorize(s);
    bool oracle_ok = true;
    if (config.oracle_check) {
        oracle_ok = oracle_lz_naive(s, s.size()) == lz;
    }
    if (config.format == OutputFormat::json) {
        json doc = {{"input_len", s.size()}, {"z", lz.z()}, {"phrases", report::phrases(s, lz)}};
        if (config.oracle_check) {
            doc["verdicts"] = {{"oracle_lz_naive", oracle_ok}};
        }
        emit(out, doc);
    } else {
        out << "input_len=" << s.size() << " z=" << lz.z() << '\n';
        for (std::size_t p = 0; p < lz.z(); ++p) {
            out << "p_" << p + 1 << ' ' << to_string(lz.phrases[p]) << ' ' << escape_bytes(s.slice(lz.phrases[p]))
                << '\n';
        }
        if (config.oracle_check) {
            out << "oracle_lz_naive: " << (oracle_ok ? "match" : "MISMATCH") << '\n';
        }
    }
    if (!oracle_ok) {
        err << "defect: LZ factorization disagrees with the naive oracle\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_domains(const RunConfig& config, const Text& s, std::ostream& out)
{
    const DomainAnalyzer an(s);
    const auto domains = an.all_domains();
    const auto tandems = an.find_tandem_domains();
    const auto groups = config.all_groups ? an.all_p_groups() : an.find_p_groups();
    if (config.format == OutputFormat::json) {
        json doms = json::array();
        for (const auto& d : domains) {
            doms.push_back(report::domain(d));
        }
        json tds = json::array();
        for (const auto& t : tandems) {
            tds.push_back(report::tandem(t));
        }
        json grs = json::array();
        for (const auto& g : groups) {
            grs.push_back(report::group(g));
        }
        emit(out, {{"input_len", s.size()},
                   {"m", an.factorization().m()},
                   {"runs", report::runs(s, an.factorization())},
                   {"domains", doms},
                   {"tandems", tds},
                   {"groups", grs}});
        return kExitOk;
    }
    out << "input_len=" << s.size() << " m=" << an.factorization().m() << " domains=" << domains.size()
        << " tandems=" << tandems.size() << " groups=" << groups.size() << '\n';
    for (const auto& d : domains) {
        out << dom_line(d) << '\n';
    }
    for (const auto& t : tandems) {
        out << "tandem " << dom_label(t.inner) << ", " << dom_label(t.outer) << " extdom "
            << to_string(t.inner.extended) << " associated " << to_string(t.associated) << '\n';
    }
    for (const auto& g : groups) {
        out << g.p << "-group";
        for (const auto& m : g.members) {
            out << ' ' << dom_label(m);
        }
        out << " extdom " << to_string(g.members.front().extended) << " associated " << to_string(g.associated)
            << '\n';
    }
    return kExitOk;
}

int cmd_canonical(const RunConfig& config, const Text& s, std::ostream& out)
{
    const DomainAnalyzer an(s);
    const Domain root = an.domain(config.run, config.order);
    const CanonicalDecomposition cd = an.canonical_decomposition(root);
    const BoundaryBudget b = boundary_budget(cd);
    const std::size_t actual = count_boundaries(lz_factorize(s), root.extended);
    if (config.format == OutputFormat::json) {
        emit(out, {{"input_len", s.size()},
                   {"m", an.factorization().m()},
                   {"decomposition", report::decomposition(cd)},
                   {"budget", json::array({report::budget(b)})},
                   {"boundaries_in_extdom", actual}});
        return kExitOk;
    }
    out << "root " << dom_line(root) << '\n';
    for (const auto& part : cd.parts) {
        out << (part.is_cluster() ? "cluster:" : "loose:");
        for (const auto& d : part.domains) {
            out << ' ' << dom_label(d);
            if (!part.is_cluster()) {
                out << " k=" << d.size() << " extdom " << to_string(d.extended);
            }
        }
        out << '\n';
    }
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "[";
        for (std::size_t x = 0; x < v.size(); ++x) {
            s += (x ? "," : "") + std::to_string(v[x]);
        }
        return s + "]";
    };
    out << "budget: k=" << b.k << " ell=" << b.ell << " d=" << b.d << " t=" << b.t << " d_h=" << list(b.d_h)
        << " k_h=" << list(b.k_h) << " S=" << b.S << " loose_total=" << b.loose_total << " total=" << b.total
        << " lower_bound=" << b.lower_bound << '\n';
    out << "boundaries_in_extdom=" << actual << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& config, const Text& s, std::ostream& out, std::ostream& err)
{
    const LemmaReport lemmas = verify_lemmas(s);
    std::optional<TheoremReport> theorem;
    if (!s.empty()) {
        theorem = check_theorem(s);
    }
    const bool ok = lemmas.passed() && (!theorem || theorem->passes);
    if (config.format == OutputFormat::json) {
        json verdicts = report::verdicts(lemmas);
        json doc = {{"input_len", s.size()}, {"m", lemmas.m}, {"z", lemmas.z}};
        if (theorem) {
            verdicts["theorem"] = report::theorem(*theorem);
            doc["partition"] = report::partition(extdom_partition(s));
        }
        doc["verdicts"] = verdicts;
        doc["passed"] = ok;
        emit(out, doc);
    } else {
        out << "input_len=" << s.size() << " m=" << lemmas.m << " z=" << lemmas.z;
        if (theorem) {
            out << " t=" << theorem->t << " slack=" << theorem->slack << " m<2z=" << (theorem->passes ? "yes" : "NO");
        }
        out << '\n';
        for (const auto& c : lemmas.checks) {
            out << (c.passed() ? "PASS " : "FAIL ") << c.name << " instances=" << c.instances;
            if (!c.passed()) {
                out << " failures=" << c.failures << " first: " << c.counterexample;
            }
            out << '\n';
        }
        out << (ok ? "all checks passed" : "violation indicates a defect in this implementation") << '\n';
    }
    if (!ok) {
        err << "verification failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Text s = generate_family(config.k);
    const LyndonFactorization lf = lyndon_factorize(s);
    const LZFactorization lz = lz_factorize(s);

    std::vector<std::string> problems;
    std::optional<FamilyCounts> expected;
    if (config.check) {
        expected = expected_counts(config.k);
        if (lf.m() != expected->m_k) {
            problems.push_back("m = " + std::to_string(lf.m()) + ", expected " + std::to_string(expected->m_k));
        }
        if (lz.z() != expected->z_k) {
            problems.push_back("z = " + std::to_string(lz.z()) + ", expected " + std::to_string(expected->z_k));
        }
        std::vector<std::string> actual;
        for (const auto& p : lz.phrases) {
            actual.emplace_back(s.slice(p));
        }
        if (actual != expected_lz_phrases(config.k)) {
            problems.emplace_back("phrase list differs from the recurrence");
        }
        std::vector<std::string> factors;
        bool single = true;
        for (const auto& r : lf.runs) {
            factors.emplace_back(s.slice(r.factor));
            single = single && r.exponent == 1;
        }
        if (factors != expected_lyndon_factors(config.k) || !single) {
            problems.emplace_back("Lyndon factors differ from the per-block structure");
        }
    }

    if (config.format == OutputFormat::json) {
        json doc = {{"k", config.k},
                    {"text", escape_bytes(s.view())},
                    {"input_len", s.size()},
                    {"m", lf.m()},
                    {"z", lz.z()},
                    {"runs", report::runs(s, lf)},
                    {"phrases", report::phrases(s, lz)}};
        if (expected) {
            doc["verdicts"] = {{"expected_m", expected->m_k},
                               {"expected_z", expected->z_k},
                               {"passed", problems.empty()},
                               {"problems", problems}};
        }
        emit(out, doc);
    } else {
        out << "k=" << config.k << " input_len=" << s.size() << '\n';
        out << "text=" << escape_bytes(s.view()) << '\n';
        out << "m=" << lf.m() << " z=" << lz.z() << '\n';
        out << "phrases:";
        for (const auto& p : lz.phrases) {
            out << ' ' << escape_bytes(s.slice(p));
        }
        out << '\n';
        if (expected) {
            out << "expected m=" << expected->m_k << " z=" << expected->z_k << '\n';
            for (const auto& p : problems) {
                out << "MISMATCH " << p << '\n';
            }
            out << (problems.empty() ? "check passed" : "check failed") << '\n';
        }
    }
    if (!problems.empty()) {
        err << "family check failed for k=" << config.k << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_partition(const RunConfig& config, const Text& s, std::ostream& out)
{
    const Partition partition = extdom_partition(s);
    const LZFactorization lz = lz_factorize(s);
    const std::size_t m = lyndon_factorize(s).m();
    if (config.format == OutputFormat::json) {
        emit(out, {{"input_len", s.size()},
                   {"m", m},
                   {"z", lz.z()},
                   {"t", partition.t()},
                   {"partition", report::partition(partition)}});
        return kExitOk;
    }
    out << "input_len=" << s.size() << " m=" << m << " z=" << lz.z() << " t=" << partition.t() << '\n';
    for (const auto& part : partition.parts) {
        out << "extdom_1(F_" << part.run << ") " << to_string(part.span) << " k=" << part.k
            << " boundaries=" << count_boundaries(lz, part.span) << '\n';
    }
    out << "ceil((m+t)/2)=" << (m + partition.t() + 1) / 2 << '\n';
    return kExitOk;
}

int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    SearchOptions options;
    options.sigma = config.sigma;
    options.max_len = config.max_len;
    options.min_len = config.min_len;
    options.dedupe = config.dedupe;
    options.verify_lemmas = config.verify_lemmas;
    options.jobs = config.jobs;
    options.budget = config.budget;

    RecordSink sink;
    if (config.format == OutputFormat::tsv) {
        out << report::tsv_header() << '\n';
        sink = [&out](const SearchRecord& r) { out << report::tsv_line(r) << '\n'; };
    }
    const SearchSummary summary = exhaustive_search(options, sink);
    const json doc = report::search_summary(summary);
    switch (config.format) {
    case OutputFormat::tsv:
        err << doc.dump() << '\n';
        break;
    case OutputFormat::json:
        emit(out, doc);
        break;
    case OutputFormat::human:
        out << "sigma=" << summary.sigma << " max_len=" << summary.max_len << " strings=" << summary.strings
            << " violations=" << summary.violations << '\n';
        for (const auto& l : summary.per_length) {
            out << "n=" << l.n << " strings=" << l.strings << " max(m-z)=" << l.max_m_minus_z << " ["
                << escape_bytes(l.max_m_minus_z_witness) << "] max(m/z)=" << l.max_ratio << " ["
                << escape_bytes(l.max_ratio_witness) << "]\n";
        }
        if (config.verify_lemmas) {
            out << "lemma_failures=" << summary.lemma_failures << '\n';
        }
        break;
    }
    if (!summary.passed()) {
        err << "search found a violation: "
            << escape_bytes(summary.violations ? summary.first_violation : summary.first_lemma_failure) << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

} // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out)
{
    CLI::App app{"Lyndon and non-overlapping LZ factorizations, domain structures and bound checks", "runlz"};
    app.require_subcommand(1, 1);

    RunConfig config;
    config.jobs = default_jobs();
    InputFlags flags;

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon factorization report");
    add_input(*lyndon, flags);
    lyndon->add_flag("--oracle-check", config.oracle_check, "Cross-check against the brute-force oracle");

    auto* lz = app.add_subcommand("lz", "Non-overlapping LZ phrase report");
    add_input(*lz, flags);
    lz->add_flag("--oracle-check", config.oracle_check, "Cross-check against the naive oracle");

    auto* domains = app.add_subcommand("domains", "All domains, tandem domains and p-groups");
    add_input(*domains, flags);
    domains->add_flag("--all-groups", config.all_groups, "List every p-group, not only maximal ones");

    auto* canonical = app.add_subcommand("canonical", "Canonical subdomains and boundary budget of one domain");
    add_input(*canonical, flags);
    canonical->add_option("--run", config.run, "Run index i of the root domain")->required()->check(CLI::PositiveNumber);
    canonical->add_option("--order", config.order, "Order d of the root domain")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check every structural lemma and m < 2z");
    add_input(*verify, flags);

    auto* family = app.add_subcommand("family", "Generate s_k and report its factorizations");
    family->add_option("--k", config.k, "Family index")->required()->check(CLI::NonNegativeNumber);
    family->add_flag("--check", config.check, "Compare against the closed-form sizes and phrase recurrence");
    family->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"human", "json"}));

    auto* search = app.add_subcommand("search", "Exhaustive enumeration over a small alphabet");
    search->add_option("--sigma", config.sigma, "Alphabet size")->required()->check(CLI::Range(1, 26));
    search->add_option("--max-len", config.max_len, "Longest string length")->required()->check(CLI::PositiveNumber);
    search->add_option("--min-len", config.min_len, "Shortest string length")->check(CLI::PositiveNumber);
    search->add_flag("--dedupe", config.dedupe, "Skip strings that are not canonically relabelled");
    search->add_flag("--verify-lemmas", config.verify_lemmas, "Run the lemma verifier on every string");
    search->add_option("--jobs", config.jobs, "Worker threads (default from RUNLZ_JOBS)")->check(CLI::PositiveNumber);
    search->add_option("--budget", config.budget, "Refuse enumerations larger than this");
    search->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"human", "json", "tsv"}));

    auto* partition = app.add_subcommand("partition", "Extended-domain partition of the whole string");
    add_input(*partition, flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string(e.what()) + "\nRun with --help for usage.");
    }

    config.command = app.get_subcommands().front()->get_name();
    if (flags.literal) {
        config.source = InputSource::literal;
        config.literal = *flags.literal;
    } else if (!flags.path.empty()) {
        config.source = InputSource::file;
        config.path = flags.path;
    }
    if (flags.strip) {
        config.strip_newline = true;
    } else if (flags.keep) {
        config.strip_newline = false;
    }
    config.format = parse_format(flags.format);
    if (config.min_len > config.max_len) {
        throw std::invalid_argument("--min-len must not exceed --max-len");
    }
    return config;
}

int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    if (config.command == "family") {
        return cmd_family(config, out, err);
    }
    if (config.command == "search") {
        return cmd_search(config, out, err);
    }
    const Text s = read_input(config, in);
    if (config.command == "lyndon") {
        return cmd_lyndon(config, s, out, err);
    }
    if (config.command == "lz") {
        return cmd_lz(config, s, out, err);
    }
    if (config.command == "domains") {
        return cmd_domains(config, s, out);
    }
    if (config.command == "canonical") {
        return cmd_canonical(config, s, out);
    }
    if (config.command == "verify") {
        return cmd_verify(config, s, out, err);
    }
    if (config.command == "partition") {
        return cmd_partition(config, s, out);
    }
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        const auto config = parse_args(args, out);
        if (!config) {
            return kExitOk;
        }
        return execute(*config, in, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "defect: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace runlz::cli
