#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace runlz::cli {

enum class InputSource { standard_input, literal, file };
enum class OutputFormat { human, json, tsv };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default worker count for `search`.
inline constexpr const char* kJobsEnv = "RUNLZ_JOBS";

struct RunConfig {
    std::string command;
    InputSource source = InputSource::standard_input;
    std::string literal;
    std::string path;
    std::optional<bool> strip_newline; ///< unset: strip for standard input only
    OutputFormat format = OutputFormat::human;

    std::size_t run = 0;   ///< canonical: root run index
    std::size_t order = 0; ///< canonical: root order
    std::size_t k = 0;     ///< family index
    bool check = false;    ///< family: compare against closed forms
    std::size_t sigma = 2;
    std::size_t max_len = 8;
    std::size_t min_len = 1;
    bool dedupe = false;
    bool verify_lemmas = false;
    std::size_t jobs = 1;
    unsigned long long budget = 50'000'000;
    bool oracle_check = false;
    bool all_groups = false;
};

/// Parses arguments (without the program name). Throws std::invalid_argument
/// with a usage message on malformed input; returns nullopt after printing
/// help to out.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed configuration and returns the process exit code.
int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args followed by execute; usage and input errors map to exit 2.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace runlz::cli
