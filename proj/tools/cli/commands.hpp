#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dualmod/module_splitter.hpp"
#include "dualmod/specht.hpp"

namespace dualmod::cli {

using splitter::ReportStatus;

struct CommandResult {
    std::string command;
    ReportStatus status = ReportStatus::Ok;
    nlohmann::json payload = nlohmann::json::object();
    /// Human-readable body, one line per row, newline terminated.
    std::string text;
    double seconds = 0.0;
};

/// Settings shared by the module-theoretic commands.
struct Settings {
    std::uint64_t max_tabloids = specht::kDefaultMaxTabloids;
    /// Falls back to the environment variable when unset.
    std::optional<std::filesystem::path> cache_dir;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
};

inline constexpr int kDefaultVerifyMax = 40;
inline constexpr int kModuleSuiteMax = 9;
inline constexpr int kShowcaseN = 13;

CommandResult cmd_partitions(int n, std::string_view filter);
CommandResult cmd_bressoud(std::string_view literal, bool inverse);
/// Benson set of n with predicted verdicts and Bressoud preimages.
CommandResult cmd_benson(int n);
CommandResult cmd_classes(int n);
CommandResult cmd_dim(std::string_view literal, const Settings& settings);
CommandResult cmd_split(std::string_view literal, const Settings& settings);
CommandResult cmd_verify(int n_max, bool long_run, const Settings& settings);

/// Worst of the two, ordered Ok < Skipped < Mismatch < Error.
ReportStatus combine(ReportStatus a, ReportStatus b);
/// Nonzero iff the status is MISMATCH or ERROR.
int exit_code(const CommandResult& result);

/// Text: body then "status: X". JSON: one object with command, status,
/// payload. Seconds appear only when `timing` is set.
std::string render(const CommandResult& result, bool json, bool timing);

/// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualmod::cli
