#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dualmod/bressoud.hpp"
#include "dualmod/class_census.hpp"
#include "dualmod/partition.hpp"
#include "dualmod/rep_cache.hpp"
#include "dualmod/report_json.hpp"

namespace dualmod::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kFilterUsage =
    "usage: dualmod partitions N [--filter all|strict|odd|strict-odd|benson|benson-plus]";

int severity(ReportStatus s) {
    switch (s) {
        case ReportStatus::Ok: return 0;
        case ReportStatus::Skipped: return 1;
        case ReportStatus::Mismatch: return 2;
        case ReportStatus::Error: return 3;
    }
    return 3;
}

CommandResult failure(std::string command, const std::string& message) {
    CommandResult r;
    r.command = std::move(command);
    r.status = ReportStatus::Error;
    r.payload = json{{"error", message}};
    r.text = "error: " + message + "\n";
    return r;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string ok_fail(bool b) { return b ? "ok" : "FAIL"; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::optional<cache::RepresentationCache> open_cache(const Settings& settings) {
    if (settings.cache_dir) return cache::RepresentationCache(*settings.cache_dir);
    return cache::RepresentationCache::from_environment();
}

splitter::ProfileOptions profile_options(const Settings& settings, const std::optional<cache::RepresentationCache>& c) {
    splitter::ProfileOptions o;
    o.specht.max_tabloids = settings.max_tabloids;
    o.cache = c ? &*c : nullptr;
    return o;
}

std::string report_line(const splitter::SplitReport& r) {
    std::ostringstream out;
    out << pad(r.lambda.to_string(), 12) << " ";
    if (r.status == ReportStatus::Skipped || (r.status == ReportStatus::Error && r.dim == 0)) {
        out << splitter::status_name(r.status) << "  " << r.detail;
        return out.str();
    }
    out << "dim " << pad(std::to_string(r.dim), 6) << " endo " << r.endo_dim << "  predicted "
        << verdict_name(r.predicted_duality) << "  observed " << verdict_name(r.observed_duality) << "  summands ";
    for (std::size_t i = 0; i < r.summand_dims.size(); ++i) out << (i ? "+" : "") << r.summand_dims[i];
    out << "  " << splitter::status_name(r.status);
    if (!r.detail.empty()) out << "  " << r.detail;
    return out.str();
}

std::string chain_text(const bressoud::Chain& c) {
    std::ostringstream out;
    out << "mu      " << c.mu.to_string() << "\n";
    out << "blocks  ";
    for (std::size_t i = 0; i < c.blocks.blocks.size(); ++i)
        out << (i ? " " : "") << "(" << join(c.blocks.blocks[i]) << ")";
    out << "\n";
    out << "sigma   " << join(c.sigma) << "\n";
    out << "zeta    " << join(c.shifted.zeta) << "\n";
    out << "gamma   " << c.gamma.to_string() << "\n";
    out << "lambda  " << c.lambda.to_string() << "\n";
    return out.str();
}

struct CombinatorialRow {
    bressoud::SchurCounts schur;
    bool round_trip = true;
    bool sum_lemma = true;
    std::optional<bool> census;

    bool ok() const { return schur.agree() && round_trip && sum_lemma && census.value_or(true); }
};

CombinatorialRow combinatorial_row(int n) {
    CombinatorialRow row;
    row.schur = bressoud::verify_schur(n);
    for (const auto& mu : enumerate(n, PartitionFilter::StrictOdd)) {
        const Partition lambda = bressoud::gamma_to_lambda(bressoud::forward(mu));
        if (!(bressoud::inverse(lambda) == mu)) row.round_trip = false;
        if (!bressoud::verify_sum_lemma(mu)) row.sum_lemma = false;
    }
    for (const auto& lambda : enumerate(n, PartitionFilter::Benson))
        if (!(bressoud::gamma_to_lambda(bressoud::forward(bressoud::inverse(lambda))) == lambda))
            row.round_trip = false;
    if (n >= 3) row.census = census::census_consistent(n);
    return row;
}

}  // namespace

ReportStatus combine(ReportStatus a, ReportStatus b) { return severity(a) >= severity(b) ? a : b; }

int exit_code(const CommandResult& result) {
    return result.status == ReportStatus::Mismatch || result.status == ReportStatus::Error ? 1 : 0;
}

CommandResult cmd_partitions(int n, std::string_view filter_literal) {
    const std::string name = "partitions";
    if (n < 0) return failure(name, "n must be non-negative\n" + std::string(kFilterUsage));
    PartitionFilter filter{};
    try {
        filter = parse_filter(filter_literal);
    } catch (const std::invalid_argument& e) {
        return failure(name, std::string(e.what()) + "\n" + std::string(kFilterUsage));
    }
    CommandResult r;
    r.command = name;
    const auto shapes = enumerate(n, filter);
    json rows = json::array();
    std::ostringstream text;
    std::size_t width = 4;
    for (const auto& p : shapes) width = std::max(width, p.to_string().size() + 2);
    for (const auto& p : shapes) {
        json row{{"lambda", to_json_value(p)}, {"strict", p.is_strict()}};
        text << pad(p.to_string(), width);
        if (p.is_strict()) {
            const bool benson = benson_reducible(p);
            const int even = even_part_sum(p);
            const auto verdict = summand_duality(p);
            row["benson"] = benson;
            row["even_part_sum"] = even;
            row["even_part_sum_parity"] = even % 2 == 0 ? "even" : "odd";
            row["verdict"] = verdict_name(verdict);
            text << pad(benson ? "benson" : "-", 8) << "even-sum " << pad(std::to_string(even), 4)
                 << pad(even % 2 == 0 ? "even" : "odd", 6) << verdict_name(verdict);
        } else {
            text << "non-strict";
        }
        text << "\n";
        rows.push_back(std::move(row));
    }
    text << shapes.size() << " partition(s) of " << n << " [" << filter_name(filter) << "]\n";
    r.payload = json{{"n", n}, {"filter", filter_name(filter)}, {"count", shapes.size()}, {"rows", rows}};
    r.text = text.str();
    return r;
}

CommandResult cmd_bressoud(std::string_view literal, bool inverse) {
    const std::string name = "bressoud";
    try {
        const Partition p = Partition::parse(literal);
        const bressoud::Chain chain = inverse ? bressoud::inverse_chain(p) : bressoud::forward_chain(p);
        CommandResult r;
        r.command = name;
        r.payload = json{{"direction", inverse ? "inverse" : "forward"}, {"chain", to_json_value(chain)}};
        r.text = chain_text(chain);
        return r;
    } catch (const std::invalid_argument& e) {
        return failure(name, e.what());
    }
}

CommandResult cmd_benson(int n) {
    const std::string name = "benson";
    if (n < 0) return failure(name, "n must be non-negative");
    CommandResult r;
    r.command = name;
    json rows = json::array();
    std::ostringstream text;
    std::size_t plus = 0;
    const auto shapes = enumerate(n, PartitionFilter::Benson);
    for (const auto& lambda : shapes) {
        const auto verdict = summand_duality(lambda);
        const Partition mu = bressoud::inverse(lambda);
        if (verdict == DualityVerdict::SelfDualPair) ++plus;
        rows.push_back(json{{"lambda", to_json_value(lambda)},
                            {"even_part_sum", even_part_sum(lambda)},
                            {"verdict", verdict_name(verdict)},
                            {"mu", to_json_value(mu)}});
        text << pad(lambda.to_string(), 14) << pad(std::string(verdict_name(verdict)), 16) << "mu "
             << mu.to_string() << "\n";
    }
    text << shapes.size() << " Benson partition(s) of " << n << ", " << plus << " with even sum\n";
    r.payload = json{{"n", n}, {"count", shapes.size()}, {"plus_count", plus}, {"rows", rows}};
    r.text = text.str();
    return r;
}

CommandResult cmd_classes(int n) {
    const std::string name = "classes";
    if (n < 0) return failure(name, "n must be non-negative");
    CommandResult r;
    r.command = name;
    json rows = json::array();
    std::ostringstream text;
    for (const auto& c : census::two_regular_classes(n)) {
        rows.push_back(json{{"mu", to_json_value(c.mu)},
                            {"splits", c.splits},
                            {"real", c.real},
                            {"inverting_transpositions", c.inverting_transpositions()}});
        text << pad(c.mu.to_string(), 16) << "splits " << pad(yes_no(c.splits), 4) << "real " << pad(yes_no(c.real), 4)
             << "t " << c.inverting_transpositions() << "\n";
    }
    const auto classes = census::class_count_with_splitting(n);
    const auto irreducibles = census::irreducible_count(n);
    const auto self_dual = census::self_dual_count(n);
    const auto predicted = census::predicted_self_dual_count(n);
    json counts{{"classes_with_splitting", classes},
                {"irreducible_count", irreducibles},
                {"self_dual_count", self_dual},
                {"predicted_self_dual_count", predicted}};
    text << "classes " << classes << "  irreducibles " << irreducibles << "  self-dual " << self_dual
         << "  predicted self-dual " << predicted << "\n";
    if (n >= 3) {
        const bool ok = census::census_consistent(n);
        counts["consistent"] = ok;
        text << "census " << ok_fail(ok) << "\n";
        if (!ok) r.status = ReportStatus::Mismatch;
    } else {
        counts["consistent"] = nullptr;
        text << "census not checked below n = 3\n";
    }
    r.payload = json{{"n", n}, {"classes", rows}, {"counts", counts}};
    r.text = text.str();
    return r;
}

CommandResult cmd_dim(std::string_view literal, const Settings& settings) {
    const std::string name = "dim";
    try {
        const Partition lambda = Partition::parse(literal);
        if (!lambda.is_strict()) return failure(name, "partition " + lambda.to_string() + " is not strict");
        if (lambda.weight() < 2) return failure(name, "need n >= 2");
        CommandResult r;
        r.command = name;
        const auto tabloids = specht::tabloid_count(lambda);
        const auto standard = specht::hook_length_count(lambda);
        json payload{{"lambda", to_json_value(lambda)}, {"tabloids", tabloids}, {"standard_tableaux", standard}};
        try {
            const auto c = open_cache(settings);
            const auto record = cache::d_module_record(lambda, profile_options(settings, c).specht, c ? &*c : nullptr);
            payload["dim"] = record.rep.dim();
            r.text = lambda.to_string() + "  dim " + std::to_string(record.rep.dim()) + "  standard " +
                     std::to_string(standard) + "  tabloids " + std::to_string(tabloids) + "\n";
        } catch (const specht::MemoryGuardError& e) {
            r.status = ReportStatus::Skipped;
            payload["dim"] = nullptr;
            payload["detail"] = e.what();
            r.text = lambda.to_string() + "  SKIPPED  " + e.what() + "\n";
        }
        r.payload = std::move(payload);
        return r;
    } catch (const std::exception& e) {
        return failure(name, e.what());
    }
}

CommandResult cmd_split(std::string_view literal, const Settings& settings) {
    const std::string name = "split";
    try {
        const Partition lambda = Partition::parse(literal);
        if (!lambda.is_strict()) return failure(name, "partition " + lambda.to_string() + " is not strict");
        if (lambda.weight() < 3) return failure(name, "need n >= 3");
        CommandResult r;
        r.command = name;
        splitter::SplitReport report;
        try {
            const auto c = open_cache(settings);
            report = splitter::self_duality_profile(lambda, profile_options(settings, c));
        } catch (const specht::MemoryGuardError& e) {
            report.lambda = lambda;
            report.predicted_split = benson_reducible(lambda);
            report.predicted_duality = summand_duality(lambda);
            report.status = ReportStatus::Skipped;
            report.detail = e.what();
        }
        r.status = report.status;
        r.payload = to_json_value(report);
        r.text = report_line(report) + "\n";
        return r;
    } catch (const std::exception& e) {
        return failure(name, e.what());
    }
}

CommandResult cmd_verify(int n_max, bool long_run, const Settings& settings) {
    const std::string name = "verify";
    if (n_max < 3) return failure(name, "n-max must be at least 3");
    CommandResult r;
    r.command = name;
    std::ostringstream text;
    json rows = json::array();
    const int module_max = std::min(n_max, kModuleSuiteMax);
    std::optional<cache::RepresentationCache> c;
    try {
        c = open_cache(settings);
    } catch (const std::exception& e) {
        return failure(name, e.what());
    }
    const auto options = profile_options(settings, c);
    text << "n    schur (odd/gap/benson)  round-trip  sum-lemma  census  modules\n";
    for (int n = 0; n <= n_max; ++n) {
        json row{{"n", n}};
        std::ostringstream line;
        try {
            const CombinatorialRow comb = combinatorial_row(n);
            row["schur"] = json{{"strict_odd", comb.schur.strict_odd},
                                {"gap_condition", comb.schur.gap_condition},
                                {"benson", comb.schur.benson},
                                {"agree", comb.schur.agree()}};
            row["round_trip"] = comb.round_trip;
            row["sum_lemma"] = comb.sum_lemma;
            row["census"] = comb.census ? json(*comb.census) : json(nullptr);
            if (!comb.ok()) r.status = combine(r.status, ReportStatus::Mismatch);
            const std::string counts = std::to_string(comb.schur.strict_odd) + "/" +
                                       std::to_string(comb.schur.gap_condition) + "/" +
                                       std::to_string(comb.schur.benson);
            line << pad(std::to_string(n), 5) << pad(counts + " " + ok_fail(comb.schur.agree()), 24)
                 << pad(ok_fail(comb.round_trip), 12) << pad(ok_fail(comb.sum_lemma), 11)
                 << pad(comb.census ? ok_fail(*comb.census) : "-", 8);
        } catch (const std::exception& e) {
            r.status = combine(r.status, ReportStatus::Error);
            row["error"] = e.what();
            line << pad(std::to_string(n), 5) << "ERROR " << e.what() << "  ";
        }
        std::vector<std::string> details;
        if (n >= 3 && n <= module_max) {
            json modules = json::array();
            std::size_t counts[4] = {0, 0, 0, 0};
            try {
                for (const auto& rep : splitter::verify_theorem(n, options, settings.threads)) {
                    modules.push_back(to_json_value(rep));
                    ++counts[static_cast<int>(rep.status)];
                    r.status = combine(r.status, rep.status);
                    if (rep.status != ReportStatus::Ok) details.push_back("  " + report_line(rep));
                }
                line << counts[0] << "/" << modules.size() << " ok";
                if (counts[2]) line << ", " << counts[2] << " skipped";
                if (counts[1]) line << ", " << counts[1] << " mismatch";
                if (counts[3]) line << ", " << counts[3] << " error";
            } catch (const std::exception& e) {
                r.status = combine(r.status, ReportStatus::Error);
                line << "ERROR " << e.what();
            }
            row["modules"] = std::move(modules);
        } else {
            line << "-";
        }
        text << line.str() << "\n";
        for (const auto& d : details) text << d << "\n";
        rows.push_back(std::move(row));
    }
    json showcase = json::array();
    if (long_run) {
        text << "showcase n = " << kShowcaseN << "\n";
        for (const auto& lambda : enumerate(kShowcaseN, PartitionFilter::Benson)) {
            splitter::SplitReport rep;
            try {
                rep = splitter::self_duality_profile(lambda, options);
            } catch (const std::exception& e) {
                rep.lambda = lambda;
                rep.predicted_split = benson_reducible(lambda);
                rep.predicted_duality = summand_duality(lambda);
                rep.status = dynamic_cast<const specht::MemoryGuardError*>(&e) ? ReportStatus::Skipped
                                                                               : ReportStatus::Error;
                rep.detail = e.what();
            }
            r.status = combine(r.status, rep.status);
            showcase.push_back(to_json_value(rep));
            text << "  " << report_line(rep) << "\n";
        }
    }
    r.payload = json{{"n_max", n_max}, {"module_max", module_max}, {"long", long_run}, {"rows", rows},
                     {"showcase", showcase}};
    r.text = text.str();
    return r;
}

std::string render(const CommandResult& result, bool as_json, bool timing) {
    if (as_json) {
        json out{{"command", result.command},
                 {"status", splitter::status_name(result.status)},
                 {"payload", result.payload}};
        if (timing) out["seconds"] = result.seconds;
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << result.text << "status: " << splitter::status_name(result.status) << "\n";
    if (timing) out << "time: " << result.seconds << " s\n";
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Duals of 2-modular irreducibles of alternating groups", "dualmod"};
    app.require_subcommand(1);
    bool as_json = false;
    bool timing = false;
    Settings settings;
    std::string cache_dir;
    app.add_flag("--json", as_json, "Emit JSON");
    app.add_flag("--timing", timing, "Report wall-clock time");
    app.add_option("--cache-dir", cache_dir, "Representation cache directory");
    app.add_option("--max-tabloids", settings.max_tabloids, "Refuse shapes with more tabloids")->check(CLI::PositiveNumber);

    int n = 0;
    std::string filter = "all";
    auto* partitions = app.add_subcommand("partitions", "List partitions of n");
    partitions->add_option("n", n)->required();
    partitions->add_option("--filter", filter, "all, strict, odd, strict-odd, benson, benson-plus");

    std::string literal;
    bool inverse = false;
    auto* bressoud_cmd = app.add_subcommand("bressoud", "Bressoud chain from a strict odd partition");
    bressoud_cmd->add_option("partition", literal)->required();
    bressoud_cmd->add_flag("--inverse", inverse, "Start from a Benson partition");

    auto* benson = app.add_subcommand("benson", "Benson partitions of n");
    benson->add_option("n", n)->required();
    auto* classes = app.add_subcommand("classes", "2-regular classes of A_n");
    classes->add_option("n", n)->required();
    auto* dim = app.add_subcommand("dim", "Dimension of D^lambda");
    dim->add_option("partition", literal)->required();
    auto* split = app.add_subcommand("split", "Split D^lambda restricted to A_n");
    split->add_option("partition", literal)->required();

    int n_max = kDefaultVerifyMax;
    bool long_run = false;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("n-max", n_max, "Largest n for the combinatorial suites");
    verify->add_flag("--long", long_run, "Add the n = 13 examples");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    if (!cache_dir.empty()) settings.cache_dir = cache_dir;

    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    if (*partitions) result = cmd_partitions(n, filter);
    else if (*bressoud_cmd) result = cmd_bressoud(literal, inverse);
    else if (*benson) result = cmd_benson(n);
    else if (*classes) result = cmd_classes(n);
    else if (*dim) result = cmd_dim(literal, settings);
    else if (*split) result = cmd_split(literal, settings);
    else result = cmd_verify(n_max, long_run, settings);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << render(result, as_json, timing);
    return exit_code(result);
}

}  // namespace dualmod::cli
