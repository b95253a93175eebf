/// @file app.hpp
/// @brief Command implementations shared by the CLI and the Python module.
#pragma once

#include "monopole/checks.hpp"
#include "monopole/fixtures.hpp"
#include "monopole/io.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace monopole {

/// A finished report and the exit code it implies.
struct Outcome {
    OrderedJson report;
    int exit_code = 0;
};

enum class ReportFormat { Json, Table };
ReportFormat parse_format(const std::string& s);

/// Runs the main formula and whichever cross-checks apply. Exit 2 for OUT_OF_THEOREM,
/// 3 when two routes disagree; the report is filled in either case.
Outcome run_compute(const ManifoldData& x, const Request& req);

Outcome run_check(const std::string& suite, const CheckOptions& opts);

struct WallsRequest {
    CohClass w;
    std::int64_t p1 = 0;
    std::int64_t level_max = 0;
    Coord bound = 0;
    std::optional<CohClass> lambda;  ///< defaults to w
    std::optional<RationalVector> omega;
};

Outcome run_walls(const ManifoldData& x, const WallsRequest& req);

/// {"tool", "command", "report"} wrapper shared by all commands.
OrderedJson wrap(const std::string& command, OrderedJson body);

/// Pretty JSON with two-space indent and a trailing newline, or an aligned key/value table.
std::string render(const OrderedJson& report, ReportFormat format);

/// Writes to path, or stdout when path is empty. Throws InputError on I/O failure.
void emit_report(const OrderedJson& report, const std::optional<std::filesystem::path>& path,
                 ReportFormat format);

}  // namespace monopole
