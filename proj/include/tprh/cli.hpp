// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tprh::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

enum class Format { Csv, Json };

/// Options shared by all subcommands; unset optionals take per-command defaults.
struct RunConfig {
    double omega = 0.5;
    double omega0 = 1.0;
    std::optional<double> g;
    std::vector<double> lambdas;  ///< --lambda, comma-separated
    std::optional<std::pair<double, double>> window;
    std::optional<std::size_t> grid;
    std::optional<std::size_t> levels;
    std::optional<std::size_t> n_max;  ///< fixed truncation; auto-converge otherwise
    bool auto_converge = true;
    std::optional<double> tol;
    Format format = Format::Csv;
    std::string out;        ///< empty: standard output
    std::string baselines;  ///< spectrum only; derived from `out` when empty
    bool verify = false;
    std::pair<int, int> n_range{2, 7};
};

/// Thrown for invalid option combinations; maps to exit code 2.
struct UsageError {
    std::string message;
};

using Field = std::variant<long long, double, std::string, bool>;

/// Long-format table rendered as CSV (header, rows, '#' trailer) or as a
/// JSON array of flat records with the same field names.
struct RecordTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Field>> rows;
    std::string trailer;

    void write(std::ostream& os, Format format) const;
};

/// Doubles use 12 significant digits.
std::string format_double(double v);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_judd(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_degenerate(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_crossings(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Parses argv, dispatches, and maps errors to exit codes. `out` receives
/// records when no --out path is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace tprh::cli
