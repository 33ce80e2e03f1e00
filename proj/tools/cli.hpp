#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eulerian2/exact.hpp"

namespace eulerian2::cli {

// Exit codes.
inline constexpr int kVerified = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsageError = 2;

enum class Format { Plain, Csv, Json };

struct RunConfig {
    std::optional<Index> max_n;
    std::optional<Index> max_m;
    std::optional<Index> box_n;
    std::optional<Index> box_t;
    Format format = Format::Plain;
    std::optional<std::string> reference_path;
};

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& identity, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gf(const RunConfig& config, bool compare, std::ostream& out, std::ostream& err);
int cmd_oeis(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerian2::cli
