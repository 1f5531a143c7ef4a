#pragma once

// Command dispatch behind the latdef tool. Every command produces a JSON
// report tagged with kReportSchema; key order is canonical (sorted), so equal
// inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "latdef/system.hpp"

namespace latdef {

inline constexpr const char* kReportSchema = "latdef.report/1";

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitPrecondition = 3 };

struct CliOptions {
  std::string order = "grevlex";
  std::vector<long> audit_primes{2, 3, 5, 7};
  /// A window block name or "lo..hi,lo..hi".
  std::string window;
  /// A lattice block name or "[[a,b],[c,d]]".
  std::string lattice;
  /// "[poly, ...]" for member.
  std::string vector;
  /// Lattice for the transfer checks of analyze.
  std::string check_transfer;
  bool oracle = false;
  bool basis = false;
};

const std::vector<std::string>& cli_commands();

/// Throws InputError or PreconditionError.
nlohmann::json run_command(const std::string& command, const SystemFile& sys, const CliOptions& opt);

/// Report for a failed command; code is "input_error", "parse_error",
/// "precondition" or "internal".
nlohmann::json error_report(const std::string& command, const std::string& code, const std::string& message);

/// Short human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace latdef
