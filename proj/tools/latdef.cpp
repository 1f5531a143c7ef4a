#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "latdef/cli.hpp"
#include "latdef/error.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw latdef::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// smith and galois can run on --lattice alone.
bool file_optional(const std::string& command) { return command == "smith" || command == "galois"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear partial difference systems over sublattices"};
  app.require_subcommand(1, 1);
  latdef::CliOptions opt;
  std::string file;
  bool as_json = false;

  for (const auto& name : latdef::cli_commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", file, "system file, or - for stdin");
    sub->add_flag("--json", as_json, "print the JSON report");
    if (name == "gb") sub->add_option("--order", opt.order, "grevlex or lex");
    if (name == "member") sub->add_option("--vector", opt.vector, "\"[poly, ...]\"")->required();
    if (name == "contract" || name == "extend" || name == "invariant" || name == "smith" || name == "galois")
      sub->add_option("--lattice", opt.lattice, "lattice block name or [[a,b],[c,d]]");
    if (name == "contract" || name == "extend" || name == "simulate")
      sub->add_option("--window", opt.window, "window block name or lo..hi,lo..hi");
    if (name == "member" || name == "contract" || name == "extend" || name == "coarsest")
      sub->add_flag("--oracle", opt.oracle, "cross-check against a finite-window computation");
    if (name == "coarsest") sub->add_option("--audit-primes", opt.audit_primes, "primes for the audit")->delimiter(',');
    if (name == "analyze") sub->add_option("--check-transfer", opt.check_transfer, "lattice for the transfer checks");
    if (name == "simulate") sub->add_flag("--basis", opt.basis, "print a basis of the window solutions");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? latdef::kExitOk : latdef::kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  nlohmann::json report;
  int code = latdef::kExitOk;
  try {
    latdef::SystemFile sys;
    if (!file.empty()) sys = latdef::parse_system(read_input(file));
    else if (!file_optional(command)) throw latdef::InputError("missing system file");
    report = latdef::run_command(command, sys, opt);
  } catch (const latdef::SystemParseError& e) {
    report = latdef::error_report(command, "parse_error", e.what());
    code = latdef::kExitInput;
  } catch (const latdef::InputError& e) {
    report = latdef::error_report(command, "input_error", e.what());
    code = latdef::kExitInput;
  } catch (const latdef::PreconditionError& e) {
    report = latdef::error_report(command, "precondition", e.what());
    code = latdef::kExitPrecondition;
  } catch (const std::exception& e) {
    report = latdef::error_report(command, "internal", e.what());
    code = latdef::kExitFailure;
  }

  if (as_json) std::cout << report.dump(2) << '\n';
  else (code == latdef::kExitOk ? std::cout : std::cerr) << latdef::render_text(report);
  return code;
}
