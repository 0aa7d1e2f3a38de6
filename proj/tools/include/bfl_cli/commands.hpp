#pragma once

#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bfl_cli/config.hpp"
#include "bfl_cli/report.hpp"

namespace bfl::cli {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInput = 2, kExitInternal = 3 };

/// kExitInput for configuration, parse, arity and context errors; kExitInternal otherwise.
int exit_code_for(const std::exception& e);

/// Runs the selected suites in the order hopf → integrals → braid → frobenius →
/// twist. A failed asserted check blocks every later stage; its checks are
/// reported as errors. Config threshold is overridden by BFL_STREAM_THRESHOLD.
Report run_verify(const SuiteConfig& cfg);

struct DiagramRequest {
  std::string equation;     // name in the move files or the built-in library
  std::string inline_text;  // "LHS == RHS"
  std::string moves_path;   // extra equation file, searched first
};
Report run_diagram(const SuiteConfig& cfg, const DiagramRequest& req);

/// File names (without directory) of exported maps, in export order.
const std::vector<std::string>& export_names();
/// Builds every structure in memory, then writes `dir` through a temporary
/// sibling directory and a rename. An existing `dir` is replaced only if it
/// holds a previous export (has manifest.json). SerializationError on IO failure.
Fingerprint export_structures(const SuiteConfig& cfg, const std::string& dir);

struct ImportedStructures {
  Fingerprint fingerprint;
  std::map<std::string, TensorMap> maps;
};
/// Reads an export directory back; SerializationError if a file digest or the
/// algebra fingerprint disagrees with the manifest.
ImportedStructures import_structures(const std::string& dir);

/// Command wrappers: print a summary to `out`, diagnostics to `err`, return the exit code.
int cmd_verify(const std::string& config_path, const std::string& report_path,
               std::optional<unsigned> jobs, std::ostream& out, std::ostream& err);
int cmd_diagram(const std::string& config_path, const DiagramRequest& req,
                const std::string& report_path, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& config_path, const std::string& dir, std::ostream& out,
               std::ostream& err);

}  // namespace bfl::cli
