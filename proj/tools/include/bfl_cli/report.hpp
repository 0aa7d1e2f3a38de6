#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfl/circuit.hpp"
#include "bfl/hopf.hpp"

namespace bfl::cli {

inline constexpr const char* kToolName = "bfl";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Pass, Fail, ObservationalTrue, ObservationalFalse, Error };
std::string to_string(Status s);

struct Fingerprint {
  std::string ring;
  std::string family;
  std::string params;
  std::size_t rank = 0;
  /// FNV-1a over the text form of μ, η, Δ, ε, S.
  std::string digest;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const HopfAlgebra& h);

struct CheckRecord {
  std::string suite;
  std::string name;
  Status status = Status::Error;
  double wall_time = 0;
  Index dimension = 0;
  bool streamed = false;
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
  bool observational = false;
  std::vector<Witness> witnesses;
  std::string message;  // why a check is in error
};

struct Report {
  std::string command;
  Fingerprint algebra;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  int exit_code = 0;
};

/// 0 when every asserted check passed, 1 otherwise. Observational checks never count.
int asserted_exit_code(const std::vector<CheckRecord>& checks);

/// Checks are grouped by suite in first-appearance order. Every field except
/// `wall_time` is a pure function of the inputs.
nlohmann::ordered_json to_json(const Report& r);
/// One line per check, then totals.
void print_summary(std::ostream& os, const Report& r);
/// Writes `path` through a temporary file and a rename.
void write_json(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace bfl::cli
