#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bfl/hopf.hpp"

namespace bfl::cli {

/// Suite names in their fixed run order.
const std::vector<std::string>& all_suites();

struct AlgebraSpec {
  std::string family;  // group | dual_group | truncated_poly | explicit
  Ring ring = Ring::rationals();
  std::vector<std::size_t> orders;
  std::uint64_t p = 0;
  std::size_t k = 0;
  std::size_t vars = 1;
  // explicit only
  std::size_t rank = 0;
  std::vector<std::string> labels;
  std::map<std::string, std::string> tables;  // mu, unit, delta, counit, antipode
  /// Check the Hopf axioms while loading (explicit algebras; builders always do).
  bool eager_axioms = false;
  bool allow_hypothesis_violation = false;
};

struct SuiteConfig {
  AlgebraSpec algebra;
  std::vector<std::string> suites;  // in run order
  std::string output;
  std::uint64_t stream_threshold = 100000;
  unsigned jobs = 1;

  bool selected(std::string_view suite) const;
};

/// ConfigError on malformed TOML, unknown keys or invalid values. Relative
/// paths are kept as written.
SuiteConfig parse_config(std::string_view text, std::string_view source = "config");
SuiteConfig load_config(const std::string& path);

/// Builds the algebra; ConfigError on invalid parameters or, for eagerly
/// checked explicit algebras, failing axioms.
HopfAlgebra build_algebra(const AlgebraSpec& spec);

}  // namespace bfl::cli
