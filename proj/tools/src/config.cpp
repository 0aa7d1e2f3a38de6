#include "bfl_cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "bfl/errors.hpp"
#include "bfl/serialize.hpp"

namespace bfl::cli {
namespace {

const std::vector<std::string> kSuites = {
    "hopf_axioms", "integrals", "switchback", "tsd",     "braiding",  "ybe",
    "passcup",     "frobenius", "braided_frobenius",     "twist",     "tortile",
    "observational"};

const std::vector<std::string> kTables = {"mu", "unit", "delta", "counit", "antipode"};

std::string where(std::string_view source, const toml::node& node) {
  const auto& b = node.source().begin;
  return std::string(source) + ":" + std::to_string(b.line) + ":" + std::to_string(b.column) + ": ";
}

void require_keys(std::string_view source, const toml::table& t, const std::set<std::string>& allowed,
                  const std::string& context) {
  for (const auto& [key, node] : t) {
    if (!allowed.count(std::string(key.str()))) {
      throw ConfigError(where(source, node) + "unknown key '" + std::string(key.str()) + "' in " +
                        context);
    }
  }
}

std::uint64_t get_unsigned(std::string_view source, const toml::node& node, const std::string& key) {
  const auto v = node.value<std::int64_t>();
  if (!node.is_integer() || !v || *v < 0) {
    throw ConfigError(where(source, node) + "'" + key + "' must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(*v);
}

std::string get_string(std::string_view source, const toml::node& node, const std::string& key) {
  if (!node.is_string()) throw ConfigError(where(source, node) + "'" + key + "' must be a string");
  return std::string(*node.value<std::string_view>());
}

bool get_bool(std::string_view source, const toml::node& node, const std::string& key) {
  if (!node.is_boolean()) throw ConfigError(where(source, node) + "'" + key + "' must be true or false");
  return *node.value<bool>();
}

std::vector<std::string> get_strings(std::string_view source, const toml::node& node,
                                     const std::string& key) {
  const auto* arr = node.as_array();
  if (!arr) throw ConfigError(where(source, node) + "'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : *arr) out.push_back(get_string(source, item, key));
  return out;
}

AlgebraSpec parse_algebra(std::string_view source, const toml::table& t) {
  AlgebraSpec spec;
  const auto* family = t.get("family");
  if (!family) throw ConfigError(std::string(source) + ": [algebra] needs 'family'");
  spec.family = get_string(source, *family, "family");

  std::set<std::string> allowed = {"family", "ring", "check_axioms", "allow_hypothesis_violation"};
  if (spec.family == "group" || spec.family == "dual_group") {
    allowed.insert("orders");
  } else if (spec.family == "truncated_poly") {
    allowed.insert({"p", "k", "vars"});
  } else if (spec.family == "explicit") {
    allowed.insert({"rank", "labels", "tables"});
  } else {
    throw ConfigError(where(source, *family) + "unknown family '" + spec.family +
                      "' (expected group, dual_group, truncated_poly or explicit)");
  }
  require_keys(source, t, allowed, "[algebra] for family '" + spec.family + "'");

  auto need = [&](const char* key) -> const toml::node& {
    const auto* n = t.get(key);
    if (!n) throw ConfigError(std::string(source) + ": family '" + spec.family + "' needs '" + key + "'");
    return *n;
  };

  if (spec.family == "group" || spec.family == "dual_group") {
    const auto& node = need("orders");
    const auto* arr = node.as_array();
    if (!arr) throw ConfigError(where(source, node) + "'orders' must be an array of integers");
    for (const auto& o : *arr) spec.orders.push_back(get_unsigned(source, o, "orders"));
  } else if (spec.family == "truncated_poly") {
    spec.p = get_unsigned(source, need("p"), "p");
    spec.k = get_unsigned(source, need("k"), "k");
    if (const auto* v = t.get("vars")) spec.vars = get_unsigned(source, *v, "vars");
    spec.ring = spec.p >= 2 ? Ring::prime_field(spec.p) : Ring::rationals();
  } else {
    spec.rank = get_unsigned(source, need("rank"), "rank");
    if (spec.rank == 0) throw ConfigError(std::string(source) + ": 'rank' must be positive");
    if (const auto* l = t.get("labels")) spec.labels = get_strings(source, *l, "labels");
    const auto& tables_node = need("tables");
    const auto* tables = tables_node.as_table();
    if (!tables) throw ConfigError(where(source, tables_node) + "'tables' must be a table");
    require_keys(source, *tables, {kTables.begin(), kTables.end()}, "[algebra.tables]");
    for (const auto& name : kTables) {
      const auto* n = tables->get(name);
      if (!n) throw ConfigError(std::string(source) + ": [algebra.tables] needs '" + name + "'");
      spec.tables[name] = get_string(source, *n, name);
    }
  }

  if (const auto* r = t.get("ring")) {
    spec.ring = Ring::parse(get_string(source, *r, "ring"));
  }
  if (const auto* c = t.get("check_axioms")) {
    const auto mode = get_string(source, *c, "check_axioms");
    if (mode != "eager" && mode != "lazy") {
      throw ConfigError(where(source, *c) + "'check_axioms' must be \"eager\" or \"lazy\"");
    }
    spec.eager_axioms = mode == "eager";
  }
  if (const auto* a = t.get("allow_hypothesis_violation")) {
    spec.allow_hypothesis_violation = get_bool(source, *a, "allow_hypothesis_violation");
  }
  return spec;
}

}  // namespace

const std::vector<std::string>& all_suites() { return kSuites; }

bool SuiteConfig::selected(std::string_view suite) const {
  return std::find(suites.begin(), suites.end(), suite) != suites.end();
}

SuiteConfig parse_config(std::string_view text, std::string_view source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    const auto& b = e.source().begin;
    throw ConfigError(std::string(source) + ":" + std::to_string(b.line) + ":" +
                      std::to_string(b.column) + ": " + std::string(e.description()));
  }
  require_keys(source, root, {"algebra", "verify"}, "the top level");

  SuiteConfig cfg;
  const auto* algebra = root.get_as<toml::table>("algebra");
  if (!algebra) throw ConfigError(std::string(source) + ": missing [algebra] table");
  cfg.algebra = parse_algebra(source, *algebra);

  std::vector<std::string> requested = {"all"};
  if (const auto* v = root.get("verify")) {
    const auto* t = v->as_table();
    if (!t) throw ConfigError(where(source, *v) + "'verify' must be a table");
    require_keys(source, *t, {"suites", "output", "stream_threshold", "jobs"}, "[verify]");
    if (const auto* s = t->get("suites")) {
      requested = s->is_string() ? std::vector<std::string>{get_string(source, *s, "suites")}
                                 : get_strings(source, *s, "suites");
      for (const auto& name : requested) {
        if (name != "all" && std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end()) {
          throw ConfigError(where(source, *s) + "unknown suite '" + name + "'");
        }
      }
    }
    if (const auto* o = t->get("output")) cfg.output = get_string(source, *o, "output");
    if (const auto* th = t->get("stream_threshold")) {
      cfg.stream_threshold = get_unsigned(source, *th, "stream_threshold");
    }
    if (const auto* j = t->get("jobs")) {
      const auto jobs = get_unsigned(source, *j, "jobs");
      if (jobs == 0 || jobs > 256) throw ConfigError(where(source, *j) + "'jobs' must be in 1..256");
      cfg.jobs = static_cast<unsigned>(jobs);
    }
  }
  const bool all = std::find(requested.begin(), requested.end(), "all") != requested.end();
  for (const auto& name : kSuites) {
    if (all || std::find(requested.begin(), requested.end(), name) != requested.end()) {
      cfg.suites.push_back(name);
    }
  }
  if (cfg.suites.empty()) throw ConfigError(std::string(source) + ": no suites selected");
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

HopfAlgebra build_algebra(const AlgebraSpec& spec) {
  if (spec.family == "group") return build_group_algebra(spec.ring, spec.orders);
  if (spec.family == "dual_group") return build_dual_group_algebra(spec.ring, spec.orders);
  if (spec.family == "truncated_poly") {
    return build_truncated_polynomial(spec.ring, spec.p, spec.k, spec.vars);
  }
  if (spec.family != "explicit") throw ConfigError("unknown family '" + spec.family + "'");

  auto table = [&](const std::string& name, std::size_t in, std::size_t out) {
    try {
      return entries_from_text(spec.tables.at(name), spec.ring, spec.rank, in, out);
    } catch (const SerializationError& e) {
      throw ConfigError("table '" + name + "': " + e.what());
    } catch (const ShapeError& e) {
      throw ConfigError("table '" + name + "': " + e.what());
    }
  };
  HopfAlgebra h(table("mu", 2, 1), table("unit", 0, 1), table("delta", 1, 2), table("counit", 1, 0),
                table("antipode", 1, 1), spec.labels, "explicit", "");
  if (spec.eager_axioms) {
    const auto r = check_all_axioms(h);
    if (!r.all()) {
      std::string failed;
      const std::pair<const char*, bool> items[] = {
          {"associativity", r.associativity}, {"coassociativity", r.coassociativity},
          {"unit", r.unit},                   {"counit", r.counit},
          {"bialgebra", r.bialgebra},         {"antipode", r.antipode},
          {"antihom", r.antihom}};
      for (const auto& [name, ok] : items) {
        if (!ok) failed += (failed.empty() ? "" : ", ") + std::string(name);
      }
      throw ConfigError("explicit algebra fails Hopf axioms: " + failed);
    }
  }
  return h;
}

}  // namespace bfl::cli
