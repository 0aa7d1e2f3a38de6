#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "bfl/errors.hpp"
#include "bfl/serialize.hpp"
#include "bfl/twist.hpp"
#include "bfl_cli/commands.hpp"
#include "bfl_cli/config.hpp"
#include "bfl_cli/report.hpp"

namespace bfl::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("bfl-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(BFL_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("wall_time");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

const char* kZ2 = "[algebra]\nfamily = \"group\"\norders = [2]\n";
const char* kF2X2 = "[algebra]\nfamily = \"truncated_poly\"\np = 2\nk = 1\n";

std::string explicit_z2(const std::string& mu_extra, const std::string& options) {
  return "[algebra]\nfamily = \"explicit\"\nring = \"Q\"\nrank = 2\nlabels = [\"e\", \"g\"]\n" + options +
         "\n[algebra.tables]\n"
         "mu = \"\"\"\n(0) <- (0,0) : 1\n(1) <- (0,1) : 1\n(1) <- (1,0) : 1\n(0) <- (1,1) : 1\n" +
         mu_extra +
         "\"\"\"\n"
         "unit = \"(0) <- () : 1\"\n"
         "delta = \"\"\"\n(0,0) <- (0) : 1\n(1,1) <- (1) : 1\n\"\"\"\n"
         "counit = \"\"\"\n() <- (0) : 1\n() <- (1) : 1\n\"\"\"\n"
         "antipode = \"\"\"\n(0) <- (0) : 1\n(1) <- (1) : 1\n\"\"\"\n";
}

// Sweedler's four-dimensional algebra, basis 1, g, x, gx.
std::string explicit_h4(bool allow) {
  return std::string("[algebra]\nfamily = \"explicit\"\nrank = 4\n") +
         "allow_hypothesis_violation = " + (allow ? "true" : "false") +
         "\n[algebra.tables]\n"
         "mu = \"\"\"\n"
         "(0) <- (0,0) : 1\n(1) <- (0,1) : 1\n(2) <- (0,2) : 1\n(3) <- (0,3) : 1\n"
         "(1) <- (1,0) : 1\n(0) <- (1,1) : 1\n(3) <- (1,2) : 1\n(2) <- (1,3) : 1\n"
         "(2) <- (2,0) : 1\n(3) <- (2,1) : -1\n"
         "(3) <- (3,0) : 1\n(2) <- (3,1) : -1\n"
         "\"\"\"\n"
         "unit = \"(0) <- () : 1\"\n"
         "delta = \"\"\"\n(0,0) <- (0) : 1\n(1,1) <- (1) : 1\n(2,0) <- (2) : 1\n(1,2) <- (2) : 1\n"
         "(3,1) <- (3) : 1\n(0,3) <- (3) : 1\n\"\"\"\n"
         "counit = \"\"\"\n() <- (0) : 1\n() <- (1) : 1\n\"\"\"\n"
         "antipode = \"\"\"\n(0) <- (0) : 1\n(1) <- (1) : 1\n(3) <- (2) : -1\n(2) <- (3) : 1\n\"\"\"\n";
}

TEST(Config, Parsing) {
  const auto cfg = parse_config(std::string(kZ2) + "[verify]\nsuites = [\"ybe\", \"hopf_axioms\"]\njobs = 2\n");
  EXPECT_EQ(cfg.algebra.family, "group");
  EXPECT_EQ(cfg.suites, (std::vector<std::string>{"hopf_axioms", "ybe"}));
  EXPECT_EQ(cfg.jobs, 2u);
  EXPECT_EQ(parse_config(kZ2).suites, all_suites());
  EXPECT_EQ(parse_config(std::string(kF2X2)).algebra.ring, Ring::prime_field(2));
}

TEST(Config, Errors) {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_config(text, "c.toml");
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message(std::string(kZ2) + "colour = 1\n").find("c.toml:4:1"), std::string::npos);
  EXPECT_NE(message("[algebra]\nfamily = \"lie\"\n"), "");
  EXPECT_NE(message("[algebra]\nfamily = \"group\"\n"), "");
  EXPECT_NE(message(std::string(kZ2) + "[verify]\nsuites = [\"nope\"]\n"), "");
  EXPECT_NE(message(std::string(kZ2) + "[verify]\njobs = 0\n"), "");
  EXPECT_NE(message(std::string(kZ2) + "check_axioms = \"sometimes\"\n"), "");
  EXPECT_NE(message("[algebra\n"), "");
  EXPECT_NE(message(std::string(kZ2) + "[verify]\nsuites = []\n"), "");
  EXPECT_THROW(build_algebra(parse_config("[algebra]\nfamily = \"group\"\norders = [0]\n").algebra), ConfigError);
  EXPECT_THROW(build_algebra(parse_config(explicit_z2("(5) <- (0,0) : 1\n", "")).algebra), ConfigError);
  EXPECT_THROW(build_algebra(parse_config(explicit_z2("(0) <- (1,0) : 1\n", "check_axioms = \"eager\"")).algebra),
               ConfigError);
}

TEST(Verify, GroupAlgebraAllSuitesPass) {
  const auto report = run_verify(parse_config(kZ2));
  EXPECT_EQ(report.exit_code, 0);
  std::set<std::string> suites;
  std::set<std::string> names;
  for (const auto& c : report.checks) {
    suites.insert(c.suite);
    EXPECT_TRUE(names.insert(c.suite + "/" + c.name).second) << c.name;
    if (c.observational) {
      EXPECT_TRUE(c.status == Status::ObservationalTrue || c.status == Status::ObservationalFalse);
    } else {
      EXPECT_EQ(c.status, Status::Pass) << c.suite << "/" << c.name;
    }
  }
  for (const auto& s : all_suites()) {
    if (s != "observational") EXPECT_TRUE(suites.count(s)) << s;
  }
  EXPECT_TRUE(names.count("twist/cancelpair"));
  EXPECT_TRUE(names.count("twist/theta_equals_Theta"));
  EXPECT_TRUE(names.count("tsd/tsd_literal"));
  const auto j = to_json(report);
  EXPECT_EQ(j["loop_value"], "2");
  EXPECT_EQ(j["integrals"]["c"], "1");
}

TEST(Verify, TruncatedPolynomialsPass) {
  for (const char* k : {"1", "2"}) {
    const auto r = run_verify(parse_config(std::string("[algebra]\nfamily = \"truncated_poly\"\np = 2\nk = ") + k + "\n"));
    EXPECT_EQ(r.exit_code, 0) << k;
  }
}

TEST(Verify, SuiteSelectionRunsOnlyThoseChecks) {
  const auto r = run_verify(parse_config(std::string(kZ2) + "[verify]\nsuites = [\"observational\"]\n"));
  std::set<std::string> names;
  for (const auto& c : r.checks) {
    names.insert(c.name);
    EXPECT_TRUE(c.observational) << c.name;
  }
  EXPECT_EQ(names, (std::set<std::string>{"tsd_literal", "cancelpair", "theta_equals_Theta"}));
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Verify, MutatedAlgebraFailsAndBlocksDependents) {
  const auto r = run_verify(parse_config(explicit_z2("(0) <- (1,0) : 1\n", "")));
  EXPECT_EQ(r.exit_code, 1);
  bool failed = false;
  for (const auto& c : r.checks) {
    if (c.suite == "hopf_axioms") failed |= c.status == Status::Fail;
    else if (!c.observational) EXPECT_EQ(c.status, Status::Error) << c.suite << "/" << c.name;
  }
  EXPECT_TRUE(failed);
}

TEST(Verify, HypothesisViolation) {
  const auto blocked = run_verify(parse_config(explicit_h4(false)));
  EXPECT_EQ(blocked.exit_code, 1);
  for (const auto& c : blocked.checks) {
    if (c.suite == "hopf_axioms") EXPECT_EQ(c.status, Status::Pass) << c.name;
    else if (!c.observational) EXPECT_EQ(c.status, Status::Error) << c.name;
  }

  const auto explored = run_verify(parse_config(explicit_h4(true)));
  EXPECT_EQ(explored.exit_code, 0);
  bool saw_false = false;
  for (const auto& c : explored.checks) {
    if (c.suite == "hopf_axioms") {
      EXPECT_EQ(c.status, Status::Pass);
    } else {
      EXPECT_TRUE(c.observational) << c.name;
      saw_false |= c.status == Status::ObservationalFalse || c.status == Status::Error;
    }
  }
  EXPECT_TRUE(saw_false);
  EXPECT_EQ(to_json(explored)["hypotheses"]["commutative"], false);
}

TEST(Verify, ExitCodeIgnoresObservationalChecks) {
  std::vector<CheckRecord> checks(2);
  checks[0].status = Status::Pass;
  checks[1].status = Status::ObservationalFalse;
  checks[1].observational = true;
  EXPECT_EQ(asserted_exit_code(checks), 0);
  checks[1].status = Status::Error;
  EXPECT_EQ(asserted_exit_code(checks), 0);
  checks[0].status = Status::Fail;
  EXPECT_EQ(asserted_exit_code(checks), 1);
}

TEST(Verify, DeterministicReports) {
  const auto cfg = parse_config(std::string(kF2X2) + "[verify]\njobs = 3\n");
  const auto a = strip_timing(to_json(run_verify(cfg)));
  const auto b = strip_timing(to_json(run_verify(cfg)));
  EXPECT_EQ(a.dump(), b.dump());
  auto single = cfg;
  single.jobs = 1;
  EXPECT_EQ(strip_timing(to_json(run_verify(single))).dump(), a.dump());
}

TEST(Verify, StreamThresholdFromEnvironment) {
  ::setenv("BFL_STREAM_THRESHOLD", "1", 1);
  const auto r = run_verify(parse_config(std::string(kZ2) + "[verify]\nsuites = [\"ybe\"]\n"));
  ::unsetenv("BFL_STREAM_THRESHOLD");
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.checks[0].streamed);
  EXPECT_EQ(r.checks[0].status, Status::Pass);
}

TEST(Diagram, NamedAndInline) {
  const auto z3 = parse_config("[algebra]\nfamily = \"group\"\norders = [3]\n");
  EXPECT_EQ(run_diagram(z3, {"ybe", "", ""}).exit_code, 0);
  const auto inl = run_diagram(z3, {"", "(id*cup)*id == id*(cup*id)", ""});
  EXPECT_EQ(inl.exit_code, 0);
  EXPECT_EQ(inl.checks.at(0).status, Status::Pass);

  const auto cancel = run_diagram(parse_config(kZ2), {"cancelpair", "", ""});
  EXPECT_EQ(cancel.exit_code, 0);
  EXPECT_TRUE(cancel.checks.at(0).observational);
  EXPECT_EQ(to_json(cancel)["equation"]["expected"], "observational");

  const auto wrong = run_diagram(z3, {"", "tau == id^2", ""});
  EXPECT_EQ(wrong.exit_code, 1);
  EXPECT_FALSE(wrong.checks.at(0).witnesses.empty());
}

TEST(Diagram, MovesFileIsSearchedFirst) {
  TempDir dir;
  const auto moves = write(dir / "moves.txt", "ybe : tau == id^2\nmine : S ; S == id\n");
  const auto cfg = parse_config(kZ2);
  EXPECT_EQ(run_diagram(cfg, {"mine", "", moves}).exit_code, 0);
  // tau = id fails on rank 2, so the file's "ybe" shadows the built-in one.
  EXPECT_EQ(run_diagram(cfg, {"ybe", "", moves}).exit_code, 1);
}

TEST(Diagram, InputErrorsMapToExitTwo) {
  TempDir dir;
  const auto cfg = write(dir / "z2.toml", kZ2);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_diagram(cfg, {"", "mu ; mu == mu", ""}, "", out, err), 2);
  EXPECT_EQ(cmd_diagram(cfg, {"", "mu ; == mu", ""}, "", out, err), 2);
  EXPECT_EQ(cmd_diagram(cfg, {"no_such", "", ""}, "", out, err), 2);
  // Twist generators need a Frobenius structure, which H4 does not provide.
  const auto h4 = write(dir / "h4.toml", explicit_h4(false));
  EXPECT_EQ(cmd_diagram(h4, {"", "theta == theta", ""}, "", out, err), 2);
}

TEST(Export, RoundTripIsBitIdentical) {
  TempDir dir;
  const auto cfg = parse_config(kZ2);
  const auto target = (dir / "out").string();
  const auto fp = export_structures(cfg, target);
  const auto imported = import_structures(target);
  EXPECT_EQ(imported.fingerprint, fp);
  EXPECT_EQ(imported.fingerprint, fingerprint(build_algebra(cfg.algebra)));
  ASSERT_EQ(imported.maps.size(), export_names().size());

  const auto h = build_algebra(cfg.algebra);
  const auto f = build_frobenius(h);
  EXPECT_EQ(imported.maps.at("mu"), h.mu());
  EXPECT_EQ(imported.maps.at("beta"), *f.braid.beta);
  EXPECT_EQ(imported.maps.at("cup"), f.cc.cup);
  EXPECT_EQ(imported.maps.at("Theta"), build_Theta(f));
  for (const auto& name : export_names()) {
    EXPECT_EQ(to_text(imported.maps.at(name)), slurp(fs::path(target) / (name + ".tensor"))) << name;
  }
  // Re-export over a previous export is allowed.
  EXPECT_EQ(export_structures(cfg, target), fp);
}

TEST(Export, TruncatedCapLines) {
  TempDir dir;
  const auto target = (dir / "t").string();
  export_structures(parse_config(kF2X2), target);
  const auto text = slurp(fs::path(target) / "cap.tensor");
  std::set<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find("<-") != std::string::npos) lines.insert(line);
  }
  EXPECT_EQ(lines, (std::set<std::string>{"(0,1) <- () : 1 mod 2", "(1,0) <- () : 1 mod 2"}));
}

TEST(Export, TamperedFilesAreRejected) {
  TempDir dir;
  const auto target = dir / "z";
  export_structures(parse_config(kZ2), target.string());
  std::ofstream(target / "beta.tensor", std::ios::app) << "(0,0,0,0) <- (1,1,1,1) : 1\n";
  EXPECT_THROW(import_structures(target.string()), SerializationError);
}

TEST(Export, FailedBuildLeavesNothingBehind) {
  TempDir dir;
  const auto cfg = write(dir / "h4.toml", explicit_h4(false));
  std::ostringstream out, err;
  EXPECT_NE(cmd_export(cfg, (dir / "never").string(), out, err), 0);
  std::vector<std::string> entries;
  for (const auto& e : fs::directory_iterator(dir.path())) entries.push_back(e.path().filename().string());
  EXPECT_EQ(entries, (std::vector<std::string>{"h4.toml"}));

  // An unrelated directory is never replaced.
  fs::create_directories(dir / "keep");
  write(dir / "keep" / "notes.txt", "x");
  const auto z2 = write(dir / "z2.toml", kZ2);
  EXPECT_EQ(cmd_export(z2, (dir / "keep").string(), out, err), 3);
  EXPECT_TRUE(fs::exists(dir / "keep" / "notes.txt"));
  EXPECT_FALSE(fs::exists(dir / "keep" / "manifest.json"));
}

TEST(Binary, ExitCodes) {
  TempDir dir;
  const auto z2 = write(dir / "z2.toml", std::string(kZ2) + "[verify]\nsuites = [\"hopf_axioms\", \"ybe\"]\n");
  const auto bad = write(dir / "bad.toml", "[algebra]\nfamily = \"group\"\norders = [0]\n");
  const auto mutated = write(dir / "m.toml", explicit_z2("(0) <- (1,0) : 1\n", ""));
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("verify"), 2);
  EXPECT_EQ(run("verify --config " + z2), 0);
  EXPECT_EQ(run("verify --config " + bad), 2);
  EXPECT_EQ(run("verify --config " + (dir / "missing.toml").string()), 2);
  EXPECT_EQ(run("verify --config " + mutated), 1);
  EXPECT_EQ(run("verify --config " + z2 + " --jobs 0"), 2);
  EXPECT_EQ(run("diagram --config " + z2 + " --eq ybe"), 0);
  EXPECT_EQ(run("diagram --config " + z2 + " --eq cancelpair"), 0);
  EXPECT_EQ(run("diagram --config " + z2 + " --inline 'mu ; mu == mu'"), 2);
  EXPECT_EQ(run("diagram --config " + z2 + " --eq ybe --inline 'mu == mu'"), 2);
  EXPECT_EQ(run("export --config " + z2 + " --out " + (dir / "x").string()), 0);
  EXPECT_EQ(run("export --config " + z2 + " --out /proc/bfl-no-such/x"), 3);

  const auto report = dir / "r.json";
  EXPECT_EQ(run("verify --config " + z2 + " --out " + report.string()), 0);
  const auto j = json::parse(slurp(report));
  EXPECT_EQ(j["tool"], "bfl");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["algebra"]["params"], "orders=[2]");
  EXPECT_EQ(j["checks"]["ybe"]["ybe"]["status"], "pass");
  EXPECT_EQ(j["checks"]["ybe"]["ybe"]["dimensions"]["flattened"], 64);
  EXPECT_FALSE(fs::exists(report.string() + ".tmp"));
}

}  // namespace
}  // namespace bfl::cli
