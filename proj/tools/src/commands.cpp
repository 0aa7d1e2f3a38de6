#include "bfl_cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "bfl/diagram.hpp"
#include "bfl/errors.hpp"
#include "bfl/serialize.hpp"
#include "bfl/twist.hpp"

namespace bfl::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// A unit of work yielding one or more named results. `names` lists them up
// front so a task that throws still reports every check it owns.
struct Task {
  std::string suite;
  std::vector<std::string> names;
  bool observational = false;
  std::function<CheckList()> run;
};

Task single(std::string suite, std::string name, std::function<Comparison()> f) {
  Task t{std::move(suite), {name}, false, {}};
  t.run = [name, f = std::move(f)] { return CheckList{{name, f()}}; };
  return t;
}

Task group(std::string suite, std::vector<std::string> names, std::function<CheckList()> f) {
  return {std::move(suite), std::move(names), false, std::move(f)};
}

Comparison boolean(bool ok, std::size_t rank, std::size_t in, std::size_t out) {
  Comparison c;
  c.equal = ok;
  c.in_arity = in;
  c.out_arity = out;
  c.dimension = std::max(checked_power(rank, in), checked_power(rank, out));
  return c;
}

CheckRecord blocked_record(const std::string& suite, const std::string& name, bool observational,
                           const std::string& why) {
  CheckRecord r;
  r.suite = suite;
  r.name = name;
  r.status = Status::Error;
  r.observational = observational;
  r.message = why;
  return r;
}

std::vector<CheckRecord> run_one(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  try {
    const CheckList results = task.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (results.size() != task.names.size()) throw Error("task returned an unexpected check list");
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& [name, cmp] = results[i];
      if (name != task.names[i]) throw Error("task returned '" + name + "' for '" + task.names[i] + "'");
      CheckRecord r;
      r.suite = task.suite;
      r.name = name;
      r.observational = task.observational;
      r.status = task.observational ? (cmp.equal ? Status::ObservationalTrue : Status::ObservationalFalse)
                                    : (cmp.equal ? Status::Pass : Status::Fail);
      r.wall_time = elapsed / static_cast<double>(results.size());
      r.dimension = cmp.dimension;
      r.streamed = cmp.streamed;
      r.in_arity = cmp.in_arity;
      r.out_arity = cmp.out_arity;
      r.witnesses = cmp.witnesses;
      out.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    out.clear();
    for (const auto& name : task.names) {
      out.push_back(blocked_record(task.suite, name, task.observational, e.what()));
    }
  }
  return out;
}

// Runs tasks on up to `jobs` threads; results keep task order.
std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_one(tasks[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<CheckRecord> flat;
  for (auto& r : results) {
    for (auto& c : r) flat.push_back(std::move(c));
  }
  return flat;
}

class Verifier {
 public:
  Verifier(const SuiteConfig& cfg, Report& report) : cfg_(cfg), report_(report) {}

  // Runs `tasks` unless an earlier stage failed. Returns false if a selected
  // asserted check did not pass.
  bool stage(std::vector<Task> tasks, bool observational_mode) {
    for (auto& t : tasks) t.observational = t.observational || observational_mode;
    std::vector<CheckRecord> records;
    if (!blocked_.empty()) {
      for (const auto& t : tasks) {
        for (const auto& n : t.names) records.push_back(blocked_record(t.suite, n, t.observational, blocked_));
      }
    } else {
      records = run_tasks(tasks, cfg_.jobs);
    }
    bool ok = true;
    for (auto& r : records) {
      if (!r.observational && r.status != Status::Pass && ok && blocked_.empty()) {
        blocked_ = "prerequisite " + r.suite + "/" + r.name + " did not pass";
        ok = false;
      }
      report_.checks.push_back(std::move(r));
    }
    return ok;
  }

  void block(const std::string& why) {
    if (blocked_.empty()) blocked_ = why;
  }
  bool blocked() const { return !blocked_.empty(); }

 private:
  const SuiteConfig& cfg_;
  Report& report_;
  std::string blocked_;
};

json scalars_of_vector(const HopfAlgebra& h, const TensorMap& v, bool functional) {
  json j = json::object();
  for (std::size_t i = 0; i < h.rank(); ++i) {
    j[h.labels()[i]] = (functional ? v.at(0, i) : v.at(i, 0)).to_string();
  }
  return j;
}

CompareOptions options_for(const SuiteConfig& cfg) {
  CompareOptions opt;
  opt.stream_threshold = cfg.stream_threshold;
  opt.jobs = cfg.jobs;
  if (std::getenv("BFL_STREAM_THRESHOLD")) {
    opt.stream_threshold = CompareOptions::from_environment().stream_threshold;
  }
  return opt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void collect_generators(const DiagramNode& n, std::set<std::string>& out) {
  if (n.kind == DiagramNode::Kind::Generator || n.kind == DiagramNode::Kind::Power) out.insert(n.name);
  for (const auto& c : n.children) collect_generators(c, out);
}

DiagramContext hopf_context(const HopfAlgebra& h, const BraidData& b, const std::string& key) {
  using P = HopfAlgebra::Part;
  DiagramContext ctx(h.ring(), h.rank(), key);
  ctx.define("mu", h.shared(P::Mu));
  ctx.define("eta", h.shared(P::Unit));
  ctx.define("delta", h.shared(P::Delta));
  ctx.define("eps", h.shared(P::Counit));
  ctx.define("S", h.shared(P::Antipode));
  ctx.define("T", b.T);
  ctx.define("beta1", b.beta1);
  ctx.define("beta1inv", b.beta1_inv);
  ctx.define("beta", b.beta);
  ctx.define("betainv", b.beta_inv);
  return ctx;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const ArityError*>(&e) || dynamic_cast<const ContextError*>(&e) ||
      dynamic_cast<const NotCommutativeError*>(&e)) {
    return kExitInput;
  }
  return kExitInternal;
}

Report run_verify(const SuiteConfig& cfg) {
  Report report;
  report.command = "verify";
  const HopfAlgebra H = build_algebra(cfg.algebra);
  report.algebra = fingerprint(H);
  const auto opt = options_for(cfg);
  const std::size_t n = H.rank();
  auto sel = [&](const char* s) { return cfg.selected(s); };

  const bool commutative = is_commutative(H);
  const bool cocommutative = is_cocommutative(H);
  report.details["hypotheses"] = {{"commutative", commutative},
                                  {"cocommutative", cocommutative},
                                  {"involutory", is_involutory(H)}};
  report.details["suites"] = cfg.suites;
  const bool hypotheses = commutative && cocommutative;
  // With the hypotheses violated, later checks are only reported, never asserted.
  const bool observational_mode = !hypotheses && cfg.algebra.allow_hypothesis_violation;

  Verifier v(cfg, report);

  // Hopf axioms.
  if (sel("hopf_axioms")) {
    std::vector<Task> tasks;
    auto add = [&](const char* name, bool (*check)(const HopfAlgebra&), std::size_t in, std::size_t out) {
      tasks.push_back(single("hopf_axioms", name, [&H, check, n, in, out] {
        return boolean(check(H), n, in, out);
      }));
    };
    add("associativity", check_associativity, 3, 1);
    add("coassociativity", check_coassociativity, 1, 3);
    add("unit", check_unit, 1, 1);
    add("counit", check_counit, 1, 1);
    add("bialgebra", check_bialgebra, 2, 2);
    add("antipode", check_antipode, 1, 1);
    add("antihom", check_antihom, 2, 1);
    v.stage(std::move(tasks), false);
  } else if (cfg.algebra.family == "explicit" && !cfg.algebra.eager_axioms) {
    if (!check_all_axioms(H).all()) v.block("the algebra fails the Hopf axioms");
  }
  if (!hypotheses && !cfg.algebra.allow_hypothesis_violation) {
    v.block("requires a commutative and cocommutative Hopf algebra "
            "(set allow_hypothesis_violation to run anyway)");
  }

  // Integrals and cup/cap.
  const bool need_pairing = sel("integrals") || sel("switchback") || sel("passcup") ||
                            sel("frobenius") || sel("braided_frobenius") || sel("twist") ||
                            sel("tortile") || sel("observational");
  std::optional<NormalizedPairing> pairing;
  if (need_pairing && !v.blocked()) {
    try {
      pairing = normalized_pairing(H);
      report.details["integrals"] = {
          {"Lambda", scalars_of_vector(H, pairing->integrals.Lambda, false)},
          {"lambda", scalars_of_vector(H, pairing->integrals.lambda, true)},
          {"c", pairing->c.to_string()},
          {"normalization", pairing->integrals.normalization.to_string()}};
    } catch (const std::exception& e) {
      v.block(std::string("cannot build cup and cap: ") + e.what());
    }
  }
  {
    std::vector<Task> tasks;
    if (sel("integrals")) {
      const auto* p = pairing ? &*pairing : nullptr;
      tasks.push_back(single("integrals", "left_integral",
                             [&H, p, n] { return boolean(is_left_integral(H, p->integrals.Lambda), n, 1, 1); }));
      tasks.push_back(single("integrals", "right_integral",
                             [&H, p, n] { return boolean(is_right_integral(H, p->integrals.Lambda), n, 1, 1); }));
      tasks.push_back(single("integrals", "left_functional",
                             [&H, p, n] { return boolean(is_left_functional(H, p->integrals.lambda), n, 1, 1); }));
      tasks.push_back(single("integrals", "right_functional",
                             [&H, p, n] { return boolean(is_right_functional(H, p->integrals.lambda), n, 1, 1); }));
      tasks.push_back(single("integrals", "nondegenerate",
                             [p, n] { return boolean(is_nondegenerate(p->cc.cup), n, 2, 0); }));
    }
    if (sel("switchback")) {
      const auto* p = pairing ? &*pairing : nullptr;
      tasks.push_back(single("switchback", "switchback_left", [p, n] {
        const auto I = TensorMap::identity(p->cc.cup.ring(), n, 1);
        return compare(compose(tensor(I, p->cc.cap), tensor(p->cc.cup, I)), I);
      }));
      tasks.push_back(single("switchback", "switchback_right", [p, n] {
        const auto I = TensorMap::identity(p->cc.cup.ring(), n, 1);
        return compare(compose(tensor(p->cc.cap, I), tensor(I, p->cc.cup)), I);
      }));
    }
    v.stage(std::move(tasks), observational_mode);
  }

  // Quantum heap and braidings.
  const bool need_braid = sel("tsd") || sel("braiding") || sel("ybe") || sel("passcup") ||
                          sel("frobenius") || sel("braided_frobenius") || sel("twist") ||
                          sel("tortile") || sel("observational");
  std::optional<BraidData> braid;
  if (need_braid && !v.blocked()) braid = build_braid(H);
  const TernaryOp op = heap_operation(H);
  {
    std::vector<Task> tasks;
    const BraidData* b = braid ? &*braid : nullptr;
    if (sel("tsd")) {
      tasks.push_back(single("tsd", "tsd", [&op, opt] { return check_TSD(op, opt); }));
      tasks.push_back(single("tsd", "invertible_tsd", [&op, opt] { return check_invertible_TSD(op, opt); }));
      tasks.push_back(single("tsd", "T_coalgebra_morphism", [&op] { return check_T_coalgebra_morphism(op); }));
    }
    if (sel("tsd") || sel("observational")) {
      auto t = single("tsd", "tsd_literal", [&op, opt] { return check_TSD_literal(op, opt); });
      t.observational = true;
      tasks.push_back(std::move(t));
    }
    if (sel("braiding")) {
      tasks.push_back(single("braiding", "beta1_inverse",
                             [b] { return check_inverse_pair(*b->beta1, *b->beta1_inv); }));
      tasks.push_back(single("braiding", "beta_inverse",
                             [b] { return check_inverse_pair(*b->beta, *b->beta_inv); }));
      tasks.push_back(single("braiding", "beta_factorization", [b] { return check_beta_factorization(*b); }));
    }
    if (sel("ybe")) {
      tasks.push_back(single("ybe", "ybe", [b, opt] { return check_YBE(b->beta, opt); }));
    }
    if (sel("passcup")) {
      const auto* p = pairing ? &*pairing : nullptr;
      tasks.push_back(single("passcup", "passcup", [b, p] { return check_passcup(*b, p->cc.cup); }));
      tasks.push_back(single("passcup", "passcap", [b, p] { return check_passcap(*b, p->cc.cap); }));
      tasks.push_back(single("passcup", "cup_through_beta_left",
                             [b, p] { return check_cup_through_beta_left(*b, p->cc.cup); }));
      tasks.push_back(single("passcup", "cup_through_beta_right",
                             [b, p] { return check_cup_through_beta_right(*b, p->cc.cup); }));
      tasks.push_back(single("passcup", "cap_through_beta_left",
                             [b, p] { return check_cap_through_beta_left(*b, p->cc.cap); }));
      tasks.push_back(single("passcup", "cap_through_beta_right",
                             [b, p] { return check_cap_through_beta_right(*b, p->cc.cap); }));
    }
    v.stage(std::move(tasks), observational_mode);
  }

  // Frobenius structure on X⊗X.
  const bool need_frobenius = sel("frobenius") || sel("braided_frobenius") || sel("twist") ||
                              sel("tortile") || sel("observational");
  std::optional<FrobeniusData> F;
  if (need_frobenius && !v.blocked()) {
    F = assemble_frobenius(H, *pairing, *braid);
    report.details["loop_value"] = loop_value(*F).to_string();
  }
  {
    std::vector<Task> tasks;
    const FrobeniusData* f = F ? &*F : nullptr;
    if (sel("frobenius")) {
      tasks.push_back(group("frobenius",
                            {"associativity", "coassociativity", "unit", "counit",
                             "compatibility_left", "compatibility_right"},
                            [f, opt] { return check_frobenius_axioms(*f, opt); }));
      tasks.push_back(group("frobenius", {"closed_form_delta_mu", "closed_form_left", "closed_form_right"},
                            [f] { return check_frobenius_closed_form(*f); }));
      tasks.push_back(single("frobenius", "capmult", [f] { return check_capmult(*f); }));
    }
    if (sel("braided_frobenius")) {
      tasks.push_back(group("braided_frobenius",
                            {"mu_through_beta_left", "mu_through_beta_right", "delta_through_beta_left",
                             "delta_through_beta_right", "unit_through_beta_left",
                             "unit_through_beta_right", "counit_through_beta_left",
                             "counit_through_beta_right"},
                            [f, opt] { return check_braided_frobenius(*f, opt); }));
    }
    v.stage(std::move(tasks), observational_mode);
  }

  // Twists.
  std::optional<TwistData> tw;
  if ((sel("twist") || sel("tortile") || sel("observational")) && !v.blocked()) tw = build_twist(*F);
  {
    std::vector<Task> tasks;
    const FrobeniusData* f = F ? &*F : nullptr;
    const TwistData* t = tw ? &*tw : nullptr;
    if (sel("twist")) {
      tasks.push_back(single("twist", "theta_closed_form", [t] { return compare(*t->theta, *t->theta_core); }));
      tasks.push_back(single("twist", "theta_invertible",
                             [t, n] { return boolean(invert(*t->theta).has_value(), n, 2, 2); }));
      tasks.push_back(single("twist", "theta_braiding_left",
                             [f, t] { return check_twist_braiding_left(*t->theta, f->braid.beta); }));
      tasks.push_back(single("twist", "theta_braiding_right",
                             [f, t] { return check_twist_braiding_right(*t->theta, f->braid.beta); }));
      tasks.push_back(single("twist", "slideloop", [f] { return check_slideloop(f->H, f->braid.T); }));
      tasks.push_back(single("twist", "theta_mu",
                             [f, t] { return check_twist_mu(*f, *t->theta, *t->theta_doubled); }));
      tasks.push_back(single("twist", "theta_delta",
                             [f, t] { return check_twist_delta(*f, *t->theta, *t->theta_doubled); }));
      tasks.push_back(single("twist", "theta_mu_closed_form", [f, t] {
        return compare(twist_mu_closed_form(*f), compose(*f->mu2, *t->theta));
      }));
      tasks.push_back(single("twist", "Theta_braiding_left",
                             [f, t] { return check_twist_braiding_left(*t->Theta, f->braid.beta); }));
      tasks.push_back(single("twist", "Theta_braiding_right",
                             [f, t] { return check_twist_braiding_right(*t->Theta, f->braid.beta); }));
      tasks.push_back(single("twist", "Theta_mu", [f, t] {
        return check_twist_mu(*f, *t->Theta, tortile_doubling(*t->Theta, f->braid.beta));
      }));
      tasks.push_back(single("twist", "Theta_delta", [f, t] {
        return check_twist_delta(*f, *t->Theta, tortile_doubling(*t->Theta, f->braid.beta));
      }));
    }
    if (sel("tortile")) {
      tasks.push_back(single("tortile", "tortile",
                             [f, t] { return check_tortile(*t->theta, *t->theta_doubled, f->braid.beta); }));
    }
    if (sel("twist") || sel("observational")) {
      auto cancel = single("twist", "cancelpair", [t] { return check_cancelpair(*t); });
      cancel.observational = true;
      tasks.push_back(std::move(cancel));
      auto same = single("twist", "theta_equals_Theta", [t] { return compare(*t->theta, *t->Theta); });
      same.observational = true;
      tasks.push_back(std::move(same));
    }
    v.stage(std::move(tasks), observational_mode);
  }

  report.exit_code = asserted_exit_code(report.checks);
  return report;
}

Report run_diagram(const SuiteConfig& cfg, const DiagramRequest& req) {
  Report report;
  report.command = "diagram";
  Equation eq;
  if (!req.inline_text.empty()) {
    eq = parse_inline_equation(req.inline_text);
  } else {
    const Equation* found = nullptr;
    std::vector<Equation> extra;
    if (!req.moves_path.empty()) {
      extra = parse_equation_file(read_file(req.moves_path));
      for (const auto& e : extra) {
        if (e.name == req.equation) found = &e;
      }
    }
    if (!found) found = MoveLibrary::builtin().find(req.equation);
    if (!found) throw ConfigError("unknown equation '" + req.equation + "'");
    eq = *found;
  }

  const HopfAlgebra H = build_algebra(cfg.algebra);
  report.algebra = fingerprint(H);
  std::set<std::string> used;
  collect_generators(eq.lhs, used);
  collect_generators(eq.rhs, used);
  const bool need_twist = used.count("theta") || used.count("Theta") || used.count("theta2");

  // Generators that need the Frobenius structure stay undefined if it cannot be
  // built, so using them surfaces as a ContextError.
  const std::string key = report.algebra.digest;
  std::optional<DiagramContext> ctx;
  std::optional<FrobeniusData> F;
  std::optional<TwistData> tw;
  try {
    F = build_frobenius(H, cfg.algebra.allow_hypothesis_violation);
  } catch (const Error&) {
  }
  if (F) {
    if (need_twist) tw = build_twist(*F);
    ctx = DiagramContext::from(*F, tw ? &*tw : nullptr, key);
  } else {
    ctx = hopf_context(H, build_braid(H), key);
  }

  report.details["equation"] = {{"name", eq.name},
                                {"lhs", print_diagram(eq.lhs)},
                                {"rhs", print_diagram(eq.rhs)},
                                {"expected", eq.observational ? "observational" : "asserted"}};
  Task task = single("diagram", eq.name, [&] { return check_equation(eq, *ctx, options_for(cfg)).comparison; });
  task.observational = eq.observational;
  // Context problems are input errors, not failed checks.
  for (const auto& g : used) ctx->lookup(g);
  report.checks = run_tasks({task}, 1);
  report.exit_code = asserted_exit_code(report.checks);
  return report;
}

const std::vector<std::string>& export_names() {
  static const std::vector<std::string> names = {
      "mu", "unit", "delta", "counit", "antipode", "Lambda", "lambda", "cup", "cap",
      "T", "beta1", "beta1_inv", "beta", "beta_inv", "theta", "Theta", "Theta_negative"};
  return names;
}

Fingerprint export_structures(const SuiteConfig& cfg, const std::string& dir) {
  using P = HopfAlgebra::Part;
  const HopfAlgebra H = build_algebra(cfg.algebra);
  const FrobeniusData F = build_frobenius(H, cfg.algebra.allow_hypothesis_violation);
  const Fingerprint fp = fingerprint(H);
  std::map<std::string, const TensorMap*> maps = {
      {"mu", &H.part(P::Mu)},          {"unit", &H.part(P::Unit)},
      {"delta", &H.part(P::Delta)},    {"counit", &H.part(P::Counit)},
      {"antipode", &H.part(P::Antipode)}, {"Lambda", &F.integrals.Lambda},
      {"lambda", &F.integrals.lambda}, {"cup", &F.cc.cup},
      {"cap", &F.cc.cap},              {"T", F.braid.T.get()},
      {"beta1", F.braid.beta1.get()},  {"beta1_inv", F.braid.beta1_inv.get()},
      {"beta", F.braid.beta.get()},    {"beta_inv", F.braid.beta_inv.get()}};
  const TensorMap theta = build_theta(heap_operation(H));
  const TensorMap Theta = build_Theta(F, false);
  const TensorMap Theta_negative = build_Theta(F, true);
  maps["theta"] = &theta;
  maps["Theta"] = &Theta;
  maps["Theta_negative"] = &Theta_negative;

  std::vector<std::pair<std::string, std::string>> files;
  json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kToolVersion;
  manifest["algebra"] = {{"ring", fp.ring},     {"family", fp.family}, {"params", fp.params},
                         {"rank", fp.rank},     {"digest", fp.digest}};
  manifest["labels"] = H.labels();
  json entries = json::array();
  for (const auto& name : export_names()) {
    std::string text = to_text(*maps.at(name));
    entries.push_back({{"name", name}, {"file", name + ".tensor"}, {"digest", fnv1a_hex(text)}});
    files.emplace_back(name + ".tensor", std::move(text));
  }
  manifest["files"] = std::move(entries);
  files.emplace_back("manifest.json", manifest.dump(2) + "\n");

  const fs::path target(dir);
  std::error_code ec;
  if (fs::exists(target, ec)) {
    if (!fs::is_directory(target) || (!fs::is_empty(target) && !fs::exists(target / "manifest.json"))) {
      throw SerializationError("refusing to overwrite '" + dir + "': not a previous export");
    }
  }
  const std::string suffix = std::to_string(::getpid());
  const fs::path tmp = target.string() + ".tmp-" + suffix;
  fs::remove_all(tmp, ec);
  try {
    if (!fs::create_directories(tmp)) throw SerializationError("cannot create '" + tmp.string() + "'");
    for (const auto& [file, text] : files) {
      std::ofstream out(tmp / file, std::ios::binary);
      out << text;
      if (!out) throw SerializationError("cannot write '" + (tmp / file).string() + "'");
    }
    if (fs::exists(target)) {
      const fs::path old = target.string() + ".old-" + suffix;
      fs::rename(target, old);
      fs::rename(tmp, target);
      fs::remove_all(old, ec);
    } else {
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      fs::rename(tmp, target);
    }
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(tmp, ec);
    throw SerializationError(e.what());
  } catch (...) {
    fs::remove_all(tmp, ec);
    throw;
  }
  return fp;
}

ImportedStructures import_structures(const std::string& dir) {
  const fs::path root(dir);
  json manifest;
  try {
    manifest = json::parse(read_file((root / "manifest.json").string()));
  } catch (const json::exception& e) {
    throw SerializationError(std::string("manifest.json: ") + e.what());
  } catch (const ConfigError& e) {
    throw SerializationError(e.what());
  }
  ImportedStructures out;
  try {
    for (const auto& entry : manifest.at("files")) {
      const std::string name = entry.at("name").get<std::string>();
      std::string text;
      try {
        text = read_file((root / entry.at("file").get<std::string>()).string());
      } catch (const ConfigError& e) {
        throw SerializationError(e.what());
      }
      if (fnv1a_hex(text) != entry.at("digest").get<std::string>()) {
        throw SerializationError(name + ": digest does not match the manifest");
      }
      out.maps.emplace(name, tensor_from_text(text));
    }
    const auto& a = manifest.at("algebra");
    for (const char* part : {"mu", "unit", "delta", "counit", "antipode"}) {
      if (!out.maps.count(part)) throw SerializationError(std::string("missing ") + part);
    }
    const HopfAlgebra h(out.maps.at("mu"), out.maps.at("unit"), out.maps.at("delta"),
                        out.maps.at("counit"), out.maps.at("antipode"),
                        manifest.at("labels").get<std::vector<std::string>>(),
                        a.at("family").get<std::string>(), a.at("params").get<std::string>());
    out.fingerprint = fingerprint(h);
    const Fingerprint stated{a.at("ring").get<std::string>(), a.at("family").get<std::string>(),
                             a.at("params").get<std::string>(), a.at("rank").get<std::size_t>(),
                             a.at("digest").get<std::string>()};
    if (!(stated == out.fingerprint)) throw SerializationError("algebra fingerprint does not match the manifest");
  } catch (const json::exception& e) {
    throw SerializationError(std::string("manifest.json: ") + e.what());
  }
  return out;
}

int cmd_verify(const std::string& config_path, const std::string& report_path,
               std::optional<unsigned> jobs, std::ostream& out, std::ostream& err) {
  try {
    SuiteConfig cfg = load_config(config_path);
    if (jobs) {
      if (*jobs == 0) throw ConfigError("--jobs must be positive");
      cfg.jobs = *jobs;
    }
    const Report report = run_verify(cfg);
    print_summary(out, report);
    const std::string path = report_path.empty() ? cfg.output : report_path;
    if (!path.empty()) write_json(path, to_json(report));
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_diagram(const std::string& config_path, const DiagramRequest& req,
                const std::string& report_path, std::ostream& out, std::ostream& err) {
  try {
    if (req.inline_text.empty() == req.equation.empty()) {
      throw ConfigError("give exactly one of --eq and --inline");
    }
    const SuiteConfig cfg = load_config(config_path);
    const Report report = run_diagram(cfg, req);
    print_summary(out, report);
    if (!report_path.empty()) write_json(report_path, to_json(report));
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_export(const std::string& config_path, const std::string& dir, std::ostream& out,
               std::ostream& err) {
  try {
    const SuiteConfig cfg = load_config(config_path);
    const Fingerprint fp = export_structures(cfg, dir);
    out << "exported " << export_names().size() << " maps to " << dir << " (digest " << fp.digest
        << ")\n";
    return kExitPass;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace bfl::cli
