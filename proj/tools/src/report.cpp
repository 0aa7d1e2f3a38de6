#include "bfl_cli/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>

#include "bfl/errors.hpp"
#include "bfl/serialize.hpp"

namespace bfl::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ObservationalTrue: return "observational-true";
    case Status::ObservationalFalse: return "observational-false";
    case Status::Error: return "error";
  }
  return "error";
}

Fingerprint fingerprint(const HopfAlgebra& h) {
  std::string text;
  for (auto p : {HopfAlgebra::Part::Mu, HopfAlgebra::Part::Unit, HopfAlgebra::Part::Delta,
                 HopfAlgebra::Part::Counit, HopfAlgebra::Part::Antipode}) {
    text += to_text(h.part(p));
  }
  return {h.ring().to_string(), h.family(), h.params(), h.rank(), fnv1a_hex(text)};
}

int asserted_exit_code(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    if (!c.observational && (c.status == Status::Fail || c.status == Status::Error)) return 1;
  }
  return 0;
}

nlohmann::ordered_json to_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = r.command;
  j["algebra"] = {{"ring", r.algebra.ring},     {"family", r.algebra.family},
                  {"params", r.algebra.params}, {"rank", r.algebra.rank},
                  {"digest", r.algebra.digest}};
  for (const auto& [k, v] : r.details.items()) j[k] = v;

  json checks = json::object();
  std::map<std::string, std::size_t> totals;
  for (const auto& c : r.checks) {
    json e;
    e["status"] = to_string(c.status);
    e["expected"] = c.observational ? "observational" : "asserted";
    e["wall_time"] = c.wall_time;
    e["dimensions"] = {{"in_arity", c.in_arity}, {"out_arity", c.out_arity}, {"flattened", c.dimension}};
    e["streamed"] = c.streamed;
    if (!c.witnesses.empty()) {
      json ws = json::array();
      for (const auto& w : c.witnesses) {
        ws.push_back({{"out", MultiIndex::unflatten(w.out, r.algebra.rank, c.out_arity).to_string()},
                      {"in", MultiIndex::unflatten(w.in, r.algebra.rank, c.in_arity).to_string()},
                      {"lhs", w.lhs.to_string()},
                      {"rhs", w.rhs.to_string()}});
      }
      e["witnesses"] = std::move(ws);
    }
    if (!c.message.empty()) e["message"] = c.message;
    checks[c.suite][c.name] = std::move(e);
    ++totals[to_string(c.status)];
  }
  j["checks"] = std::move(checks);
  json summary;
  for (auto s : {Status::Pass, Status::Fail, Status::Error, Status::ObservationalTrue,
                 Status::ObservationalFalse}) {
    summary[to_string(s)] = totals[to_string(s)];
  }
  j["summary"] = std::move(summary);
  j["exit_code"] = r.exit_code;
  return j;
}

void print_summary(std::ostream& os, const Report& r) {
  os << kToolName << ' ' << r.command << ": " << r.algebra.family;
  if (!r.algebra.params.empty()) os << ' ' << r.algebra.params;
  os << " over " << r.algebra.ring << ", rank " << r.algebra.rank << '\n';
  std::map<Status, std::size_t> totals;
  for (const auto& c : r.checks) {
    ++totals[c.status];
    os << "  " << std::left << std::setw(20) << to_string(c.status) << ' '
       << std::setw(44) << (c.suite + "/" + c.name) << " dim " << std::setw(9) << c.dimension
       << std::fixed << std::setprecision(3) << c.wall_time << "s";
    if (c.streamed) os << " (streamed)";
    os << '\n';
    if (!c.message.empty()) os << "      " << c.message << '\n';
    for (const auto& w : c.witnesses) {
      os << "      " << MultiIndex::unflatten(w.out, r.algebra.rank, c.out_arity).to_string()
         << " <- " << MultiIndex::unflatten(w.in, r.algebra.rank, c.in_arity).to_string()
         << ": lhs " << w.lhs.to_string() << ", rhs " << w.rhs.to_string() << '\n';
    }
  }
  os << totals[Status::Pass] << " pass, " << totals[Status::Fail] << " fail, "
     << totals[Status::Error] << " error, "
     << totals[Status::ObservationalTrue] + totals[Status::ObservationalFalse]
     << " observational; exit " << r.exit_code << '\n';
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SerializationError("cannot write '" + tmp.string() + "'");
    out << j.dump(2) << '\n';
    if (!out) throw SerializationError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw SerializationError("cannot rename report into '" + path + "'");
  }
}

}  // namespace bfl::cli
