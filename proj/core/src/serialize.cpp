#include "bfl/serialize.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.empty()) throw SerializationError("line " + std::to_string(line) + ": expected a number");
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw SerializationError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

MultiIndex parse_multi(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw SerializationError("line " + std::to_string(line) + ": bad multi-index '" + std::string(s) + "'");
  }
  s = s.substr(1, s.size() - 2);
  MultiIndex m;
  if (trim(s).empty()) return m;
  while (true) {
    const auto comma = s.find(',');
    m.digits.push_back(static_cast<std::uint32_t>(parse_count(s.substr(0, comma), line)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return m;
}

std::string_view header_value(std::string_view line, std::string_view key, std::size_t lineno) {
  line = trim(line);
  if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ':') {
    throw SerializationError("line " + std::to_string(lineno) + ": expected '" + std::string(key) + ":'");
  }
  return trim(line.substr(key.size() + 1));
}

TensorMap parse_body(const std::vector<std::string_view>& lines, std::size_t first,
                     const Ring& ring, std::size_t rank, std::size_t in_arity,
                     std::size_t out_arity) {
  std::vector<TensorMap::Entry> entries;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    const std::size_t lineno = i + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto arrow = line.find("<-");
    const auto colon = line.find(':');
    if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow) {
      throw SerializationError("line " + std::to_string(lineno) + ": expected 'out <- in : scalar'");
    }
    const auto out = parse_multi(line.substr(0, arrow), lineno);
    const auto in = parse_multi(line.substr(arrow + 2, colon - arrow - 2), lineno);
    if (out.arity() != out_arity || in.arity() != in_arity) {
      throw SerializationError("line " + std::to_string(lineno) + ": multi-index arity does not match");
    }
    for (auto d : out.digits) {
      if (d >= rank) throw SerializationError("line " + std::to_string(lineno) + ": digit out of range");
    }
    for (auto d : in.digits) {
      if (d >= rank) throw SerializationError("line " + std::to_string(lineno) + ": digit out of range");
    }
    Scalar value;
    try {
      value = ring.parse_scalar(trim(line.substr(colon + 1)));
    } catch (const Error& e) {
      throw SerializationError("line " + std::to_string(lineno) + ": " + e.what());
    }
    entries.push_back({out.flatten(rank), in.flatten(rank), value});
  }
  return TensorMap::from_entries(ring, rank, in_arity, out_arity, std::move(entries));
}

}  // namespace

std::string to_text(const TensorMap& f) {
  std::ostringstream os;
  os << "# tensor\n"
     << "ring: " << f.ring().to_string() << "\n"
     << "rank: " << f.rank() << "\n"
     << "arity: " << f.in_arity() << " -> " << f.out_arity() << "\n";
  for (const auto& e : f.entries()) {
    os << MultiIndex::unflatten(e.out, f.rank(), f.out_arity()).to_string() << " <- "
       << MultiIndex::unflatten(e.in, f.rank(), f.in_arity()).to_string() << " : "
       << e.value.to_string() << "\n";
  }
  return os.str();
}

TensorMap tensor_from_text(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.size() < 4 || trim(lines[0]) != "# tensor") {
    throw SerializationError("line 1: expected '# tensor' header");
  }
  std::optional<Ring> ring;
  try {
    ring = Ring::parse(header_value(lines[1], "ring", 2));
  } catch (const ConfigError& e) {
    throw SerializationError(std::string("line 2: ") + e.what());
  }
  const std::size_t rank = parse_count(header_value(lines[2], "rank", 3), 3);
  if (rank == 0) throw SerializationError("line 3: rank must be positive");
  const auto arity = header_value(lines[3], "arity", 4);
  const auto arrow = arity.find("->");
  if (arrow == std::string_view::npos) throw SerializationError("line 4: expected 'a -> b'");
  const std::size_t in_arity = parse_count(arity.substr(0, arrow), 4);
  const std::size_t out_arity = parse_count(arity.substr(arrow + 2), 4);
  return parse_body(lines, 4, *ring, rank, in_arity, out_arity);
}

TensorMap entries_from_text(std::string_view text, const Ring& ring, std::size_t rank,
                            std::size_t in_arity, std::size_t out_arity) {
  return parse_body(lines_of(text), 0, ring, rank, in_arity, out_arity);
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bfl
