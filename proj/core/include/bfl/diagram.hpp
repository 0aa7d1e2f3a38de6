#pragma once

// String-diagram expressions over X-wires.
//
//   expr   := term (";" term)*        f ; g  means f, then g
//   term   := factor ("*" factor)*    f * g  places f left of g
//   factor := IDENT ("^" INT)? | "(" expr ")"
//
// '#' starts a comment that runs to the end of the line.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bfl/circuit.hpp"
#include "bfl/twist.hpp"

namespace bfl {

struct DiagramNode {
  enum class Kind { Generator, Power, Parallel, Sequential };

  Kind kind = Kind::Generator;
  std::string name;           // Generator and Power
  std::size_t exponent = 1;   // Power
  std::vector<DiagramNode> children;  // Parallel and Sequential
  std::size_t line = 1;
  std::size_t column = 1;
  // Filled in by arity_check.
  bool checked = false;
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
};

/// Structural equality; positions and annotations are ignored.
bool same_structure(const DiagramNode& a, const DiagramNode& b);

/// ParseError with line and column on malformed input. `line` and `column`
/// give the position of the first character of `src` in a larger document.
DiagramNode parse_diagram(std::string_view src, std::size_t line = 1, std::size_t column = 1);
/// Canonical text; compound children of compound nodes are parenthesized, so
/// parse_diagram(print_diagram(a)) has the same structure as a.
std::string print_diagram(const DiagramNode& node);

/// (in, out) arity of a generator name, in X-wires.
std::optional<std::pair<std::size_t, std::size_t>> generator_arity(std::string_view name);
/// Annotates every node; ArityError on unknown generators or mismatched composition.
void arity_check(DiagramNode& node);

/// Generator maps available for evaluation.
class DiagramContext {
 public:
  DiagramContext(Ring ring, std::size_t rank, std::string key);
  /// Hopf, braid and Frobenius generators; twist generators when `twist` is given.
  static DiagramContext from(const FrobeniusData& f, const TwistData* twist, std::string key);

  void define(const std::string& name, MapPtr map);
  /// ContextError if the generator is not available.
  const MapPtr& lookup(const std::string& name) const;
  bool has(const std::string& name) const { return maps_.count(name) != 0; }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  /// Identifies the algebra in cache keys.
  const std::string& key() const { return key_; }

 private:
  Ring ring_;
  std::size_t rank_;
  std::string key_;
  std::map<std::string, MapPtr> maps_;
};

/// Evaluated diagrams keyed by (algebra key, printed diagram). Readers share a
/// lock; insertion takes it exclusively.
class EvalCache {
 public:
  MapPtr find(const std::string& algebra, const std::string& diagram) const;
  MapPtr insert(const std::string& algebra, const std::string& diagram, MapPtr map);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, MapPtr> entries_;
};

/// Lazy circuit for an arity-checked diagram.
Circuit compile_diagram(const DiagramNode& node, const DiagramContext& ctx);
/// Full map. Sequential chains are contracted greedily, always composing the
/// adjacent pair with the smallest result.
TensorMap evaluate(const DiagramNode& node, const DiagramContext& ctx, EvalCache* cache = nullptr);
/// Full map, composing strictly left to right.
TensorMap evaluate_left_to_right(const DiagramNode& node, const DiagramContext& ctx);

struct Equation {
  std::string name;
  DiagramNode lhs;
  DiagramNode rhs;
  bool observational = false;
  std::size_t line = 1;
};

struct EquationResult {
  std::string name;
  bool observational = false;
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
  Comparison comparison;
};

/// Parses "LHS == RHS" (no name); both sides are arity-checked.
Equation parse_inline_equation(std::string_view text);
/// One `NAME : LHS == RHS [observational]` per line; '#' comments and blank lines allowed.
std::vector<Equation> parse_equation_file(std::string_view text);
/// ArityError if the two sides have different arities.
EquationResult check_equation(const Equation& eq, const DiagramContext& ctx,
                              const CompareOptions& options = {});

/// Source text of the built-in move library.
std::string_view builtin_moves_text();
class MoveLibrary {
 public:
  static const MoveLibrary& builtin();
  explicit MoveLibrary(std::vector<Equation> equations);

  const std::vector<Equation>& equations() const { return equations_; }
  /// nullptr if absent.
  const Equation* find(std::string_view name) const;

 private:
  std::vector<Equation> equations_;
};

}  // namespace bfl
