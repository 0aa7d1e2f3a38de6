#include "bfl/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <mutex>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

using Kind = DiagramNode::Kind;

enum class Tok { Ident, Int, Semi, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Int: return "number " + t.text;
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, column};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      t.text.clear();
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      t.text.clear();
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case ';': t.kind = Tok::Semi; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    advance();
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  DiagramNode parse() {
    DiagramNode node = expr();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return node;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  // Folds a list into a compound node, or returns the single element.
  static DiagramNode combine(Kind kind, std::vector<DiagramNode> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    DiagramNode node;
    node.kind = kind;
    node.line = parts.front().line;
    node.column = parts.front().column;
    node.children = std::move(parts);
    return node;
  }

  DiagramNode expr() {
    std::vector<DiagramNode> parts{term()};
    while (peek().kind == Tok::Semi) {
      take();
      parts.push_back(term());
    }
    return combine(Kind::Sequential, std::move(parts));
  }

  DiagramNode term() {
    std::vector<DiagramNode> parts{factor()};
    while (peek().kind == Tok::Star) {
      take();
      parts.push_back(factor());
    }
    return combine(Kind::Parallel, std::move(parts));
  }

  DiagramNode factor() {
    if (peek().kind == Tok::LParen) {
      const Token open = take();
      DiagramNode inner = expr();
      if (peek().kind != Tok::RParen) {
        fail("expected ')' to close '(' at " + std::to_string(open.line) + ":" +
             std::to_string(open.column) + ", found " + describe(peek()));
      }
      take();
      return inner;
    }
    if (peek().kind != Tok::Ident) fail("expected generator or '(', found " + describe(peek()));
    const Token& id = take();
    DiagramNode node;
    node.kind = Kind::Generator;
    node.name = id.text;
    node.line = id.line;
    node.column = id.column;
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Int) fail("expected exponent after '^', found " + describe(peek()));
      const Token& n = peek();
      std::size_t k = 0;
      for (char d : n.text) {
        if (k > (std::numeric_limits<std::size_t>::max() - 9) / 10) fail("exponent too large");
        k = 10 * k + static_cast<std::size_t>(d - '0');
      }
      if (k == 0) fail("exponent must be positive");
      take();
      node.kind = Kind::Power;
      node.exponent = k;
    }
    return node;
  }
};

bool is_compound(const DiagramNode& n) {
  return n.kind == Kind::Parallel || n.kind == Kind::Sequential;
}

std::string location(const DiagramNode& n) {
  return std::to_string(n.line) + ":" + std::to_string(n.column) + ": ";
}

struct GeneratorInfo {
  std::string_view name;
  std::size_t in;
  std::size_t out;
};

constexpr std::array<GeneratorInfo, 21> kGenerators{{
    {"id", 1, 1},       {"mu", 2, 1},     {"delta", 1, 2},    {"eta", 0, 1},
    {"eps", 1, 0},      {"S", 1, 1},      {"tau", 2, 2},      {"T", 3, 1},
    {"cup", 2, 0},      {"cap", 0, 2},    {"beta1", 3, 3},    {"beta1inv", 3, 3},
    {"beta", 4, 4},     {"betainv", 4, 4}, {"theta", 2, 2},   {"Theta", 2, 2},
    {"theta2", 4, 4},   {"mu2", 4, 2},    {"delta2", 2, 4},   {"eta2", 0, 2},
    {"eps2", 2, 0},
}};

MapPtr share(TensorMap m) { return std::make_shared<const TensorMap>(std::move(m)); }

TensorMap power_of(const TensorMap& g, std::size_t k) {
  TensorMap result = g;
  for (std::size_t i = 1; i < k; ++i) result = tensor(result, g);
  return result;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits "LHS == RHS" in `body`, which starts at column `col` of `line`.
std::pair<DiagramNode, DiagramNode> parse_sides(std::string_view body, std::size_t line,
                                                std::size_t col) {
  const auto eq = body.find("==");
  if (eq == std::string_view::npos) throw ParseError("expected '=='", line, col + body.size());
  if (body.find("==", eq + 2) != std::string_view::npos) {
    throw ParseError("more than one '=='", line, col + body.find("==", eq + 2));
  }
  DiagramNode lhs = parse_diagram(body.substr(0, eq), line, col);
  DiagramNode rhs = parse_diagram(body.substr(eq + 2), line, col + eq + 2);
  arity_check(lhs);
  arity_check(rhs);
  return {std::move(lhs), std::move(rhs)};
}

void require_matching_sides(const std::string& name, const DiagramNode& lhs, const DiagramNode& rhs) {
  if (lhs.in_arity != rhs.in_arity || lhs.out_arity != rhs.out_arity) {
    throw ArityError(location(lhs) + (name.empty() ? "equation" : name) + ": left side is " +
                     std::to_string(lhs.in_arity) + "->" + std::to_string(lhs.out_arity) +
                     ", right side is " + std::to_string(rhs.in_arity) + "->" +
                     std::to_string(rhs.out_arity));
  }
}

}  // namespace

bool same_structure(const DiagramNode& a, const DiagramNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Generator: return a.name == b.name;
    case Kind::Power: return a.name == b.name && a.exponent == b.exponent;
    default:
      return a.children.size() == b.children.size() &&
             std::equal(a.children.begin(), a.children.end(), b.children.begin(), same_structure);
  }
}

DiagramNode parse_diagram(std::string_view src, std::size_t line, std::size_t column) {
  return Parser(lex(src, line, column)).parse();
}

std::string print_diagram(const DiagramNode& node) {
  switch (node.kind) {
    case Kind::Generator: return node.name;
    case Kind::Power: return node.name + "^" + std::to_string(node.exponent);
    default: break;
  }
  const char* sep = node.kind == Kind::Parallel ? " * " : " ; ";
  std::string out;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += sep;
    const auto& c = node.children[i];
    out += is_compound(c) ? "(" + print_diagram(c) + ")" : print_diagram(c);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> generator_arity(std::string_view name) {
  for (const auto& g : kGenerators) {
    if (g.name == name) return std::pair{g.in, g.out};
  }
  return std::nullopt;
}

void arity_check(DiagramNode& node) {
  switch (node.kind) {
    case Kind::Generator:
    case Kind::Power: {
      const auto a = generator_arity(node.name);
      if (!a) throw ArityError(location(node) + "unknown generator '" + node.name + "'");
      node.in_arity = a->first * node.exponent;
      node.out_arity = a->second * node.exponent;
      if (node.kind == Kind::Generator && node.exponent != 1) {
        throw ArityError(location(node) + "generator node carries an exponent");
      }
      break;
    }
    case Kind::Parallel:
      node.in_arity = node.out_arity = 0;
      for (auto& c : node.children) {
        arity_check(c);
        node.in_arity += c.in_arity;
        node.out_arity += c.out_arity;
      }
      break;
    case Kind::Sequential:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        auto& c = node.children[i];
        arity_check(c);
        if (i > 0 && node.children[i - 1].out_arity != c.in_arity) {
          throw ArityError(location(c) + "'" + print_diagram(c) + "' takes " +
                           std::to_string(c.in_arity) + " wires but receives " +
                           std::to_string(node.children[i - 1].out_arity));
        }
      }
      if (node.children.empty()) throw ArityError(location(node) + "empty composition");
      node.in_arity = node.children.front().in_arity;
      node.out_arity = node.children.back().out_arity;
      break;
  }
  node.checked = true;
}

DiagramContext::DiagramContext(Ring ring, std::size_t rank, std::string key)
    : ring_(ring), rank_(rank), key_(std::move(key)) {
  define("id", share(TensorMap::identity(ring, rank, 1)));
  const std::array<std::size_t, 2> swap{1, 0};
  define("tau", share(permute(ring, rank, swap)));
}

DiagramContext DiagramContext::from(const FrobeniusData& f, const TwistData* twist, std::string key) {
  using P = HopfAlgebra::Part;
  const auto& h = f.H;
  DiagramContext ctx(h.ring(), h.rank(), std::move(key));
  ctx.define("mu", h.shared(P::Mu));
  ctx.define("eta", h.shared(P::Unit));
  ctx.define("delta", h.shared(P::Delta));
  ctx.define("eps", h.shared(P::Counit));
  ctx.define("S", h.shared(P::Antipode));
  ctx.define("T", f.braid.T);
  ctx.define("cup", share(f.cc.cup));
  ctx.define("cap", share(f.cc.cap));
  ctx.define("beta1", f.braid.beta1);
  ctx.define("beta1inv", f.braid.beta1_inv);
  ctx.define("beta", f.braid.beta);
  ctx.define("betainv", f.braid.beta_inv);
  ctx.define("mu2", f.mu2);
  ctx.define("delta2", f.delta2);
  ctx.define("eta2", f.eta2);
  ctx.define("eps2", f.eps2);
  if (twist) {
    ctx.define("theta", twist->theta);
    ctx.define("Theta", twist->Theta);
    ctx.define("theta2", twist->theta_doubled);
  }
  return ctx;
}

void DiagramContext::define(const std::string& name, MapPtr map) {
  const auto a = generator_arity(name);
  if (!a) throw ContextError("unknown generator '" + name + "'");
  if (!(map->ring() == ring_) || map->rank() != rank_ || map->in_arity() != a->first ||
      map->out_arity() != a->second) {
    throw ShapeError("generator '" + name + "' has the wrong shape");
  }
  maps_[name] = std::move(map);
}

const MapPtr& DiagramContext::lookup(const std::string& name) const {
  const auto it = maps_.find(name);
  if (it == maps_.end()) {
    throw ContextError("generator '" + name + "' is not available in this context");
  }
  return it->second;
}

MapPtr EvalCache::find(const std::string& algebra, const std::string& diagram) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(algebra + '\n' + diagram);
  return it == entries_.end() ? nullptr : it->second;
}

MapPtr EvalCache::insert(const std::string& algebra, const std::string& diagram, MapPtr map) {
  std::unique_lock lock(mutex_);
  // First writer wins so every reader sees the same object.
  return entries_.try_emplace(algebra + '\n' + diagram, std::move(map)).first->second;
}

std::size_t EvalCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

Circuit compile_diagram(const DiagramNode& node, const DiagramContext& ctx) {
  if (!node.checked) throw ArityError(location(node) + "diagram has not been arity-checked");
  switch (node.kind) {
    case Kind::Generator:
    case Kind::Power: {
      if (node.name == "id") return Circuit(ctx.ring(), ctx.rank(), node.exponent);
      const auto& g = ctx.lookup(node.name);
      Circuit c = Circuit::of(g);
      for (std::size_t i = 1; i < node.exponent; ++i) c = c.beside(Circuit::of(g));
      return c;
    }
    case Kind::Parallel: {
      Circuit c = compile_diagram(node.children.front(), ctx);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        c = c.beside(compile_diagram(node.children[i], ctx));
      }
      return c;
    }
    case Kind::Sequential: {
      Circuit c = compile_diagram(node.children.front(), ctx);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        c.then(compile_diagram(node.children[i], ctx));
      }
      return c;
    }
  }
  throw ArityError("unreachable");
}

namespace {

TensorMap evaluate_node(const DiagramNode& node, const DiagramContext& ctx, EvalCache* cache,
                        bool greedy) {
  if (!node.checked) throw ArityError(location(node) + "diagram has not been arity-checked");
  std::string key;
  if (cache && is_compound(node)) {
    key = print_diagram(node);
    if (auto hit = cache->find(ctx.key(), key)) return *hit;
  }
  TensorMap result = [&]() -> TensorMap {
    switch (node.kind) {
      case Kind::Generator: return *ctx.lookup(node.name);
      case Kind::Power:
        if (node.name == "id") return TensorMap::identity(ctx.ring(), ctx.rank(), node.exponent);
        return power_of(*ctx.lookup(node.name), node.exponent);
      case Kind::Parallel: {
        TensorMap acc = evaluate_node(node.children.front(), ctx, cache, greedy);
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          acc = tensor(acc, evaluate_node(node.children[i], ctx, cache, greedy));
        }
        return acc;
      }
      case Kind::Sequential: break;
    }
    std::vector<TensorMap> chain;
    for (const auto& c : node.children) chain.push_back(evaluate_node(c, ctx, cache, greedy));
    while (chain.size() > 1) {
      std::size_t best = 0;
      if (greedy) {
        // Every wire has the same rank, so the result's flattened size is
        // ordered by its total arity. Ties go to the leftmost pair.
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          const std::size_t cost = chain[i].in_arity() + chain[i + 1].out_arity();
          if (cost < best_cost) {
            best_cost = cost;
            best = i;
          }
        }
      }
      chain[best] = compose(chain[best], chain[best + 1]);
      chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    }
    return std::move(chain.front());
  }();
  if (!key.empty()) return *cache->insert(ctx.key(), key, share(std::move(result)));
  return result;
}

}  // namespace

TensorMap evaluate(const DiagramNode& node, const DiagramContext& ctx, EvalCache* cache) {
  return evaluate_node(node, ctx, cache, true);
}

TensorMap evaluate_left_to_right(const DiagramNode& node, const DiagramContext& ctx) {
  return evaluate_node(node, ctx, nullptr, false);
}

Equation parse_inline_equation(std::string_view text) {
  auto [lhs, rhs] = parse_sides(text, 1, 1);
  require_matching_sides("", lhs, rhs);
  return {"inline", std::move(lhs), std::move(rhs), false, 1};
}

std::vector<Equation> parse_equation_file(std::string_view text) {
  std::vector<Equation> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'NAME :'", line_no, 1);
    const std::string name = trim(line.substr(0, colon));
    if (!is_identifier(name)) {
      throw ParseError("equation name must be an identifier", line_no, 1);
    }
    std::string_view body = line.substr(colon + 1);
    bool observational = false;
    if (const auto open = body.rfind('['); open != std::string_view::npos) {
      const auto close = body.find(']', open);
      const std::string tag =
          close == std::string_view::npos ? "" : trim(body.substr(open + 1, close - open - 1));
      if (close == std::string_view::npos || !trim(body.substr(close + 1)).empty()) {
        throw ParseError("malformed tag", line_no, colon + 2 + open);
      }
      if (tag == "observational") {
        observational = true;
      } else if (tag != "asserted") {
        throw ParseError("unknown tag '" + tag + "'", line_no, colon + 2 + open);
      }
      body = body.substr(0, open);
    }
    auto [lhs, rhs] = parse_sides(body, line_no, colon + 2);
    require_matching_sides(name, lhs, rhs);
    for (const auto& e : out) {
      if (e.name == name) throw ParseError("duplicate equation '" + name + "'", line_no, 1);
    }
    out.push_back({name, std::move(lhs), std::move(rhs), observational, line_no});
  }
  return out;
}

EquationResult check_equation(const Equation& eq, const DiagramContext& ctx,
                              const CompareOptions& options) {
  DiagramNode lhs = eq.lhs;
  DiagramNode rhs = eq.rhs;
  arity_check(lhs);
  arity_check(rhs);
  require_matching_sides(eq.name, lhs, rhs);
  EquationResult r{eq.name, eq.observational, lhs.in_arity, lhs.out_arity, {}};
  r.comparison = compare(compile_diagram(lhs, ctx), compile_diagram(rhs, ctx), options);
  return r;
}

std::string_view builtin_moves_text() {
  return R"(# Hopf algebra
associativity : (mu * id) ; mu == (id * mu) ; mu
coassociativity : delta ; (delta * id) == delta ; (id * delta)
bialgebra : mu ; delta == (delta * delta) ; (id * tau * id) ; (mu * mu)
antipode_left : delta ; (S * id) ; mu == eps ; eta
antipode_right : delta ; (id * S) ; mu == eps ; eta
heap : T == (id * S * id) ; (mu * id) ; mu

# braiding
ybe : (beta * id^2) ; (id^2 * beta) ; (beta * id^2) == (id^2 * beta) ; (beta * id^2) ; (id^2 * beta)
ybe_inverse : (betainv * id^2) ; (id^2 * betainv) ; (betainv * id^2) == (id^2 * betainv) ; (betainv * id^2) ; (id^2 * betainv)
beta_inverse : beta ; betainv == id^4
beta1_inverse : beta1 ; beta1inv == id^3
beta_factorization : beta == (id * beta1) ; (beta1 * id)

# cup and cap
switchback_left : (id * cap) ; (cup * id) == id
switchback_right : (cap * id) ; (id * cup) == id
passcup : (beta1 * id) ; (id^2 * cup) == (id * beta1inv) ; (cup * id^2)
passcap : (id^2 * cap) ; (beta1inv * id) == (cap * id^2) ; (id * beta1)
cup_through_beta_right : beta ; (id^2 * cup) == cup * id^2
cup_through_beta_left : beta ; (cup * id^2) == id^2 * cup
cap_through_beta_left : (cap * id^2) ; beta == id^2 * cap
cap_through_beta_right : (id^2 * cap) ; beta == cap * id^2

# Frobenius structure on X*X
frobenius_mu : mu2 == id * cup * id
frobenius_delta : delta2 == id * cap * id
frobenius_associativity : (mu2 * id^2) ; mu2 == (id^2 * mu2) ; mu2
frobenius_coassociativity : delta2 ; (delta2 * id^2) == delta2 ; (id^2 * delta2)
frobenius_unit_left : (eta2 * id^2) ; mu2 == id^2
frobenius_unit_right : (id^2 * eta2) ; mu2 == id^2
frobenius_counit_left : delta2 ; (eps2 * id^2) == id^2
frobenius_counit_right : delta2 ; (id^2 * eps2) == id^2
frobenius_compatibility_left : (delta2 * id^2) ; (id^2 * mu2) == mu2 ; delta2
frobenius_compatibility_right : (id^2 * delta2) ; (mu2 * id^2) == mu2 ; delta2
capmult : delta2 == (id^2 * (eta2 ; delta2)) ; (mu2 * id^2)

# braided Frobenius
mu_through_beta_left : (beta * id^2) ; (id^2 * beta) ; (mu2 * id^2) == (id^2 * mu2) ; beta
mu_through_beta_right : (id^2 * beta) ; (beta * id^2) ; (id^2 * mu2) == (mu2 * id^2) ; beta
delta_through_beta_left : (id^2 * delta2) ; (beta * id^2) ; (id^2 * beta) == beta ; (delta2 * id^2)
delta_through_beta_right : (delta2 * id^2) ; (id^2 * beta) ; (beta * id^2) == beta ; (id^2 * delta2)
unit_through_beta_left : (eta2 * id^2) ; beta == id^2 * eta2
unit_through_beta_right : (id^2 * eta2) ; beta == eta2 * id^2
counit_through_beta_left : beta ; (eps2 * id^2) == id^2 * eps2
counit_through_beta_right : beta ; (id^2 * eps2) == eps2 * id^2

# twists
theta_braiding_left : (theta * id^2) ; beta == beta ; (id^2 * theta)
theta_braiding_right : (id^2 * theta) ; beta == beta ; (theta * id^2)
slideloop : (id * (delta ; (delta * id)) * (delta ; (delta * id))) ; (id^3 * tau * id^2) ; (id^4 * tau * id) ; (id^3 * tau * id^2) ; (id * T * T) ; T == T
tortile : theta2 == (theta * theta) ; beta ; beta
theta_mu : mu2 ; theta == theta2 ; mu2
theta_delta : theta ; delta2 == delta2 ; theta2
Theta_loop : Theta == (id^2 * cap) ; (id^3 * cap * id) ; (beta * id^2) ; (id^3 * cup * id) ; (id^2 * cup)
Theta_braiding_left : (Theta * id^2) ; beta == beta ; (id^2 * Theta)
Theta_braiding_right : (id^2 * Theta) ; beta == beta ; (Theta * id^2)
Theta_mu : mu2 ; Theta == (Theta * Theta) ; beta ; beta ; mu2
Theta_delta : Theta ; delta2 == delta2 ; (Theta * Theta) ; beta ; beta
cancelpair : (id^2 * cap) ; (id^3 * cap * id) ; (betainv * id^2) ; (id^3 * cup * id) ; (id^2 * cup) ; Theta == id^2 [observational]
theta_equals_Theta : theta == Theta [observational]
)";
}

MoveLibrary::MoveLibrary(std::vector<Equation> equations) : equations_(std::move(equations)) {}

const MoveLibrary& MoveLibrary::builtin() {
  static const MoveLibrary library(parse_equation_file(builtin_moves_text()));
  return library;
}

const Equation* MoveLibrary::find(std::string_view name) const {
  for (const auto& e : equations_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace bfl
