#include "bfl/scalar.hpp"

#include <charconv>
#include <ostream>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("invalid integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw ConfigError("prime field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Ring(p);
}

Ring Ring::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto p = parse_int(text.substr(3), text);
    if (p <= 0) throw ConfigError("invalid ring '" + std::string(text) + "'");
    return prime_field(static_cast<std::uint64_t>(p));
  }
  throw ConfigError("unknown ring '" + std::string(text) + "' (expected \"Q\" or \"Fp:<p>\")");
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar(Scalar::Residue{reduce(v, modulus_), modulus_});
}

Scalar Ring::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (is_rational()) {
    if (text.find("mod") != std::string_view::npos) {
      throw ConfigError("prime-field scalar '" + std::string(text) + "' in a rational context");
    }
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
      throw ConfigError("invalid rational '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Scalar(std::move(q));
  }
  auto pos = text.find("mod");
  std::int64_t value = 0;
  if (pos == std::string_view::npos) {
    value = parse_int(text, text);
  } else {
    value = parse_int(text.substr(0, pos), text);
    auto p = parse_int(text.substr(pos + 3), text);
    if (p <= 0 || static_cast<std::uint64_t>(p) != modulus_) {
      throw ConfigError("scalar '" + std::string(text) + "' does not belong to " + to_string());
    }
  }
  return from_int(value);
}

std::string Ring::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

std::ostream& operator<<(std::ostream& os, const Ring& ring) { return os << ring.to_string(); }

Scalar Ring::from_rational(mpq_class q) const {
  if (!is_rational()) throw ShapeError("from_rational on " + to_string());
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Ring::from_residue(std::uint64_t v) const {
  if (is_rational()) throw ShapeError("from_residue on Q");
  return Scalar(Scalar::Residue{v % modulus_, modulus_});
}

Ring Scalar::ring() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Ring(r->modulus);
  return Ring::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

namespace {
void require_same_ring(bool a_res, bool b_res, std::uint64_t pa, std::uint64_t pb) {
  if (a_res != b_res || pa != pb) throw ShapeError("scalar ring mismatch");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  require_same_ring(ra, rb, ra ? ra->modulus : 0, rb ? rb->modulus : 0);
  if (ra) {
    auto s = ra->value + rb->value;
    if (s >= ra->modulus) s -= ra->modulus;
    return Scalar(Scalar::Residue{s, ra->modulus});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  require_same_ring(ra, rb, ra ? ra->modulus : 0, rb ? rb->modulus : 0);
  if (ra) return Scalar(Scalar::Residue{ra->value * rb->value % ra->modulus, ra->modulus});
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(r->value) + " mod " + std::to_string(r->modulus);
  }
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ShapeError("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw ShapeError("scalar is not a prime-field residue");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bfl
