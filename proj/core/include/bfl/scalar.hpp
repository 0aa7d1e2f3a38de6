#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bfl {

class Scalar;

/// Ground field: the rationals or a prime field F_p.
class Ring {
 public:
  static Ring rationals() { return Ring(0); }
  /// Throws ConfigError unless p is a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Ring parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Rationals only; the value is canonicalized.
  Scalar from_rational(mpq_class q) const;
  /// Prime fields only; `v` is reduced mod p.
  Scalar from_residue(std::uint64_t v) const;
  /// Parses "3/4", "-2" (rationals) or "3 mod 5" (prime field; the modulus must match).
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::uint64_t modulus) : modulus_(modulus) {}
  friend class Scalar;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Ring& ring);

/// Exact ring element in canonical form. Immutable value type.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  Ring ring() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inv() const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/4" or "3 mod 5".
  std::string to_string() const;

  /// Rational value; throws ShapeError for prime-field scalars.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws ShapeError for rationals.
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}
  friend class Ring;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bfl
