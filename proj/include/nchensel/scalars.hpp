#pragma once

// Exact base scalar rings: GF(p), Z/p^k and the rationals.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace nchensel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when operands from different scalar rings meet, or a ring
/// description is malformed (non-prime p, modulus overflow).
class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { prime_field, prime_power, rationals };

class Scalar;

/// Identity of an exact scalar ring. Small value type; equality is by
/// (kind, p, k).
class ScalarRing {
 public:
  ScalarRing();  // GF(2); only so that containers can default-construct

  static ScalarRing prime_field(std::uint64_t p);
  /// Z/p^k. k == 1 yields the prime field.
  static ScalarRing prime_power(std::uint64_t p, unsigned k);
  static ScalarRing rationals();

  RingKind kind() const { return kind_; }
  bool is_field() const { return kind_ != RingKind::prime_power; }
  bool is_finite() const { return kind_ != RingKind::rationals; }
  bool is_modular() const { return is_finite(); }
  /// p, or 0 for the rationals.
  std::uint64_t prime() const { return p_; }
  /// k for Z/p^k, 1 for GF(p), 0 for the rationals.
  unsigned exponent() const { return k_; }
  /// p^k, or 0 for the rationals.
  std::uint64_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const Integer& v) const;
  /// Only valid in the rationals, or when den is a unit mod p^k.
  Scalar from_fraction(const Integer& num, const Integer& den) const;
  Scalar from_residue(std::uint64_t r) const;

  /// p-adic valuation of a modular scalar; exponent() for zero. 0 for
  /// nonzero rationals.
  unsigned valuation(const Scalar& a) const;
  /// p^v as an element of this ring (1 in the rationals for v == 0).
  Scalar p_power(unsigned v) const;

  /// Z/p^j for j <= k; used by quotients that change the scalar ring.
  ScalarRing truncated(unsigned j) const;
  /// True when reduction this -> other is a ring map (identity or Z/p^k -> Z/p^j).
  bool reduces_to(const ScalarRing& other) const;
  Scalar reduce_into(const Scalar& a) const;  // a in some ring reducing to *this

  std::string name() const;

  bool operator==(const ScalarRing& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_;
  }

 private:
  ScalarRing(RingKind kind, std::uint64_t p, unsigned k, std::uint64_t modulus)
      : kind_(kind), p_(p), k_(k), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t modulus_;
};

/// Canonical-form scalar: residue in [0, p^k) or an always-reduced fraction.
class Scalar {
 public:
  Scalar() = default;  // zero of GF(2)

  const ScalarRing& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  /// Canonical residue; modular rings only.
  std::uint64_t residue() const;
  /// Exact rational value; rational ring only.
  const Rational& rational() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Multiplicative inverse, or nullopt when not a unit.
  std::optional<Scalar> inverse() const;

  bool operator==(const Scalar& other) const;
  /// Total order inside one ring (residue order / numeric order); used for
  /// deterministic enumeration and sorting only.
  std::strong_ordering operator<=>(const Scalar& other) const;

  std::string to_string() const;

 private:
  friend class ScalarRing;
  Scalar(ScalarRing ring, std::uint64_t r) : ring_(ring), value_(r) {}
  Scalar(ScalarRing ring, Rational q) : ring_(ring), value_(std::move(q)) {}

  ScalarRing ring_;
  std::variant<std::uint64_t, Rational> value_{std::uint64_t{0}};
};

enum class ArithOp { add, sub, mul };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
std::optional<Scalar> scalar_inverse(const Scalar& a);

/// Parses "17", "-3" or "num/den" into the given ring.
Scalar parse_scalar(const ScalarRing& ring, std::string_view text);

/// Integer division of a residue by p^v (floor), as a scalar of the same
/// ring. In the rationals (v must be 0) returns a unchanged.
Scalar floor_div_p_power(const Scalar& a, unsigned v);

/// For a = u * p^v with u a unit, returns u^{-1}. a must be nonzero.
Scalar unit_part_inverse(const Scalar& a);

bool is_prime(std::uint64_t n);

}  // namespace nchensel
