#pragma once

// Finite-dimensional associative unital algebras over an exact scalar ring,
// given by structure constants on a chosen basis.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nchensel/linalg.hpp"
#include "nchensel/scalars.hpp"

namespace nchensel {

/// Raised when a structure-constant table fails validation.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when values from different algebras are combined.
class ParentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Element;

/// c[i][j] is the coordinate vector of e_i * e_j.
using StructureConstants = std::vector<std::vector<Vector>>;

/// Immutable handle; copies share the table.
class Algebra {
 public:
  /// Validates shape, the unit laws and associativity on all basis triples.
  static Algebra make(ScalarRing ring, std::vector<std::string> labels, StructureConstants table, Vector unit);

  const ScalarRing& ring() const;
  std::size_t dimension() const;
  const std::vector<std::string>& labels() const;
  const StructureConstants& table() const;
  const Vector& unit_coords() const;
  bool is_commutative() const;

  Element zero() const;
  Element one() const;
  Element basis(std::size_t i) const;
  Element element(Vector coords) const;
  Element from_ints(const std::vector<std::int64_t>& coords) const;

  /// Coordinates of a * b, straight from the table.
  Vector multiply(const Vector& a, const Vector& b) const;

  /// Same object, or structurally identical (ring, table, unit).
  bool same_as(const Algebra& other) const;
  bool operator==(const Algebra& other) const { return same_as(other); }

 struct Impl;

 private:
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Algebra make_algebra(ScalarRing ring, std::vector<std::string> labels, StructureConstants table, Vector unit);

/// Opposite algebra: same module, c_op[i][j] = c[j][i].
Algebra opposite_algebra(const Algebra& a);

class Element {
 public:
  Element(Algebra parent, Vector coords);

  const Algebra& algebra() const { return parent_; }
  const Vector& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return is_zero_vector(coords_); }

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }

  bool operator==(const Element& other) const;

  /// Same coordinates reinterpreted in another algebra on the same module
  /// (used for the opposite-algebra transport).
  Element rebase(const Algebra& other) const;

  std::string to_string() const;

 private:
  Algebra parent_;
  Vector coords_;
};

Element mul(const Element& a, const Element& b);
/// [a, b] = ab - ba
Element commutator(const Element& a, const Element& b);
void require_same_algebra(const Algebra& a, const Algebra& b);

}  // namespace nchensel
