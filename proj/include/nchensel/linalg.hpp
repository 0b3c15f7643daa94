#pragma once

// Canonical-form linear algebra over the exact scalar rings. Over fields the
// canonical row form is the reduced row echelon form; over Z/p^k it is the
// Howell form, which makes membership, equality and solvability exact.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nchensel/scalars.hpp"

namespace nchensel {

using Vector = std::vector<Scalar>;

Vector zero_vector(const ScalarRing& ring, std::size_t n);
bool is_zero_vector(const Vector& v);
/// y += a * x
void add_scaled(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Scalar& a, const Vector& x);

class Matrix {
 public:
  Matrix(ScalarRing ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const ScalarRing& ring, std::size_t n);
  static Matrix from_columns(const ScalarRing& ring, std::size_t rows, const std::vector<Vector>& columns);

  const ScalarRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& other) const = default;

 private:
  ScalarRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// A submodule of R^width held in canonical row form. Two modules are equal
/// iff their canonical rows are identical.
class RowModule {
 public:
  RowModule(ScalarRing ring, std::size_t width);
  static RowModule span(const ScalarRing& ring, std::size_t width, std::vector<Vector> generators);

  const ScalarRing& ring() const { return ring_; }
  std::size_t width() const { return width_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// p-adic valuation of each pivot (always 0 over fields).
  const std::vector<unsigned>& pivot_valuations() const { return valuations_; }
  bool is_zero() const { return rows_.empty(); }

  /// Canonical representative of v modulo the module.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const RowModule& other) const;
  RowModule with(std::vector<Vector> extra) const;
  RowModule operator+(const RowModule& other) const;

  /// Over a field: the rank. Over Z/p^k: log_p of the cardinality.
  std::uint64_t length() const;
  /// Number of elements if that is finite and at most cap.
  std::optional<std::uint64_t> cardinality(std::uint64_t cap) const;
  /// Visits every element (finite rings only). Stops early when visit
  /// returns false.
  void for_each_element(const std::function<bool(const Vector&)>& visit) const;

  bool operator==(const RowModule& other) const;

 private:
  ScalarRing ring_;
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<unsigned> valuations_;
};

/// One solution of M x = rhs together with the full solution module
/// {particular + k : k in kernel}. Free variables are set to zero.
struct LinearSolution {
  Vector particular;
  RowModule kernel;
};

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vector& rhs);
RowModule kernel(const Matrix& m);
/// {x : M x in target}
RowModule preimage(const Matrix& m, const RowModule& target);

}  // namespace nchensel
