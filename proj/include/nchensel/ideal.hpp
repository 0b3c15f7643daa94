#pragma once

#include <optional>
#include <vector>

#include "nchensel/algebra.hpp"
#include "nchensel/linalg.hpp"

namespace nchensel {

/// Two-sided ideal, stored as the canonical row module of its elements'
/// coordinate vectors.
class Ideal {
 public:
  const Algebra& algebra() const { return algebra_; }
  const std::vector<Element>& generators() const { return generators_; }
  const RowModule& module() const { return module_; }
  /// Module generators of the ideal (the canonical rows) as elements.
  std::vector<Element> basis() const;

  bool contains(const Element& a) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const { return module_.is_zero(); }
  bool is_whole() const;
  std::uint64_t length() const { return module_.length(); }

  bool operator==(const Ideal& other) const;

 private:
  friend Ideal ideal_closure(const Algebra& a, std::vector<Element> gens);
  friend Ideal ideal_from_closed_module(const Algebra& a, RowModule m);
  Ideal(Algebra a, std::vector<Element> gens, RowModule m)
      : algebra_(std::move(a)), generators_(std::move(gens)), module_(std::move(m)) {}

  Algebra algebra_;
  std::vector<Element> generators_;
  RowModule module_;
};

/// Least two-sided ideal containing gens (saturation under left and right
/// multiplication by basis elements).
Ideal ideal_closure(const Algebra& a, std::vector<Element> gens);
/// Wraps a module already known to be an ideal; verifies closure and throws
/// PreconditionError otherwise.
Ideal ideal_from_closed_module(const Algebra& a, RowModule m);
Ideal zero_ideal(const Algebra& a);
Ideal whole_ideal(const Algebra& a);
bool ideal_contains(const Ideal& i, const Element& a);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
/// IJ, the ideal spanned by products ab.
Ideal ideal_product(const Ideal& i, const Ideal& j);
/// Ideal generated by [A, I].
Ideal commutator_ideal(const Ideal& i);
/// Span of all [e_i, e_j] as a module (not an ideal).
RowModule commutator_module(const Algebra& a);

/// Least n with I^n = 0, if the power chain reaches zero.
std::optional<std::size_t> nilpotency_index(const Ideal& i);

}  // namespace nchensel
