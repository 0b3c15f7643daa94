#pragma once

// Polynomials over a finite-dimensional algebra in a central indeterminate x.

#include <optional>
#include <string>
#include <vector>

#include "nchensel/algebra.hpp"
#include "nchensel/pair.hpp"

namespace nchensel {

class Poly {
 public:
  explicit Poly(Algebra a);  // zero polynomial
  /// coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
  Poly(Algebra a, std::vector<Element> coeffs);
  static Poly from_ints(const Algebra& a, const std::vector<std::vector<std::int64_t>>& coeffs);
  /// c x^deg
  static Poly monomial(const Element& c, std::size_t deg);
  /// x^deg
  static Poly x_power(const Algebra& a, std::size_t deg);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Zero beyond the degree.
  Element coeff(std::size_t i) const;
  const Element& leading() const { return coeffs_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Element& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Element& c);
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  bool operator==(const Poly& other) const;

  /// Terms of degree < d.
  Poly low_part(std::size_t d) const;
  /// Terms of degree >= d.
  Poly high_part(std::size_t d) const;

  std::string to_string() const;

 private:
  void normalize();
  Algebra algebra_;
  std::vector<Element> coeffs_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// Coefficientwise image under a ring map.
Poly map_poly(const Poly& p, const AlgebraMap& m);
/// Coefficientwise projection to A/I.
Poly residue_poly(const Poly& p, const Quotient& q);
Poly residue_poly(const Poly& p, const Ideal& i);
/// Coefficientwise section of the quotient map. Monic input stays monic.
Poly lift_poly(const Poly& p, const Quotient& q);
/// Same coefficients read in another algebra on the same module (used for
/// the opposite-algebra transport).
Poly rebase(const Poly& p, const Algebra& other);

/// All coefficients lie in I.
bool poly_in_ideal(const Poly& p, const Ideal& i);

struct Division {
  Poly quotient;
  Poly remainder;
};

/// G = Q·F + R with deg R < deg F, for monic F (quotient on the left). When
/// an ideal is given, G must lie in I[x] and Q, R are checked to lie in I[x].
Division euclid_divide(const Poly& g, const Poly& f, const Ideal* ideal = nullptr);

enum class Side { left, right };
const char* to_string(Side s);

struct BezoutCertificate {
  Poly f1, f2, g1, g2;
  Side side = Side::left;
  /// left: g1 f1 + g2 f2 = 1; right: f1 g1 + f2 g2 = 1.
  bool holds() const;
};

/// Solves for cofactors of degree <= cap (default deg F1 + deg F2). Free
/// unknowns are set to zero, so the answer is deterministic. nullopt means
/// nothing was found within the cap, which does not prove non-coprimality.
std::optional<BezoutCertificate> bezout_search(const Poly& f1, const Poly& f2, Side side,
                                               std::optional<std::size_t> cap = std::nullopt);

/// Lifts a certificate over A/I to one over A for monic lifts F1, F2, by
/// inverting 1 + E with the finite geometric series. q must be the quotient
/// by the filtration's first ideal.
BezoutCertificate bezout_lift(const BezoutCertificate& residue, const Poly& f1, const Poly& f2, const Quotient& q,
                              const Filtration& f);

}  // namespace nchensel
