#pragma once

// Pairs (A, I), finite filtrations, morphisms of pairs, quotients, and the
// hypothesis checks used by the lifting algorithm.

#include <optional>
#include <string>
#include <vector>

#include "nchensel/algebra.hpp"
#include "nchensel/ideal.hpp"

namespace nchensel {

class Pair {
 public:
  /// Throws PreconditionError if I is the whole algebra.
  Pair(Ideal ideal);

  const Algebra& algebra() const { return ideal_.algebra(); }
  const Ideal& ideal() const { return ideal_; }

 private:
  Ideal ideal_;
};

enum class Verdict { verified_true, verified_false, unchecked };
const char* to_string(Verdict v);

/// I_1 = I ⊇ I_2 ⊇ ... ⊇ I_N = 0.
class Filtration {
 public:
  /// Validates first term, terminal zero and every containment.
  Filtration(Pair pair, std::vector<Ideal> chain);

  const Pair& pair() const { return pair_; }
  const std::vector<Ideal>& chain() const { return chain_; }
  /// 1-based, as in I_1 .. I_N.
  const Ideal& level(std::size_t i) const { return chain_.at(i - 1); }
  std::size_t length() const { return chain_.size(); }

  Verdict f_commutative = Verdict::unchecked;
  Verdict products_condition = Verdict::unchecked;
  Verdict squares_condition = Verdict::unchecked;

  bool all_hypotheses_verified() const;

 private:
  Pair pair_;
  std::vector<Ideal> chain_;
};

/// Powers I ⊇ I^2 ⊇ ... ⊇ 0. Throws PreconditionError if I is not nilpotent.
Filtration adic_filtration(const Pair& p);
/// I_n = span of basis elements of degree >= n, for a graded basis.
Filtration degree_filtration(const Pair& p, const std::vector<unsigned>& basis_degree);

struct LevelCheck {
  std::size_t level = 0;
  Verdict f_commutative = Verdict::unchecked;
  Verdict products_condition = Verdict::unchecked;
  Verdict squares_condition = Verdict::unchecked;
  std::string witness;  // first failing product, if any
};

struct HypothesisReport {
  std::vector<LevelCheck> levels;
  Verdict f_commutative = Verdict::unchecked;
  Verdict products_condition = Verdict::unchecked;
  Verdict squares_condition = Verdict::unchecked;
  bool separated = true;
  bool complete = true;
};

/// Checks [A, I_n] ⊆ I_{n+1}, I_n [A,A] ⊆ I_{n+1} and I_n^2 ⊆ I_{n+1} on
/// module generators, level by level.
HypothesisReport check_filtration_hypotheses(const Filtration& f);
/// Copy of f with the three flags set from check_filtration_hypotheses.
Filtration with_checked_hypotheses(Filtration f);

/// Scalar-linear map between coordinate spaces, possibly reducing the
/// scalar ring (Z/p^k -> Z/p^j). matrix is target.dim x source.dim over the
/// target ring.
class AlgebraMap {
 public:
  AlgebraMap(Algebra source, Algebra target, Matrix matrix);
  static AlgebraMap identity(const Algebra& a);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Element operator()(const Element& a) const;
  Vector apply(const Vector& coords) const;

 private:
  Algebra source_;
  Algebra target_;
  Matrix matrix_;
};

/// g ∘ f
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

struct MorphismCheck {
  bool ok = true;
  std::string reason;
};

/// Multiplicative on basis pairs and maps 1 to 1.
MorphismCheck check_ring_map(const AlgebraMap& m);

class PairMorphism {
 public:
  PairMorphism(Pair source, Pair target, AlgebraMap map);

  const Pair& source() const { return source_; }
  const Pair& target() const { return target_; }
  const AlgebraMap& map() const { return map_; }
  Element operator()(const Element& a) const { return map_(a); }

 private:
  Pair source_;
  Pair target_;
  AlgebraMap map_;
};

PairMorphism compose(const PairMorphism& g, const PairMorphism& f);

/// Ring-map laws plus the exact preimage condition φ^{-1}(J) = I.
MorphismCheck validate_morphism(const PairMorphism& m);
/// {x in source : φ(x) in J} as a module over the source ring.
RowModule preimage_of_ideal(const AlgebraMap& m, const Ideal& j);

struct Quotient {
  Algebra algebra;
  AlgebraMap projection;
  /// Section on the complement basis: coordinates of a class mapped back to
  /// representatives. Linear over the source ring, not multiplicative.
  Matrix section;
  std::vector<std::size_t> complement;  // source basis indices kept
  RowModule kernel;                     // the ideal divided out
  Element lift(const Element& cls) const;
};

/// A/I on a complement basis. Over Z/p^k the quotient must be free over some
/// Z/p^j; otherwise PreconditionError.
Quotient quotient_algebra(const Ideal& i);
/// The projection (A, I) -> (A/I, 0) as a morphism of pairs.
PairMorphism quotient_morphism(const Quotient& q, const Pair& p);
/// Image of an ideal J ⊇ ker under a quotient projection.
Ideal image_ideal(const Quotient& q, const Ideal& j);

struct CommutatorFiltration {
  std::vector<Ideal> chain;  // I^(1), I^(2), ... up to stabilization
  bool perfect = false;      // stable term is zero
  std::optional<Filtration> filtration;  // present when perfect
  const Ideal& stable() const { return chain.back(); }
};

CommutatorFiltration commutator_filtration(const Pair& p);
bool is_perfect(const Pair& p);

struct PerfectQuotient {
  Pair pair;
  Quotient quotient;
  PairMorphism projection;
};
PerfectQuotient perfect_quotient(const Pair& p);

/// Inverse of 1 + a for a in I_1 via the finite geometric series. Requires
/// the squares condition verified true.
Element invert_one_plus(const Element& a, const Filtration& f);

/// Two-sided inverse if one exists.
std::optional<Element> unit_inverse(const Element& a);
bool is_unit(const Element& a);

enum class Decision { yes, no, undecided };
const char* to_string(Decision d);

struct DecisionReport {
  Decision decision = Decision::undecided;
  std::string reason;
};

constexpr std::uint64_t default_enumeration_cap = 1'000'000;

DecisionReport is_jacobson(const Pair& p, std::uint64_t cap = default_enumeration_cap);
DecisionReport is_local_pair(const Pair& p, std::uint64_t cap = default_enumeration_cap);
/// Sends nonunits to nonunits, checked on all elements when small enough.
DecisionReport is_local_morphism(const PairMorphism& m, std::uint64_t cap = default_enumeration_cap);

}  // namespace nchensel
