#pragma once

// Universal extensions adjoining a lifted factorization, built as truncated
// presentations. Presented pairs here are of augmentation type: the residue
// ring is the base field and every generator maps to 0.

#include <optional>
#include <string>
#include <vector>

#include "nchensel/hensel.hpp"
#include "nchensel/pair.hpp"
#include "nchensel/poly.hpp"
#include "nchensel/presentations.hpp"

namespace nchensel {

struct PresentedPair {
  NormalFormEngine engine;
  Algebra algebra;
  Pair pair;              // kernel of the augmentation
  Algebra residue;        // one-dimensional, the base field
  AlgebraMap augmentation;  // algebra -> residue, generators to 0

  Element generator(std::size_t g) const;
  /// Class of a free polynomial.
  Element element(const FreePoly& p) const;
};

/// Completes the presentation and forms the augmentation pair. When the pair
/// is not perfect, the stable commutator ideal is added to the relations and
/// the presentation completed again, so the result is always perfect.
/// Throws PreconditionError when a relation has a nonzero constant term after
/// reduction (no augmentation exists).
PresentedPair make_presented_pair(NCPresentation pres);

/// Free algebra on `generators` letters truncated at `cap`, as a presented pair.
PresentedPair free_presented_pair(const ScalarRing& field, std::size_t generators, unsigned cap);

/// A monic factorization over the base field.
Poly residue_scalar_poly(const Algebra& residue, const std::vector<std::int64_t>& coeffs);

struct AdjoinedFactorization {
  std::size_t stage = 0;  // which simple extension adjoined it
  Poly f;                 // as given, over that stage's source algebra
  Poly f_in_target;       // the factored polynomial, mapped into the target
  Poly f1, f2;            // residue factors over the base field
  Poly lifted1, lifted2;  // universal factors over the target
};

struct LFExtension {
  PresentedPair source;
  PresentedPair target;
  PairMorphism phi;
  std::vector<AdjoinedFactorization> factorizations;
};

/// Adjoins y_0..y_{d1-1}, z_0..z_{d2-1} (shifted so they map to 0 in the
/// residue field) with F1 = x^d1 + Σ (b_i + y_i) x^i, F2 likewise, and
/// imposes Φ(F) = F1 F2 coefficientwise. Source words at the source cap stay
/// zero. Throws PreconditionError if the residues do not multiply to F mod
/// the augmentation ideal, or are not coprime.
LFExtension build_lf_extension(const PresentedPair& source, const Poly& f, const Poly& f1, const Poly& f2,
                               unsigned cap = 4);

/// Identity extension: no factorizations adjoined.
LFExtension trivial_extension(const PresentedPair& source);

/// ext2 must start where ext1 ends. The factorizations of ext1 are carried
/// into the final target.
LFExtension compose_lf_extensions(const LFExtension& ext1, const LFExtension& ext2);

struct UniversalMap {
  PairMorphism psi;
  bool composition_ok = false;  // ψ ∘ Φ = φ
  std::string uniqueness;       // why ψ is unique, or why that is not known
};

/// Given φ from the source pair and monic G1, G2 over φ's target with
/// φ(F) = G1 G2 and residues matching, the induced ψ sending the adjoined
/// factors to G1, G2. Requires ext to have exactly one factorization.
UniversalMap universal_map(const LFExtension& ext, const PairMorphism& phi, const Poly& g1, const Poly& g2);

struct Abelianization {
  PresentedPair pair;
  PairMorphism projection;
};

/// Adds all commutators of generators as relations.
Abelianization abelianize(const PresentedPair& p);

/// Requires a local source pair (PreconditionError otherwise) and decides
/// whether the target pair is local. A "no" is a counterexample candidate.
DecisionReport check_local(const LFExtension& ext, std::uint64_t cap = default_enumeration_cap);

struct CommutativeComparison {
  bool ok = false;
  std::string reason;
  std::size_t abelian_dimension = 0;
  std::optional<Abelianization> abelian;
  std::optional<AlgebraMap> to_source;  // abelianized target -> source
  std::optional<Poly> abelian_f1, abelian_f2;
};

/// For a commutative source: maps the abelianized extension to the source via
/// the commutative Hensel factors and checks the universal factors land on
/// them exactly.
CommutativeComparison compare_with_commutative_lift(const LFExtension& ext, const LiftResult& lift);

}  // namespace nchensel
