#pragma once

// Lifting a coprime monic residue factorization through a finite filtration,
// plus the uniqueness diagnostics and a brute-force oracle.

#include <optional>
#include <string>
#include <vector>

#include "nchensel/pair.hpp"
#include "nchensel/poly.hpp"

namespace nchensel {

struct LiftProblem {
  Filtration filtration;
  Quotient quotient;  // A / I_1
  Poly f;             // monic over A
  Poly f1, f2;        // monic over A/I_1
  Side side = Side::left;
  BezoutCertificate residue_certificate;  // of the given side, over A/I_1
};

/// Validates the data and the filtration hypotheses (computing them when
/// unchecked) and searches the residue Bezout certificate. Throws
/// PreconditionError on bad input or failed hypotheses, CapExceeded when no
/// certificate is found within bezout_cap.
LiftProblem make_lift_problem(Filtration filtration, Poly f, Poly f1, Poly f2, Side side = Side::left,
                              std::optional<std::size_t> bezout_cap = std::nullopt);

struct LiftLevel {
  std::size_t level = 0;  // i, with the defect claimed to lie in I_i[x]
  Poly f1, f2;
  Poly defect;
  bool in_level = false;
};

struct LiftResult {
  Poly f1, f2;
  std::vector<LiftLevel> levels;
  BezoutCertificate certificate;  // over A, for the final factors
};

/// Left lift; dispatches to right_hensel_lift when prob.side is right.
LiftResult hensel_lift(const LiftProblem& prob);
/// Runs the left lift on the opposite algebra with the factor roles swapped
/// and transports the result back.
LiftResult right_hensel_lift(const LiftProblem& prob);

/// The same problem read in A^op with the factors swapped: F = F1 F2 in A iff
/// F = F2 ∘ F1 in A^op.
LiftProblem opposite_problem(const LiftProblem& prob);
/// Result in A^op read back in A, factors swapped.
LiftResult opposite_result(const LiftResult& res, const Algebra& a);

struct FactorizationCheck {
  bool ok = true;
  std::string reason;
};

/// Exact product, monicity, and residue checks.
FactorizationCheck verify_factorization(const Poly& f, const Poly& f1, const Poly& f2, const Poly& r1,
                                        const Poly& r2, const Quotient& q);

struct SeparationReport {
  bool equal = true;
  Poly difference;  // N = F2 - G2 (or F1 - G1 when the second factors agree)
  std::size_t level = 0;
  std::string diagnostic;
};

/// Compares two factorizations with the same residues over a perfect pair.
SeparationReport uniqueness_check(const Pair& p, const Quotient& q, const Poly& f, const Poly& f1, const Poly& f2,
                                  const Poly& g1, const Poly& g2);

/// Largest d with N in I^(d)[x] (so N is not in I^(d+1)[x]).
std::size_t find_separation_level(const Poly& n, const Pair& p);

struct ResidueConstraint {
  const Quotient* quotient;
  Poly f1, f2;
};

constexpr std::uint64_t default_brute_force_cap = 100'000'000;

/// Every pair of monic (F1, F2) of degrees (d1, d2) with F1 F2 = F exactly,
/// sorted by coordinates. F1 is enumerated; F2 is then forced (right division
/// by the monic F1). With a constraint, F1 ranges over residue-class lifts
/// only and F2 is filtered by its residue. Throws CapExceeded when the
/// enumeration exceeds cap.
std::vector<std::pair<Poly, Poly>> brute_force_factorizations(const Algebra& a, const Poly& f, std::size_t d1,
                                                              std::size_t d2,
                                                              const ResidueConstraint* constraint = nullptr,
                                                              std::uint64_t cap = default_brute_force_cap);

/// F = F1 Q + R with deg R < deg F1 (quotient on the right), F1 monic.
Division right_divide(const Poly& g, const Poly& f);

}  // namespace nchensel
