#pragma once

// Named algebra families used by tests, scenarios and the acceptance suite.

#include <string>
#include <vector>

#include "nchensel/algebra.hpp"
#include "nchensel/ideal.hpp"

namespace nchensel {

struct Instance {
  std::string name;
  Algebra algebra;
  /// The natural ideal of the family (augmentation, strictly upper, (p), or 0).
  Ideal ideal;
  /// Basis grading when the family has one; empty otherwise.
  std::vector<unsigned> degrees;
};

/// R<u_1..u_g> modulo all words of length >= cap. Basis: words of length
/// < cap in degree-lexicographic order; ideal: words of positive length.
Instance trunc_free(const ScalarRing& ring, std::size_t generators, unsigned cap);
/// R·1 + strictly upper triangular size x size matrices.
Instance scalar_plus_strict_upper(const ScalarRing& ring, std::size_t size);
/// Z/p^k as a 1-dimensional algebra, with ideal (p).
Instance zmod(std::uint64_t p, unsigned k);
/// Full upper triangular matrices with the strictly upper ideal. Violates the
/// commutativity hypotheses; kept as a negative specimen.
Instance upper_triangular(const ScalarRing& ring, std::size_t size);
/// R x ... x R with componentwise product and zero ideal.
Instance diagonal(const ScalarRing& ring, std::size_t copies);

/// Letter names used for free generators: u, v, w, s, t, then g5, g6, ...
std::string generator_name(std::size_t i);

}  // namespace nchensel
