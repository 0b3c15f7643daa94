#pragma once

#include <vector>

#include "nchensel/instances.hpp"
#include "nchensel/poly.hpp"

namespace testing_helpers {

using namespace nchensel;

inline ScalarRing gf(std::uint64_t p) { return ScalarRing::prime_field(p); }

/// Polynomial over a one-dimensional algebra from integer coefficients.
inline Poly scalar_poly(const Algebra& a, const std::vector<std::int64_t>& c) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto v : c) rows.push_back({v});
  return Poly::from_ints(a, rows);
}

/// Integer coefficients of a polynomial over a one-dimensional algebra.
inline std::vector<std::int64_t> int_coeffs(const Poly& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<std::int64_t>(c.coords()[0].residue()));
  return out;
}

}  // namespace testing_helpers
