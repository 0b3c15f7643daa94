#include "nchensel/poly.hpp"

#include <algorithm>
#include <sstream>

#include "nchensel/errors.hpp"

namespace nchensel {

Poly::Poly(Algebra a) : algebra_(std::move(a)) {}

Poly::Poly(Algebra a, std::vector<Element> coeffs) : algebra_(std::move(a)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_algebra(algebra_, c.algebra());
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_ints(const Algebra& a, const std::vector<std::vector<std::int64_t>>& coeffs) {
  std::vector<Element> c;
  for (const auto& v : coeffs) c.push_back(a.from_ints(v));
  return Poly(a, std::move(c));
}

Poly Poly::monomial(const Element& c, std::size_t deg) {
  std::vector<Element> coeffs(deg + 1, c.algebra().zero());
  coeffs[deg] = c;
  return Poly(c.algebra(), std::move(coeffs));
}

Poly Poly::x_power(const Algebra& a, std::size_t deg) { return monomial(a.one(), deg); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == algebra_.one(); }

Element Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : algebra_.zero(); }

Poly Poly::operator-() const {
  std::vector<Element> c;
  for (const auto& e : coeffs_) c.push_back(-e);
  return Poly(algebra_, std::move(c));
}

Poly operator+(const Poly& p, const Poly& q) {
  require_same_algebra(p.algebra_, q.algebra_);
  std::size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
  std::vector<Element> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(p.coeff(i) + q.coeff(i));
  return Poly(p.algebra_, std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  require_same_algebra(p.algebra_, q.algebra_);
  if (p.is_zero() || q.is_zero()) return Poly(p.algebra_);
  const auto& a = p.algebra_;
  std::vector<Vector> acc(p.coeffs_.size() + q.coeffs_.size() - 1, zero_vector(a.ring(), a.dimension()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      if (q.coeffs_[j].is_zero()) continue;
      Vector prod = a.multiply(p.coeffs_[i].coords(), q.coeffs_[j].coords());
      auto& slot = acc[i + j];
      for (std::size_t k = 0; k < slot.size(); ++k) slot[k] += prod[k];
    }
  }
  std::vector<Element> c;
  for (auto& v : acc) c.emplace_back(a, std::move(v));
  return Poly(a, std::move(c));
}

Poly operator*(const Element& c, const Poly& p) { return Poly::monomial(c, 0) * p; }

Poly operator*(const Poly& p, const Element& c) { return p * Poly::monomial(c, 0); }

bool Poly::operator==(const Poly& other) const {
  return algebra_.same_as(other.algebra_) && coeffs_ == other.coeffs_;
}

Poly Poly::low_part(std::size_t d) const {
  std::vector<Element> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(d, coeffs_.size())));
  return Poly(algebra_, std::move(c));
}

Poly Poly::high_part(std::size_t d) const {
  std::vector<Element> c = coeffs_;
  for (std::size_t i = 0; i < std::min(d, c.size()); ++i) c[i] = algebra_.zero();
  return Poly(algebra_, std::move(c));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i > 0 && c == algebra_.one()) {
      out << mono;
    } else if (i == 0) {
      out << "(" << c.to_string() << ")";
    } else {
      out << "(" << c.to_string() << ")" << mono;
    }
  }
  return out.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw PreconditionError("unknown polynomial op");
}

Poly map_poly(const Poly& p, const AlgebraMap& m) {
  std::vector<Element> c;
  for (const auto& e : p.coeffs()) c.push_back(m(e));
  return Poly(m.target(), std::move(c));
}

Poly residue_poly(const Poly& p, const Quotient& q) { return map_poly(p, q.projection); }

Poly residue_poly(const Poly& p, const Ideal& i) { return residue_poly(p, quotient_algebra(i)); }

Poly lift_poly(const Poly& p, const Quotient& q) {
  const Algebra& a = q.projection.source();
  std::vector<Element> c;
  for (const auto& e : p.coeffs()) c.push_back(q.lift(e));
  if (p.is_monic()) c.back() = a.one();
  return Poly(a, std::move(c));
}

Poly rebase(const Poly& p, const Algebra& other) {
  std::vector<Element> c;
  for (const auto& e : p.coeffs()) c.push_back(e.rebase(other));
  return Poly(other, std::move(c));
}

bool poly_in_ideal(const Poly& p, const Ideal& i) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [&](const Element& c) { return i.contains(c); });
}

Division euclid_divide(const Poly& g, const Poly& f, const Ideal* ideal) {
  require_same_algebra(g.algebra(), f.algebra());
  if (!f.is_monic()) throw PreconditionError("divisor is not monic");
  if (ideal && !poly_in_ideal(g, *ideal)) throw PreconditionError("dividend has a coefficient outside the ideal");
  const auto& a = g.algebra();
  std::size_t n = static_cast<std::size_t>(f.degree());
  Poly q(a);
  Poly r = g;
  while (r.degree() >= static_cast<long>(n)) {
    std::size_t m = static_cast<std::size_t>(r.degree());
    Poly step = Poly::monomial(r.leading(), m - n);
    r -= step * f;
    q += step;
  }
  if (q * f + r != g) throw std::logic_error("euclid_divide: reconstruction failed");
  if (ideal && (!poly_in_ideal(q, *ideal) || !poly_in_ideal(r, *ideal))) {
    throw ContainmentFailure("euclid_divide: quotient or remainder left the ideal");
  }
  return {std::move(q), std::move(r)};
}

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

bool BezoutCertificate::holds() const {
  const auto& a = f1.algebra();
  Poly one = Poly::x_power(a, 0);
  if (side == Side::left) return g1 * f1 + g2 * f2 == one;
  return f1 * g1 + f2 * g2 == one;
}

std::optional<BezoutCertificate> bezout_search(const Poly& f1, const Poly& f2, Side side,
                                               std::optional<std::size_t> cap) {
  require_same_algebra(f1.algebra(), f2.algebra());
  if (f1.is_zero() || f2.is_zero()) return std::nullopt;
  const auto& a = f1.algebra();
  std::size_t n = a.dimension();
  std::size_t d = cap.value_or(static_cast<std::size_t>(f1.degree() + f2.degree()));
  std::size_t out_deg = d + static_cast<std::size_t>(std::max(f1.degree(), f2.degree()));
  std::size_t rows = (out_deg + 1) * n;

  // Unknown order: G1 coefficients (degree ascending, basis ascending), then G2.
  std::vector<Vector> cols;
  for (const Poly* f : {&f1, &f2}) {
    for (std::size_t deg = 0; deg <= d; ++deg) {
      for (std::size_t k = 0; k < n; ++k) {
        Poly mono = Poly::monomial(a.basis(k), deg);
        Poly prod = side == Side::left ? mono * *f : *f * mono;
        Vector col = zero_vector(a.ring(), rows);
        for (std::size_t i = 0; i < prod.coeffs().size(); ++i) {
          for (std::size_t c = 0; c < n; ++c) col[i * n + c] = prod.coeffs()[i][c];
        }
        cols.push_back(std::move(col));
      }
    }
  }
  Vector rhs = zero_vector(a.ring(), rows);
  for (std::size_t c = 0; c < n; ++c) rhs[c] = a.unit_coords()[c];
  auto sol = solve_linear(Matrix::from_columns(a.ring(), rows, cols), rhs);
  if (!sol) return std::nullopt;

  auto read = [&](std::size_t offset) {
    std::vector<Element> coeffs;
    for (std::size_t deg = 0; deg <= d; ++deg) {
      Vector v(sol->particular.begin() + static_cast<std::ptrdiff_t>(offset + deg * n),
               sol->particular.begin() + static_cast<std::ptrdiff_t>(offset + (deg + 1) * n));
      coeffs.emplace_back(a, std::move(v));
    }
    return Poly(a, std::move(coeffs));
  };
  BezoutCertificate cert{f1, f2, read(0), read((d + 1) * n), side};
  if (!cert.holds()) throw std::logic_error("bezout_search: certificate recheck failed");
  return cert;
}

namespace {

// (1 + e)^{-1} as a polynomial; terminates because e has nilpotent
// coefficients bounded by the filtration length.
Poly invert_one_plus_poly(const Poly& e, const Filtration& f) {
  const auto& a = e.algebra();
  Poly one = Poly::x_power(a, 0);
  std::size_t bound = f.length() >= 20 ? (std::size_t{1} << 20) : (std::size_t{1} << (f.length() - 1));
  Poly sum = one;
  Poly term = one;
  Poly neg = -e;
  for (std::size_t k = 1; k <= bound && !term.is_zero(); ++k) {
    term = term * neg;
    sum += term;
  }
  if (!term.is_zero()) throw CapExceeded("polynomial geometric series did not terminate");
  return sum;
}

}  // namespace

BezoutCertificate bezout_lift(const BezoutCertificate& residue, const Poly& f1, const Poly& f2, const Quotient& q,
                              const Filtration& f) {
  if (f.squares_condition != Verdict::verified_true) {
    throw PreconditionError("bezout_lift needs the squares condition verified true");
  }
  if (!f1.is_monic() || !f2.is_monic()) throw PreconditionError("bezout_lift: lifts must be monic");
  if (residue_poly(f1, q) != residue.f1 || residue_poly(f2, q) != residue.f2) {
    throw PreconditionError("bezout_lift: residues of the lifts differ from the certificate");
  }
  if (!residue.holds()) throw PreconditionError("bezout_lift: residue certificate does not hold");
  const auto& a = f1.algebra();
  Poly h1 = lift_poly(residue.g1, q);
  Poly h2 = lift_poly(residue.g2, q);
  Poly one = Poly::x_power(a, 0);
  Poly e = residue.side == Side::left ? h1 * f1 + h2 * f2 - one : f1 * h1 + f2 * h2 - one;
  if (!poly_in_ideal(e, f.level(1))) throw ContainmentFailure("bezout_lift: E = H1F1 + H2F2 - 1 is not in I[x]");
  Poly inv = invert_one_plus_poly(e, f);
  BezoutCertificate out{f1, f2, Poly(a), Poly(a), residue.side};
  if (residue.side == Side::left) {
    out.g1 = inv * h1;
    out.g2 = inv * h2;
  } else {
    out.g1 = h1 * inv;
    out.g2 = h2 * inv;
  }
  if (!out.holds()) throw std::logic_error("bezout_lift: lifted certificate recheck failed");
  return out;
}

}  // namespace nchensel
