#include "nchensel/hensel.hpp"

#include <algorithm>

#include "nchensel/errors.hpp"

namespace nchensel {

namespace {

void require_hypotheses(Filtration& f) {
  if (f.f_commutative == Verdict::unchecked || f.products_condition == Verdict::unchecked ||
      f.squares_condition == Verdict::unchecked) {
    f = with_checked_hypotheses(std::move(f));
  }
  if (!f.all_hypotheses_verified()) {
    throw PreconditionError(std::string("filtration hypotheses fail: f_commutative=") + to_string(f.f_commutative) +
                            ", products=" + to_string(f.products_condition) +
                            ", squares=" + to_string(f.squares_condition));
  }
}

Filtration rebase_filtration(const Filtration& f, const Algebra& other) {
  std::vector<Ideal> chain;
  for (const auto& i : f.chain()) chain.push_back(ideal_from_closed_module(other, i.module()));
  Pair p(chain.front());
  return Filtration(p, std::move(chain));
}

}  // namespace

LiftProblem make_lift_problem(Filtration filtration, Poly f, Poly f1, Poly f2, Side side,
                              std::optional<std::size_t> bezout_cap) {
  require_hypotheses(filtration);
  const auto& a = filtration.pair().algebra();
  require_same_algebra(a, f.algebra());
  Quotient q = quotient_algebra(filtration.level(1));
  if (!f.is_monic()) throw PreconditionError("F is not monic");
  if (!f1.algebra().same_as(q.algebra) || !f2.algebra().same_as(q.algebra)) {
    throw PreconditionError("residue factors must live over A/I");
  }
  if (!f1.is_monic() || !f2.is_monic()) throw PreconditionError("residue factors must be monic");
  if (f1.degree() < 1 || f2.degree() < 1) throw PreconditionError("residue factors must have positive degree");
  if (residue_poly(f, q) != f1 * f2) throw PreconditionError("residue of F is not f1 * f2");
  auto cert = bezout_search(f1, f2, side, bezout_cap);
  if (!cert) {
    throw CapExceeded(std::string("no ") + to_string(side) + " Bezout certificate for the residue factors within cap");
  }
  return LiftProblem{std::move(filtration), std::move(q), std::move(f), std::move(f1), std::move(f2), side,
                     std::move(*cert)};
}

LiftResult hensel_lift(const LiftProblem& prob) {
  if (prob.side == Side::right) return right_hensel_lift(prob);
  const Filtration& filt = prob.filtration;
  if (!filt.all_hypotheses_verified()) throw PreconditionError("filtration hypotheses are not verified true");
  const Quotient& q = prob.quotient;
  const Poly& f = prob.f;
  std::size_t d1 = static_cast<std::size_t>(prob.f1.degree());
  std::size_t d2 = static_cast<std::size_t>(prob.f2.degree());
  std::size_t n = filt.length();

  Poly f1 = lift_poly(prob.f1, q);
  Poly f2 = lift_poly(prob.f2, q);
  LiftResult out{f1, f2, {}, prob.residue_certificate};

  for (std::size_t i = 1; i <= n; ++i) {
    const Ideal& cur = filt.level(i);
    Poly g = f - f1 * f2;
    bool in_level = poly_in_ideal(g, cur);
    out.levels.push_back(LiftLevel{i, f1, f2, g, in_level});
    if (!in_level) throw ContainmentFailure("defect F - F1 F2 is not in I_" + std::to_string(i) + "[x]");
    if (i == n) break;
    const Ideal& next = filt.level(i + 1);

    auto cert = bezout_lift(prob.residue_certificate, f1, f2, q, filt);
    Poly g1 = g * cert.g1;
    Poly g2 = g * cert.g2;
    auto [quot, r1] = euclid_divide(g1, f2, &cur);
    Poly s = g2 + quot * f1;
    Poly high = s.high_part(d1);
    for (std::size_t m = d1; m < high.coeffs().size(); ++m) {
      if (!next.contains(high.coeffs()[m])) {
        throw ContainmentFailure("truncated coefficient of x^" + std::to_string(m) + " in G2 + Q F1 is not in I_" +
                                 std::to_string(i + 1));
      }
    }
    Poly r2 = s.low_part(d1);
    f1 += r2;
    f2 += r1;
    if (!f1.is_monic() || !f2.is_monic() || f1.degree() != static_cast<long>(d1) ||
        f2.degree() != static_cast<long>(d2)) {
      throw ContainmentFailure("update broke monicity or degree of the factors");
    }
  }
  if (!out.levels.back().defect.is_zero()) throw ContainmentFailure("final defect is not zero");
  out.f1 = f1;
  out.f2 = f2;
  out.certificate = bezout_lift(prob.residue_certificate, f1, f2, q, filt);
  return out;
}

LiftProblem opposite_problem(const LiftProblem& prob) {
  const Algebra& a = prob.filtration.pair().algebra();
  Algebra op = opposite_algebra(a);
  Filtration fop = rebase_filtration(prob.filtration, op);
  Quotient qop = quotient_algebra(fop.level(1));
  Side side = prob.side == Side::left ? Side::right : Side::left;
  return make_lift_problem(std::move(fop), rebase(prob.f, op), rebase(prob.f2, qop.algebra),
                           rebase(prob.f1, qop.algebra), side);
}

LiftResult opposite_result(const LiftResult& res, const Algebra& a) {
  const auto& c = res.certificate;
  Side side = c.side == Side::left ? Side::right : Side::left;
  BezoutCertificate cert{rebase(c.f2, a), rebase(c.f1, a), rebase(c.g2, a), rebase(c.g1, a), side};
  LiftResult out{rebase(res.f2, a), rebase(res.f1, a), {}, std::move(cert)};
  for (const auto& l : res.levels) {
    out.levels.push_back(LiftLevel{l.level, rebase(l.f2, a), rebase(l.f1, a), rebase(l.defect, a), l.in_level});
  }
  if (!out.certificate.holds()) throw std::logic_error("opposite transport broke the Bezout identity");
  return out;
}

LiftResult right_hensel_lift(const LiftProblem& prob) {
  if (prob.side != Side::right) throw PreconditionError("right_hensel_lift needs a right-sided problem");
  LiftProblem op = opposite_problem(prob);
  LiftResult res = hensel_lift(op);
  LiftResult out = opposite_result(res, prob.filtration.pair().algebra());
  if (out.f1 * out.f2 != prob.f) throw std::logic_error("right lift does not multiply back to F");
  return out;
}

FactorizationCheck verify_factorization(const Poly& f, const Poly& f1, const Poly& f2, const Poly& r1,
                                        const Poly& r2, const Quotient& q) {
  if (!f1.is_monic() || !f2.is_monic()) return {false, "factor is not monic"};
  if (f1 * f2 != f) return {false, "F1 F2 != F"};
  if (residue_poly(f1, q) != r1) return {false, "residue of F1 differs from f1"};
  if (residue_poly(f2, q) != r2) return {false, "residue of F2 differs from f2"};
  return {};
}

std::size_t find_separation_level(const Poly& n, const Pair& p) {
  if (n.is_zero()) throw PreconditionError("separation level of the zero polynomial");
  auto cf = commutator_filtration(p);
  if (!cf.perfect) throw PreconditionError("pair is not perfect");
  if (!poly_in_ideal(n, cf.chain.front())) throw PreconditionError("N has a coefficient outside I");
  std::size_t d = 1;
  while (d < cf.chain.size() && poly_in_ideal(n, cf.chain[d])) ++d;
  return d;
}

SeparationReport uniqueness_check(const Pair& p, const Quotient& q, const Poly& f, const Poly& f1, const Poly& f2,
                                  const Poly& g1, const Poly& g2) {
  Poly r1 = residue_poly(f1, q);
  Poly r2 = residue_poly(f2, q);
  if (auto c = verify_factorization(f, f1, f2, r1, r2, q); !c.ok) throw PreconditionError("first pair: " + c.reason);
  if (auto c = verify_factorization(f, g1, g2, r1, r2, q); !c.ok) throw PreconditionError("second pair: " + c.reason);
  if (!is_perfect(p)) throw PreconditionError("uniqueness_check needs a perfect pair");
  SeparationReport out{true, Poly(p.algebra()), 0, ""};
  if (f1 == g1 && f2 == g2) return out;
  out.equal = false;
  out.difference = f2 != g2 ? f2 - g2 : f1 - g1;
  out.level = find_separation_level(out.difference, p);
  out.diagnostic = "counterexample candidate: distinct lifts, N in I^(" + std::to_string(out.level) +
                   ")[x] but not in I^(" + std::to_string(out.level + 1) + ")[x]";
  return out;
}

Division right_divide(const Poly& g, const Poly& f) {
  require_same_algebra(g.algebra(), f.algebra());
  if (!f.is_monic()) throw PreconditionError("divisor is not monic");
  std::size_t n = static_cast<std::size_t>(f.degree());
  Poly q(g.algebra());
  Poly r = g;
  while (r.degree() >= static_cast<long>(n)) {
    Poly step = Poly::monomial(r.leading(), static_cast<std::size_t>(r.degree()) - n);
    r -= f * step;
    q += step;
  }
  return {std::move(q), std::move(r)};
}

namespace {

bool coords_less(const Poly& a, const Poly& b) {
  std::size_t len = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto ca = a.coeff(i).coords();
    const auto cb = b.coeff(i).coords();
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, Poly>> brute_force_factorizations(const Algebra& a, const Poly& f, std::size_t d1,
                                                              std::size_t d2, const ResidueConstraint* constraint,
                                                              std::uint64_t cap) {
  require_same_algebra(a, f.algebra());
  if (!a.ring().is_finite()) throw PreconditionError("brute force needs a finite scalar ring");
  if (!f.is_monic() || f.degree() != static_cast<long>(d1 + d2)) {
    throw PreconditionError("F must be monic of degree d1 + d2");
  }
  // Candidate sets for each non-leading coefficient of F1.
  std::vector<Element> offsets;
  std::vector<Element> base(d1, a.zero());
  if (constraint) {
    if (constraint->f1.degree() != static_cast<long>(d1) || constraint->f2.degree() != static_cast<long>(d2)) {
      throw PreconditionError("residue constraint degrees differ from the split");
    }
    Poly lifted = lift_poly(constraint->f1, *constraint->quotient);
    for (std::size_t i = 0; i < d1; ++i) base[i] = lifted.coeff(i);
  }
  RowModule space = [&] {
    if (constraint) return constraint->quotient->kernel;
    std::vector<Vector> all;
    for (std::size_t k = 0; k < a.dimension(); ++k) all.push_back(a.basis(k).coords());
    return RowModule::span(a.ring(), a.dimension(), std::move(all));
  }();
  auto size = space.cardinality(cap);
  if (!size) throw CapExceeded("coefficient space exceeds the brute-force cap");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d1; ++i) {
    if (total > cap / *size) throw CapExceeded("brute-force candidate count exceeds cap");
    total *= *size;
  }
  space.for_each_element([&](const Vector& v) {
    offsets.emplace_back(a, v);
    return true;
  });

  std::vector<std::pair<Poly, Poly>> found;
  std::vector<std::size_t> digits(d1, 0);
  while (true) {
    std::vector<Element> c;
    for (std::size_t i = 0; i < d1; ++i) c.push_back(base[i] + offsets[digits[i]]);
    c.push_back(a.one());
    Poly f1(a, std::move(c));
    auto [f2, rem] = right_divide(f, f1);
    bool ok = rem.is_zero() && f2.is_monic() && f2.degree() == static_cast<long>(d2) && f1 * f2 == f;
    if (ok && constraint) ok = residue_poly(f2, *constraint->quotient) == constraint->f2;
    if (ok) found.emplace_back(std::move(f1), std::move(f2));
    std::size_t i = 0;
    while (i < d1 && ++digits[i] == offsets.size()) digits[i++] = 0;
    if (i == d1) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (coords_less(x.first, y.first)) return true;
    if (coords_less(y.first, x.first)) return false;
    return coords_less(x.second, y.second);
  });
  return found;
}

}  // namespace nchensel
