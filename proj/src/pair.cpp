#include "nchensel/pair.hpp"

#include <algorithm>

#include "nchensel/errors.hpp"

namespace nchensel {

Pair::Pair(Ideal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_whole()) throw PreconditionError("pair ideal must be proper (1 lies in I)");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified_true: return "verified-true";
    case Verdict::verified_false: return "verified-false";
    case Verdict::unchecked: return "unchecked";
  }
  return "?";
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

Filtration::Filtration(Pair pair, std::vector<Ideal> chain) : pair_(std::move(pair)), chain_(std::move(chain)) {
  if (chain_.empty()) throw PreconditionError("filtration chain is empty");
  for (const auto& i : chain_) {
    if (!i.algebra().same_as(pair_.algebra())) throw PreconditionError("filtration ideal from another algebra");
  }
  if (!(chain_.front() == pair_.ideal())) throw PreconditionError("first filtration term differs from the pair ideal");
  if (!chain_.back().is_zero()) throw PreconditionError("last filtration term is not the zero ideal");
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
    if (!chain_[i].contains(chain_[i + 1])) {
      throw PreconditionError("filtration is not descending at level " + std::to_string(i + 1));
    }
  }
}

bool Filtration::all_hypotheses_verified() const {
  return f_commutative == Verdict::verified_true && products_condition == Verdict::verified_true &&
         squares_condition == Verdict::verified_true;
}

Filtration adic_filtration(const Pair& p) {
  std::vector<Ideal> chain{p.ideal()};
  while (!chain.back().is_zero()) {
    Ideal next = ideal_product(chain.back(), p.ideal());
    if (next == chain.back()) throw PreconditionError("ideal is not nilpotent; adic chain does not reach zero");
    chain.push_back(std::move(next));
  }
  return Filtration(p, std::move(chain));
}

Filtration degree_filtration(const Pair& p, const std::vector<unsigned>& basis_degree) {
  const auto& a = p.algebra();
  if (basis_degree.size() != a.dimension()) throw PreconditionError("one degree per basis element required");
  unsigned top = *std::max_element(basis_degree.begin(), basis_degree.end());
  std::vector<Ideal> chain;
  for (unsigned n = 1; n <= top + 1; ++n) {
    std::vector<Vector> gens;
    for (std::size_t b = 0; b < a.dimension(); ++b) {
      if (basis_degree[b] >= n) gens.push_back(a.basis(b).coords());
    }
    chain.push_back(ideal_from_closed_module(a, RowModule::span(a.ring(), a.dimension(), std::move(gens))));
  }
  return Filtration(p, std::move(chain));
}

HypothesisReport check_filtration_hypotheses(const Filtration& f) {
  const auto& a = f.pair().algebra();
  HypothesisReport report;
  RowModule comm = commutator_module(a);
  bool fc = true, pc = true, sc = true;
  for (std::size_t n = 1; n <= f.length(); ++n) {
    LevelCheck lc;
    lc.level = n;
    if (n == f.length()) {
      lc.f_commutative = lc.products_condition = lc.squares_condition = Verdict::verified_true;
      report.levels.push_back(std::move(lc));
      continue;
    }
    const auto& cur = f.level(n).module();
    const auto& next = f.level(n + 1).module();
    bool lf = true, lp = true, ls = true;
    for (const auto& b : cur.rows()) {
      Element be(a, b);
      for (std::size_t k = 0; k < a.dimension() && lf; ++k) {
        Element c = commutator(a.basis(k), be);
        if (!next.contains(c.coords())) {
          lf = false;
          if (lc.witness.empty()) lc.witness = "[" + a.labels()[k] + ", " + be.to_string() + "] = " + c.to_string();
        }
      }
      for (const auto& cm : comm.rows()) {
        if (!lp) break;
        if (!next.contains(a.multiply(b, cm))) {
          lp = false;
          if (lc.witness.empty()) lc.witness = "(" + be.to_string() + ")*(" + Element(a, cm).to_string() + ")";
        }
      }
      for (const auto& b2 : cur.rows()) {
        if (!ls) break;
        if (!next.contains(a.multiply(b, b2))) {
          ls = false;
          if (lc.witness.empty()) lc.witness = "(" + be.to_string() + ")*(" + Element(a, b2).to_string() + ")";
        }
      }
    }
    auto verdict = [](bool ok) { return ok ? Verdict::verified_true : Verdict::verified_false; };
    lc.f_commutative = verdict(lf);
    lc.products_condition = verdict(lp);
    lc.squares_condition = verdict(ls);
    fc = fc && lf;
    pc = pc && lp;
    sc = sc && ls;
    report.levels.push_back(std::move(lc));
  }
  auto verdict = [](bool ok) { return ok ? Verdict::verified_true : Verdict::verified_false; };
  report.f_commutative = verdict(fc);
  report.products_condition = verdict(pc);
  report.squares_condition = verdict(sc);
  return report;
}

Filtration with_checked_hypotheses(Filtration f) {
  auto r = check_filtration_hypotheses(f);
  f.f_commutative = r.f_commutative;
  f.products_condition = r.products_condition;
  f.squares_condition = r.squares_condition;
  return f;
}

AlgebraMap::AlgebraMap(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension()) {
    throw PreconditionError("map matrix shape does not match the algebras");
  }
  if (!(matrix_.ring() == target_.ring())) throw PreconditionError("map matrix must live over the target ring");
  if (!source_.ring().reduces_to(target_.ring())) {
    throw PreconditionError("no scalar map " + source_.ring().name() + " -> " + target_.ring().name());
  }
}

AlgebraMap AlgebraMap::identity(const Algebra& a) {
  return AlgebraMap(a, a, Matrix::identity(a.ring(), a.dimension()));
}

Vector AlgebraMap::apply(const Vector& coords) const {
  Vector x;
  x.reserve(coords.size());
  for (const auto& s : coords) x.push_back(target_.ring().reduce_into(s));
  return matrix_.apply(x);
}

Element AlgebraMap::operator()(const Element& a) const {
  require_same_algebra(source_, a.algebra());
  return Element(target_, apply(a.coords()));
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  require_same_algebra(f.target(), g.source());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < f.source().dimension(); ++i) cols.push_back(g.apply(f.matrix().column(i)));
  return AlgebraMap(f.source(), g.target(),
                    Matrix::from_columns(g.target().ring(), g.target().dimension(), cols));
}

MorphismCheck check_ring_map(const AlgebraMap& m) {
  const auto& s = m.source();
  if (m(s.one()) != m.target().one()) return {false, "unit not preserved: 1 -> " + m(s.one()).to_string()};
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    Element ei = m(s.basis(i));
    for (std::size_t j = 0; j < s.dimension(); ++j) {
      Element lhs = m(s.basis(i) * s.basis(j));
      Element rhs = ei * m(s.basis(j));
      if (lhs != rhs) {
        return {false, "not multiplicative on (" + s.labels()[i] + ", " + s.labels()[j] + "): " + lhs.to_string() +
                           " vs " + rhs.to_string()};
      }
    }
  }
  return {};
}

PairMorphism::PairMorphism(Pair source, Pair target, AlgebraMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!map_.source().same_as(source_.algebra()) || !map_.target().same_as(target_.algebra())) {
    throw PreconditionError("morphism map does not connect the given pairs");
  }
}

PairMorphism compose(const PairMorphism& g, const PairMorphism& f) {
  return PairMorphism(f.source(), g.target(), compose(g.map(), f.map()));
}

RowModule preimage_of_ideal(const AlgebraMap& m, const Ideal& j) {
  const auto& rs = m.source().ring();
  const auto& rt = m.target().ring();
  if (rs == rt) return preimage(m.matrix(), j.module());
  auto lift = [&](const Scalar& s) { return rs.from_residue(s.residue()); };
  Matrix lifted(rs, m.matrix().rows(), m.matrix().cols());
  for (std::size_t r = 0; r < lifted.rows(); ++r) {
    for (std::size_t c = 0; c < lifted.cols(); ++c) lifted.at(r, c) = lift(m.matrix().at(r, c));
  }
  std::vector<Vector> target_rows;
  for (const auto& row : j.module().rows()) {
    Vector v;
    for (const auto& s : row) v.push_back(lift(s));
    target_rows.push_back(std::move(v));
  }
  for (std::size_t t = 0; t < lifted.rows(); ++t) {
    Vector v = zero_vector(rs, lifted.rows());
    v[t] = rs.p_power(rt.exponent());
    target_rows.push_back(std::move(v));
  }
  return preimage(lifted, RowModule::span(rs, lifted.rows(), std::move(target_rows)));
}

MorphismCheck validate_morphism(const PairMorphism& m) {
  auto ring = check_ring_map(m.map());
  if (!ring.ok) return ring;
  RowModule pre = preimage_of_ideal(m.map(), m.target().ideal());
  const auto& i = m.source().ideal().module();
  if (!pre.contains(i)) return {false, "source ideal is not mapped into the target ideal"};
  if (!i.contains(pre)) return {false, "preimage of the target ideal is larger than the source ideal"};
  return {};
}

Element Quotient::lift(const Element& cls) const {
  require_same_algebra(algebra, cls.algebra());
  const auto& rs = section.ring();
  Vector x;
  for (const auto& s : cls.coords()) x.push_back(rs.is_modular() ? rs.from_residue(s.residue()) : s);
  return Element(projection.source(), section.apply(x));
}

Quotient quotient_algebra(const Ideal& ideal) {
  const auto& a = ideal.algebra();
  const auto& ring = a.ring();
  std::size_t n = a.dimension();
  if (ideal.is_whole()) throw PreconditionError("quotient by the whole algebra");

  std::vector<std::size_t> keep;
  ScalarRing qring = ring;
  Matrix proj(ring, 0, 0);

  if (ring.is_field()) {
    const auto& pivots = ideal.module().pivots();
    for (std::size_t c = 0; c < n; ++c) {
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) keep.push_back(c);
    }
    proj = Matrix(ring, keep.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector r = ideal.module().reduce(a.basis(i).coords());
      for (std::size_t s = 0; s < keep.size(); ++s) proj.at(s, i) = r[keep[s]];
    }
  } else {
    // Least j with p^j A ⊆ I; the quotient must then be free over Z/p^j.
    unsigned j = 1;
    while (j < ring.exponent()) {
      bool killed = true;
      for (std::size_t i = 0; i < n && killed; ++i) {
        killed = ideal.module().contains(scaled(ring.p_power(j), a.basis(i).coords()));
      }
      if (killed) break;
      ++j;
    }
    std::vector<Vector> with_p = ideal.module().rows();
    for (std::size_t i = 0; i < n; ++i) with_p.push_back(scaled(ring.p_power(1), a.basis(i).coords()));
    auto mod_p = RowModule::span(ring, n, std::move(with_p));
    for (std::size_t t = 0; t < mod_p.rows().size(); ++t) {
      if (mod_p.pivot_valuations()[t] > 0) keep.push_back(mod_p.pivots()[t]);
    }
    if (ideal.length() + j * keep.size() != n * ring.exponent()) {
      throw PreconditionError("quotient is not free over any Z/p^j; unsupported");
    }
    qring = ring.truncated(j);
    std::vector<Vector> cols;
    for (std::size_t s : keep) cols.push_back(a.basis(s).coords());
    for (const auto& r : ideal.module().rows()) cols.push_back(r);
    Matrix system = Matrix::from_columns(ring, n, cols);
    proj = Matrix(qring, keep.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      auto sol = solve_linear(system, a.basis(i).coords());
      if (!sol) throw std::logic_error("quotient: complement basis does not span");
      for (std::size_t s = 0; s < keep.size(); ++s) proj.at(s, i) = qring.reduce_into(sol->particular[s]);
    }
  }

  std::vector<std::string> labels;
  for (std::size_t s : keep) labels.push_back(a.labels()[s]);
  auto project = [&](const Vector& v) {
    Vector x;
    for (const auto& s : v) x.push_back(qring.reduce_into(s));
    return proj.apply(x);
  };
  StructureConstants table(keep.size(), std::vector<Vector>(keep.size()));
  for (std::size_t s = 0; s < keep.size(); ++s) {
    for (std::size_t t = 0; t < keep.size(); ++t) {
      table[s][t] = project(a.multiply(a.basis(keep[s]).coords(), a.basis(keep[t]).coords()));
    }
  }
  Algebra q = make_algebra(qring, std::move(labels), std::move(table), project(a.unit_coords()));
  Matrix section(ring, n, keep.size());
  for (std::size_t s = 0; s < keep.size(); ++s) section.at(keep[s], s) = ring.one();
  return Quotient{q, AlgebraMap(a, q, std::move(proj)), std::move(section), std::move(keep), ideal.module()};
}

PairMorphism quotient_morphism(const Quotient& q, const Pair& p) {
  return PairMorphism(p, Pair(zero_ideal(q.algebra)), q.projection);
}

Ideal image_ideal(const Quotient& q, const Ideal& j) {
  std::vector<Element> gens;
  for (const auto& b : j.basis()) gens.push_back(q.projection(b));
  return ideal_closure(q.algebra, std::move(gens));
}

CommutatorFiltration commutator_filtration(const Pair& p) {
  CommutatorFiltration out;
  out.chain.push_back(p.ideal());
  while (true) {
    Ideal next = commutator_ideal(out.chain.back());
    if (next == out.chain.back()) break;
    out.chain.push_back(std::move(next));
  }
  out.perfect = out.stable().is_zero();
  if (out.perfect) out.filtration.emplace(p, out.chain);
  return out;
}

bool is_perfect(const Pair& p) { return commutator_filtration(p).perfect; }

PerfectQuotient perfect_quotient(const Pair& p) {
  auto cf = commutator_filtration(p);
  Quotient q = quotient_algebra(cf.stable());
  Pair image(image_ideal(q, p.ideal()));
  PairMorphism proj(p, image, q.projection);
  return PerfectQuotient{std::move(image), std::move(q), std::move(proj)};
}

Element invert_one_plus(const Element& a, const Filtration& f) {
  if (f.squares_condition != Verdict::verified_true) {
    throw PreconditionError("invert_one_plus needs the squares condition verified true");
  }
  if (!f.level(1).contains(a)) throw PreconditionError("invert_one_plus: element is not in I_1");
  // I_n^2 ⊆ I_{n+1} gives a^(2^(N-1)) = 0.
  std::size_t bound = f.length() >= 20 ? (std::size_t{1} << 20) : (std::size_t{1} << (f.length() - 1));
  const auto& alg = a.algebra();
  Element sum = alg.one();
  Element term = alg.one();
  Element neg = -a;
  for (std::size_t k = 1; k <= bound; ++k) {
    term = term * neg;
    if (term.is_zero()) break;
    sum += term;
  }
  if (!term.is_zero()) throw CapExceeded("geometric series did not terminate");
  Element one_plus = alg.one() + a;
  if (one_plus * sum != alg.one() || sum * one_plus != alg.one()) {
    throw std::logic_error("invert_one_plus: series sum is not a two-sided inverse");
  }
  return sum;
}

std::optional<Element> unit_inverse(const Element& a) {
  const auto& alg = a.algebra();
  std::size_t n = alg.dimension();
  std::vector<Vector> left_cols, right_cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = alg.basis(i).coords();
    left_cols.push_back(alg.multiply(a.coords(), e));
    right_cols.push_back(alg.multiply(e, a.coords()));
  }
  auto x = solve_linear(Matrix::from_columns(alg.ring(), n, left_cols), alg.unit_coords());
  if (!x) return std::nullopt;
  auto y = solve_linear(Matrix::from_columns(alg.ring(), n, right_cols), alg.unit_coords());
  if (!y) return std::nullopt;
  Element inv(alg, x->particular);
  if (a * inv != alg.one() || inv * a != alg.one()) throw std::logic_error("unit_inverse: inverse recheck failed");
  return inv;
}

bool is_unit(const Element& a) { return unit_inverse(a).has_value(); }

DecisionReport is_jacobson(const Pair& p, std::uint64_t cap) {
  const auto& i = p.ideal();
  if (auto idx = nilpotency_index(i)) {
    return {Decision::yes, "I is nilpotent (I^" + std::to_string(*idx) + " = 0)"};
  }
  auto count = i.module().cardinality(cap);
  if (!count) return {Decision::undecided, "I is not nilpotent and too large to enumerate"};
  const auto& a = p.algebra();
  std::string witness;
  i.module().for_each_element([&](const Vector& v) {
    Element x(a, v);
    if (!is_unit(a.one() + x)) {
      witness = "1 + (" + x.to_string() + ") is not a unit";
      return false;
    }
    return true;
  });
  if (!witness.empty()) return {Decision::no, witness};
  return {Decision::yes, "1 + x is a unit for all " + std::to_string(*count) + " elements x of I"};
}

DecisionReport is_local_pair(const Pair& p, std::uint64_t cap) {
  const auto& a = p.algebra();
  const auto& i = p.ideal();
  if (nilpotency_index(i)) {
    std::optional<Quotient> q;
    try {
      q = quotient_algebra(i);
    } catch (const PreconditionError& e) {
      return {Decision::undecided, e.what()};
    }
    const auto& qa = q->algebra;
    if (!qa.ring().is_field()) {
      return {Decision::no, "residue ring " + qa.ring().name() + " has the nonunit p outside I"};
    }
    if (qa.dimension() == 1) return {Decision::yes, "I nilpotent and A/I is the field " + qa.ring().name()};
    RowModule all = RowModule::span(qa.ring(), qa.dimension(), [&] {
      std::vector<Vector> b;
      for (std::size_t k = 0; k < qa.dimension(); ++k) b.push_back(qa.basis(k).coords());
      return b;
    }());
    if (!all.cardinality(cap)) return {Decision::undecided, "residue algebra too large to enumerate"};
    std::string witness;
    all.for_each_element([&](const Vector& v) {
      Element x(qa, v);
      if (!x.is_zero() && !is_unit(x)) {
        witness = "lift of " + x.to_string() + " lies outside I and is not a unit";
        return false;
      }
      return true;
    });
    if (!witness.empty()) return {Decision::no, witness};
    return {Decision::yes, "I nilpotent and A/I is a division ring"};
  }
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < a.dimension(); ++k) basis.push_back(a.basis(k).coords());
  RowModule all = RowModule::span(a.ring(), a.dimension(), std::move(basis));
  if (!all.cardinality(cap)) return {Decision::undecided, "I is not nilpotent and A is too large to enumerate"};
  std::string witness;
  all.for_each_element([&](const Vector& v) {
    Element x(a, v);
    bool in_i = i.contains(x);
    bool unit = is_unit(x);
    if (in_i && unit) witness = x.to_string() + " is a unit inside I";
    if (!in_i && !unit) witness = x.to_string() + " lies outside I and is not a unit";
    return witness.empty();
  });
  if (!witness.empty()) return {Decision::no, witness};
  return {Decision::yes, "nonunits of A are exactly I (exhaustive)"};
}

DecisionReport is_local_morphism(const PairMorphism& m, std::uint64_t cap) {
  const auto& a = m.source().algebra();
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < a.dimension(); ++k) basis.push_back(a.basis(k).coords());
  RowModule all = RowModule::span(a.ring(), a.dimension(), std::move(basis));
  if (!all.cardinality(cap)) return {Decision::undecided, "source too large to enumerate"};
  std::string witness;
  all.for_each_element([&](const Vector& v) {
    Element x(a, v);
    if (!is_unit(x) && is_unit(m(x))) witness = "nonunit " + x.to_string() + " maps to a unit";
    return witness.empty();
  });
  if (!witness.empty()) return {Decision::no, witness};
  return {Decision::yes, "every nonunit maps to a nonunit (exhaustive)"};
}

}  // namespace nchensel
