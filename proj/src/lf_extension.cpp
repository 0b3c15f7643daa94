#include "nchensel/lf_extension.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nchensel/errors.hpp"
#include "nchensel/instances.hpp"

namespace nchensel {

namespace {

Algebra base_field(const ScalarRing& ring) {
  StructureConstants table{{Vector{ring.one()}}};
  return make_algebra(ring, {"1"}, std::move(table), Vector{ring.one()});
}

void words_below(std::size_t gens, std::size_t len, Word& w, const std::function<void(const Word&)>& visit) {
  if (w.size() == len) {
    visit(w);
    return;
  }
  for (std::uint32_t g = 0; g < gens; ++g) {
    w.push_back(g);
    words_below(gens, len, w, visit);
    w.pop_back();
  }
}

// The residue coefficient as a scalar; residue algebras are one-dimensional.
Scalar scalar_of(const Element& e) { return e.coords().at(0); }

Poly scalar_poly_in(const Algebra& a, const Poly& residue) {
  std::vector<Element> coeffs;
  for (const auto& c : residue.coeffs()) coeffs.push_back(scalar_of(c) * a.one());
  return Poly(a, std::move(coeffs));
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

}  // namespace

Element PresentedPair::generator(std::size_t g) const {
  return element(FreePoly::generator(engine.presentation().ring, static_cast<std::uint32_t>(g)));
}

Element PresentedPair::element(const FreePoly& p) const { return algebra.element(engine.coords(p)); }

PresentedPair make_presented_pair(NCPresentation pres) {
  while (true) {
    NormalFormEngine engine = complete(pres);
    Algebra a = to_algebra(engine);
    Algebra k = base_field(pres.ring);
    std::vector<Element> zeros(pres.generators.size(), k.zero());
    AlgebraMap aug = [&] {
      try {
        return eval_map(engine, a, zeros, k);
      } catch (const PreconditionError& e) {
        throw PreconditionError(std::string("no augmentation: ") + e.what());
      }
    }();
    Ideal j = ideal_from_closed_module(a, kernel(aug.matrix()));
    Pair pair(j);
    auto cf = commutator_filtration(pair);
    if (cf.perfect) return PresentedPair{std::move(engine), a, std::move(pair), k, std::move(aug)};
    for (const auto& e : cf.stable().basis()) pres.relations.push_back(engine.from_coords(e.coords()));
  }
}

PresentedPair free_presented_pair(const ScalarRing& field, std::size_t generators, unsigned cap) {
  NCPresentation pres{field, {}, {}, cap};
  for (std::size_t i = 0; i < generators; ++i) pres.generators.push_back(generator_name(i));
  return make_presented_pair(std::move(pres));
}

Poly residue_scalar_poly(const Algebra& residue, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::vector<std::int64_t>> c;
  for (auto v : coeffs) c.push_back({v});
  return Poly::from_ints(residue, c);
}

LFExtension build_lf_extension(const PresentedPair& source, const Poly& f, const Poly& f1, const Poly& f2,
                               unsigned cap) {
  if (!(f.algebra() == source.algebra)) throw PreconditionError("F must lie over the source algebra");
  if (!(f1.algebra() == source.residue) || !(f2.algebra() == source.residue)) {
    throw PreconditionError("residue factors must lie over the residue field");
  }
  if (!f.is_monic() || !f1.is_monic() || !f2.is_monic()) throw PreconditionError("F, f1, f2 must be monic");
  if (f1.degree() < 1 || f2.degree() < 1) throw PreconditionError("residue factors must have positive degree");
  if (!(map_poly(f, source.augmentation) == f1 * f2)) {
    throw PreconditionError("residue factors do not multiply to F modulo the ideal");
  }
  if (!bezout_search(f1, f2, Side::left)) throw PreconditionError("residue factors are not coprime");

  const NCPresentation& sp = source.engine.presentation();
  const ScalarRing& ring = sp.ring;
  auto d1 = static_cast<std::size_t>(f1.degree());
  auto d2 = static_cast<std::size_t>(f2.degree());
  auto m = static_cast<std::uint32_t>(sp.generators.size());

  NCPresentation pres{ring, sp.generators, sp.relations, std::max(cap, sp.deg_cap)};
  for (std::size_t i = 0; i < d1; ++i) pres.generators.push_back(fresh_name(pres.generators, "y" + std::to_string(i)));
  for (std::size_t j = 0; j < d2; ++j) pres.generators.push_back(fresh_name(pres.generators, "z" + std::to_string(j)));
  if (pres.deg_cap > sp.deg_cap) {
    Word w;
    words_below(m, sp.deg_cap, w, [&](const Word& x) { pres.relations.push_back(FreePoly::term(ring.one(), x)); });
  }

  std::vector<FreePoly> c1, c2;
  for (std::size_t i = 0; i < d1; ++i) {
    c1.push_back(FreePoly::constant(scalar_of(f1.coeff(i))) +
                 FreePoly::generator(ring, m + static_cast<std::uint32_t>(i)));
  }
  c1.push_back(FreePoly::constant(ring.one()));
  for (std::size_t j = 0; j < d2; ++j) {
    c2.push_back(FreePoly::constant(scalar_of(f2.coeff(j))) +
                 FreePoly::generator(ring, m + static_cast<std::uint32_t>(d1 + j)));
  }
  c2.push_back(FreePoly::constant(ring.one()));
  for (std::size_t k = 0; k < d1 + d2; ++k) {
    FreePoly g(ring);
    for (std::size_t i = 0; i <= std::min(k, d1); ++i) {
      if (k - i <= d2) g = g + c1[i] * c2[k - i];
    }
    pres.relations.push_back(g - source.engine.from_coords(f.coeff(k).coords()));
  }

  PresentedPair target = make_presented_pair(std::move(pres));
  std::vector<Element> images;
  for (std::uint32_t g = 0; g < m; ++g) images.push_back(target.generator(g));
  PairMorphism phi = eval_morphism(source.engine, source.pair, images, target.pair);

  std::vector<Element> l1, l2;
  for (const auto& c : c1) l1.push_back(target.element(c));
  for (const auto& c : c2) l2.push_back(target.element(c));
  Poly lifted1(target.algebra, l1), lifted2(target.algebra, l2);
  Poly image = map_poly(f, phi.map());
  if (!(image == lifted1 * lifted2)) throw std::logic_error("adjoined factorization is not exact in the target");
  if (!(map_poly(lifted1, target.augmentation) == f1) || !(map_poly(lifted2, target.augmentation) == f2)) {
    throw std::logic_error("adjoined factors have the wrong residues");
  }

  AdjoinedFactorization fac{0, f, image, f1, f2, lifted1, lifted2};
  return LFExtension{source, std::move(target), std::move(phi), {std::move(fac)}};
}

LFExtension trivial_extension(const PresentedPair& source) {
  return LFExtension{source, source, PairMorphism(source.pair, source.pair, AlgebraMap::identity(source.algebra)), {}};
}

LFExtension compose_lf_extensions(const LFExtension& ext1, const LFExtension& ext2) {
  if (!(ext2.source.algebra == ext1.target.algebra) || !(ext2.source.pair.ideal() == ext1.target.pair.ideal())) {
    throw PreconditionError("extensions do not chain: second source differs from first target");
  }
  PairMorphism phi = compose(ext2.phi, ext1.phi);
  auto check = validate_morphism(phi);
  if (!check.ok) throw std::logic_error("composite is not a morphism of pairs: " + check.reason);
  std::vector<AdjoinedFactorization> facs;
  for (const auto& a : ext1.factorizations) {
    const AlgebraMap& m = ext2.phi.map();
    facs.push_back({a.stage, a.f, map_poly(a.f_in_target, m), a.f1, a.f2, map_poly(a.lifted1, m),
                    map_poly(a.lifted2, m)});
  }
  for (auto a : ext2.factorizations) {
    a.stage += ext1.factorizations.empty() ? 0 : ext1.factorizations.back().stage + 1;
    facs.push_back(std::move(a));
  }
  return LFExtension{ext1.source, ext2.target, std::move(phi), std::move(facs)};
}

UniversalMap universal_map(const LFExtension& ext, const PairMorphism& phi, const Poly& g1, const Poly& g2) {
  if (ext.factorizations.size() != 1) throw PreconditionError("universal map needs a simple extension");
  const auto& fac = ext.factorizations.front();
  if (!(phi.source().algebra() == ext.source.algebra)) throw PreconditionError("φ must start at the source pair");
  const Algebra& b = phi.target().algebra();
  if (!(g1.algebra() == b) || !(g2.algebra() == b)) throw PreconditionError("G1, G2 must lie over φ's target");
  if (!g1.is_monic() || !g2.is_monic() || g1.degree() != fac.f1.degree() || g2.degree() != fac.f2.degree()) {
    throw PreconditionError("G1, G2 must be monic of the residue degrees");
  }
  if (!(map_poly(fac.f, phi.map()) == g1 * g2)) throw PreconditionError("φ(F) differs from G1 G2");
  Quotient q = quotient_algebra(phi.target().ideal());
  if (!(residue_poly(g1, q) == scalar_poly_in(q.algebra, fac.f1)) ||
      !(residue_poly(g2, q) == scalar_poly_in(q.algebra, fac.f2))) {
    throw PreconditionError("residues of G1, G2 do not match the residue factors");
  }

  std::vector<Element> images;
  std::size_t m = ext.source.engine.presentation().generators.size();
  for (std::size_t g = 0; g < m; ++g) images.push_back(phi(ext.source.generator(g)));
  for (std::size_t i = 0; i < fac.f1.coeffs().size() - 1; ++i) {
    images.push_back(g1.coeff(i) - scalar_of(fac.f1.coeff(i)) * b.one());
  }
  for (std::size_t j = 0; j < fac.f2.coeffs().size() - 1; ++j) {
    images.push_back(g2.coeff(j) - scalar_of(fac.f2.coeff(j)) * b.one());
  }
  PairMorphism psi = eval_morphism(ext.target.engine, ext.target.pair, images, phi.target());
  bool ok = compose(psi.map(), ext.phi.map()).matrix() == phi.map().matrix();

  std::string why = "fixed on generators: source generators through φ, adjoined coefficients by G1, G2";
  if (is_perfect(phi.target()) && is_jacobson(phi.target()).decision == Decision::yes) {
    why += "; target is perfect and Jacobson, so (G1, G2) is the only lift of the residue factors";
  } else {
    why += "; target not known to be perfect Jacobson, lift of the residue factors may not be unique";
  }
  return UniversalMap{std::move(psi), ok, std::move(why)};
}

Abelianization abelianize(const PresentedPair& p) {
  NCPresentation pres = p.engine.presentation();
  const auto& ring = pres.ring;
  auto n = static_cast<std::uint32_t>(pres.generators.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      pres.relations.push_back(FreePoly::term(ring.one(), {i, j}) - FreePoly::term(ring.one(), {j, i}));
    }
  }
  PresentedPair ab = make_presented_pair(std::move(pres));
  std::vector<Element> images;
  for (std::uint32_t g = 0; g < n; ++g) images.push_back(ab.generator(g));
  PairMorphism proj = eval_morphism(p.engine, p.pair, images, ab.pair);
  return Abelianization{std::move(ab), std::move(proj)};
}

DecisionReport check_local(const LFExtension& ext, std::uint64_t cap) {
  auto src = is_local_pair(ext.source.pair, cap);
  if (src.decision != Decision::yes) throw PreconditionError("source pair is not known to be local: " + src.reason);
  return is_local_pair(ext.target.pair, cap);
}

CommutativeComparison compare_with_commutative_lift(const LFExtension& ext, const LiftResult& lift) {
  CommutativeComparison out;
  if (!ext.source.algebra.is_commutative()) throw PreconditionError("source algebra is not commutative");
  PairMorphism id(ext.source.pair, ext.source.pair, AlgebraMap::identity(ext.source.algebra));
  UniversalMap u = universal_map(ext, id, lift.f1, lift.f2);
  Abelianization ab = abelianize(ext.target);
  out.abelian_dimension = ab.pair.algebra.dimension();

  std::size_t n = ext.target.engine.presentation().generators.size();
  std::vector<Element> images;
  for (std::size_t g = 0; g < n; ++g) images.push_back(u.psi(ext.target.generator(g)));
  PairMorphism psi_ab = eval_morphism(ab.pair.engine, ab.pair.pair, images, ext.source.pair);

  const auto& fac = ext.factorizations.front();
  Poly a1 = map_poly(fac.lifted1, ab.projection.map());
  Poly a2 = map_poly(fac.lifted2, ab.projection.map());
  out.to_source = psi_ab.map();
  out.abelian_f1 = a1;
  out.abelian_f2 = a2;
  out.abelian = ab;
  if (!(map_poly(a1, psi_ab.map()) == lift.f1) || !(map_poly(a2, psi_ab.map()) == lift.f2)) {
    out.reason = "abelianized factors do not land on the commutative lift";
    return out;
  }
  AlgebraMap back = compose(compose(psi_ab.map(), ab.projection.map()), ext.phi.map());
  if (!(back.matrix() == Matrix::identity(ext.source.algebra.ring(), ext.source.algebra.dimension()))) {
    out.reason = "abelianized extension does not retract onto the source";
    return out;
  }
  out.ok = u.composition_ok;
  out.reason = out.ok ? "factors agree exactly" : "ψ ∘ Φ differs from the identity";
  return out;
}

}  // namespace nchensel
