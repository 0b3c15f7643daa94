#include "doctest.h"
#include "helpers.hpp"
#include "nchensel/errors.hpp"
#include "nchensel/lf_extension.hpp"

using namespace nchensel;
using testing_helpers::gf;

namespace {

struct FreeCase {
  PresentedPair src = free_presented_pair(gf(5), 1, 2);
  Poly f = Poly::from_ints(src.algebra, {{-1, 1}, {0, 0}, {1, 0}});
  Poly f1 = residue_scalar_poly(src.residue, {-1, 1});
  Poly f2 = residue_scalar_poly(src.residue, {1, 1});
};

PairMorphism identity_on(const PresentedPair& p) { return PairMorphism(p.pair, p.pair, AlgebraMap::identity(p.algebra)); }

void check_extension(const LFExtension& ext) {
  CHECK(validate_morphism(ext.phi).ok);
  CHECK(is_perfect(ext.target.pair));
  CHECK(nilpotency_index(ext.target.pair.ideal()).has_value());
  for (const auto& fac : ext.factorizations) {
    CHECK(fac.f_in_target == fac.lifted1 * fac.lifted2);
    CHECK(map_poly(fac.lifted1, ext.target.augmentation) == fac.f1);
    CHECK(map_poly(fac.lifted2, ext.target.augmentation) == fac.f2);
  }
}

}  // namespace

TEST_CASE("extension of a field collapses to the field") {
  PresentedPair k = free_presented_pair(gf(5), 0, 2);
  CHECK(k.algebra.dimension() == 1);
  LFExtension ext = build_lf_extension(k, residue_scalar_poly(k.algebra, {-1, 0, 1}),
                                       residue_scalar_poly(k.residue, {-1, 1}), residue_scalar_poly(k.residue, {1, 1}));
  CHECK(ext.target.algebra.dimension() == 1);
  check_extension(ext);
  const auto& fac = ext.factorizations.front();
  CHECK(fac.lifted1.coeff(0) == ext.target.algebra.from_ints({-1}));
  CHECK(fac.lifted2.coeff(0) == ext.target.algebra.from_ints({1}));
  CHECK(check_local(ext).decision == Decision::yes);
}

TEST_CASE("extension of a truncated free algebra and its universal map") {
  FreeCase c;
  LFExtension ext = build_lf_extension(c.src, c.f, c.f1, c.f2);
  check_extension(ext);
  CHECK(check_local(ext).decision == Decision::yes);

  Poly g1 = Poly::from_ints(c.src.algebra, {{-1, 3}, {1, 0}});
  Poly g2 = Poly::from_ints(c.src.algebra, {{1, 2}, {1, 0}});
  UniversalMap u = universal_map(ext, identity_on(c.src), g1, g2);
  CHECK(u.composition_ok);
  CHECK(validate_morphism(u.psi).ok);
  CHECK(map_poly(ext.factorizations[0].lifted1, u.psi.map()) == g1);
  CHECK(map_poly(ext.factorizations[0].lifted2, u.psi.map()) == g2);
  CHECK(compose(u.psi.map(), ext.phi.map()).matrix() == Matrix::identity(gf(5), 2));
  CHECK(u.uniqueness.find("perfect and Jacobson") != std::string::npos);

  // At itself the universal map is the identity.
  const auto& fac = ext.factorizations[0];
  UniversalMap self = universal_map(ext, ext.phi, fac.lifted1, fac.lifted2);
  CHECK(self.psi.map().matrix() == Matrix::identity(gf(5), ext.target.algebra.dimension()));

  // Matching the Hensel lift of the same data.
  Filtration filt = adic_filtration(c.src.pair);
  Quotient q = quotient_algebra(c.src.pair.ideal());
  LiftResult lift = hensel_lift(make_lift_problem(filt, c.f, Poly::from_ints(q.algebra, {{-1}, {1}}),
                                                  Poly::from_ints(q.algebra, {{1}, {1}})));
  CHECK(lift.f1 == g1);
  CHECK(lift.f2 == g2);

  // Swapped targets have the wrong residues.
  CHECK_THROWS_AS(universal_map(ext, identity_on(c.src), g2, g1), PreconditionError);
}

TEST_CASE("extension input validation") {
  FreeCase c;
  CHECK_THROWS_AS(build_lf_extension(c.src, c.f, c.f1, c.f1), PreconditionError);
  CHECK_THROWS_AS(build_lf_extension(c.src, c.f, residue_scalar_poly(c.src.residue, {1}),
                                     residue_scalar_poly(c.src.residue, {-1, 0, 1})),
                  PreconditionError);
  Poly sq = Poly::from_ints(c.src.algebra, {{0, 0}, {0, 0}, {1, 0}});
  Poly x = residue_scalar_poly(c.src.residue, {0, 1});
  CHECK_THROWS_AS(build_lf_extension(c.src, sq, x, x), PreconditionError);

  // A relation with a constant term leaves no augmentation.
  auto r = gf(5);
  NCPresentation bad{r, {"u"}, {FreePoly::generator(r, 0) - FreePoly::constant(r.one())}, 3};
  CHECK_THROWS_AS(make_presented_pair(bad), PreconditionError);
}

TEST_CASE("composition of extensions") {
  FreeCase c;
  LFExtension triv = trivial_extension(c.src);
  CHECK(triv.factorizations.empty());
  CHECK(validate_morphism(triv.phi).ok);

  LFExtension e1 = build_lf_extension(c.src, c.f, c.f1, c.f2);
  LFExtension one = compose_lf_extensions(triv, e1);
  CHECK(one.factorizations.size() == 1);
  CHECK(one.phi.map().matrix() == e1.phi.map().matrix());

  // Second factorization: x^2 - 4 = (x - 2)(x + 2), pushed into the first target.
  Poly g = Poly::from_ints(c.src.algebra, {{-4, 0}, {0, 0}, {1, 0}});
  Poly g_in = map_poly(g, e1.phi.map());
  LFExtension e2 = build_lf_extension(e1.target, g_in, residue_scalar_poly(c.src.residue, {-2, 1}),
                                      residue_scalar_poly(c.src.residue, {2, 1}));
  LFExtension both = compose_lf_extensions(e1, e2);
  REQUIRE(both.factorizations.size() == 2);
  check_extension(both);
  CHECK(both.factorizations[1].stage == 1);
  CHECK(map_poly(c.f, both.phi.map()) == both.factorizations[0].lifted1 * both.factorizations[0].lifted2);
  CHECK(map_poly(g, both.phi.map()) == both.factorizations[1].lifted1 * both.factorizations[1].lifted2);

  LFExtension other = trivial_extension(free_presented_pair(gf(5), 2, 3));
  CHECK_THROWS_AS(compose_lf_extensions(e1, other), PreconditionError);
}

TEST_CASE("two simple extensions have a common upper bound") {
  FreeCase c;
  Poly g = Poly::from_ints(c.src.algebra, {{-4, 1}, {0, 0}, {1, 0}});
  Poly g1 = residue_scalar_poly(c.src.residue, {-2, 1}), g2 = residue_scalar_poly(c.src.residue, {2, 1});
  LFExtension e1 = build_lf_extension(c.src, c.f, c.f1, c.f2);
  LFExtension e2 = build_lf_extension(c.src, g, g1, g2);
  // Adjoin the second factorization on top of the first.
  LFExtension top = build_lf_extension(e1.target, map_poly(g, e1.phi.map()), g1, g2);
  LFExtension bound = compose_lf_extensions(e1, top);
  // e1 -> bound is top.phi; e2 -> bound comes from e2's universal property.
  const auto& fac = bound.factorizations[1];
  UniversalMap m2 = universal_map(e2, bound.phi, fac.lifted1, fac.lifted2);
  CHECK(m2.composition_ok);
  CHECK(validate_morphism(m2.psi).ok);
  CHECK(validate_morphism(top.phi).ok);
  CHECK(compose(top.phi.map(), e1.phi.map()).matrix() == bound.phi.map().matrix());
}

TEST_CASE("abelianization") {
  PresentedPair two = free_presented_pair(gf(5), 2, 3);
  Abelianization ab = abelianize(two);
  CHECK(ab.pair.algebra.dimension() == 6);
  CHECK(ab.pair.algebra.is_commutative());
  CHECK(validate_morphism(ab.projection).ok);
  CHECK(abelianize(ab.pair).pair.algebra.dimension() == 6);

  PresentedPair one = free_presented_pair(gf(5), 1, 3);
  CHECK(abelianize(one).pair.algebra.dimension() == one.algebra.dimension());
}

TEST_CASE("comparison with the commutative lift") {
  FreeCase c;
  LFExtension ext = build_lf_extension(c.src, c.f, c.f1, c.f2);
  Filtration filt = adic_filtration(c.src.pair);
  Quotient q = quotient_algebra(c.src.pair.ideal());
  LiftResult lift = hensel_lift(make_lift_problem(filt, c.f, Poly::from_ints(q.algebra, {{-1}, {1}}),
                                                  Poly::from_ints(q.algebra, {{1}, {1}})));
  CommutativeComparison cmp = compare_with_commutative_lift(ext, lift);
  CHECK(cmp.ok);
  REQUIRE(cmp.abelian_f1);
  CHECK(map_poly(*cmp.abelian_f1, *cmp.to_source) == lift.f1);

  PresentedPair two = free_presented_pair(gf(5), 2, 3);
  Poly f = Poly::from_ints(two.algebra, {{-1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}});
  LFExtension nc = build_lf_extension(two, f, residue_scalar_poly(two.residue, {-1, 1}),
                                      residue_scalar_poly(two.residue, {1, 1}));
  CHECK_THROWS_AS(compare_with_commutative_lift(nc, lift), PreconditionError);
}

TEST_CASE("local checks need a local source") {
  auto r = gf(5);
  FreeCase c;
  LFExtension ext = build_lf_extension(c.src, c.f, c.f1, c.f2);
  CHECK(check_local(trivial_extension(c.src)).decision == Decision::yes);
  // Replacing the source pair by a non-local one is refused.
  auto d = diagonal(r, 2);
  Ideal e1 = ideal_closure(d.algebra, {d.algebra.basis(0)});
  LFExtension fake = ext;
  fake.source.pair = Pair(e1);
  CHECK_THROWS_AS(check_local(fake), PreconditionError);
}
