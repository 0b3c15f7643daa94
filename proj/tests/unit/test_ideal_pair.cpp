#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nchensel/errors.hpp"
#include "nchensel/pair.hpp"
#include "oracles.hpp"

using namespace nchensel;
using testing_helpers::gf;

namespace {

// Words of trunc_free(2 gens, cap 3) in basis order: 1 u v uu uv vu vv.
Instance free2() { return trunc_free(gf(5), 2, 3); }

Element random_element(const Algebra& a, std::mt19937_64& rng, std::int64_t m) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < a.dimension(); ++i) c.push_back(static_cast<std::int64_t>(rng() % m));
  return a.from_ints(c);
}

}  // namespace

TEST_CASE("ideal closure examples") {
  auto inst = free2();
  const Algebra& a = inst.algebra;
  CHECK(ideal_closure(a, {a.zero()}).is_zero());
  CHECK(ideal_closure(a, {a.one()}).is_whole());

  Ideal iu = ideal_closure(a, {a.basis(1)});
  // Every monomial containing u: u, uu, uv, vu.
  CHECK(iu.length() == 4);
  for (std::size_t i : {1u, 3u, 4u, 5u}) CHECK(iu.contains(a.basis(i)));
  for (std::size_t i : {0u, 2u, 6u}) CHECK_FALSE(iu.contains(a.basis(i)));
  CHECK(iu.contains(a.zero()));
  CHECK_FALSE(iu.contains(a.one()));
}

TEST_CASE("ideal closure agrees with the span oracle and is idempotent") {
  std::mt19937_64 rng(11);
  auto inst = trunc_free(gf(3), 2, 3);
  const Algebra& a = inst.algebra;
  auto words = oracle::words_below(2, 3);
  for (int t = 0; t < 25; ++t) {
    Element g = random_element(a, rng, 3);
    Ideal i = ideal_closure(a, {g});
    // Oracle: span of w g w' over basis words w, w'.
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t x = 0; x < a.dimension(); ++x) {
      for (std::size_t y = 0; y < a.dimension(); ++y) {
        Element e = a.basis(x) * g * a.basis(y);
        std::vector<std::int64_t> r;
        for (const auto& c : e.coords()) r.push_back(static_cast<std::int64_t>(c.residue()));
        rows.push_back(r);
      }
    }
    CHECK(i.length() == oracle::rank_mod_p(rows, 3));
    CHECK(ideal_closure(a, i.basis()) == i);
    for (const auto& b : i.basis()) {
      for (std::size_t x = 0; x < a.dimension(); ++x) {
        CHECK(i.contains(a.basis(x) * b));
        CHECK(i.contains(b * a.basis(x)));
      }
    }
  }
}

TEST_CASE("quotient examples") {
  auto inst = free2();
  Quotient q0 = quotient_algebra(zero_ideal(inst.algebra));
  CHECK(q0.algebra.dimension() == inst.algebra.dimension());

  auto one = trunc_free(gf(5), 1, 2);
  Quotient q1 = quotient_algebra(one.ideal);
  CHECK(q1.algebra.dimension() == 1);
  CHECK(q1.projection(one.algebra.from_ints({3, 4})) == q1.algebra.from_ints({3}));
  CHECK(validate_morphism(quotient_morphism(q1, Pair(one.ideal))).ok);

  auto z = zmod(7, 2);
  Quotient q7 = quotient_algebra(z.ideal);
  CHECK(q7.algebra.ring() == gf(7));
  for (std::int64_t a = 0; a < 49; a += 5) {
    for (std::int64_t b = 0; b < 49; b += 3) {
      Element x = q7.projection(z.algebra.from_ints({a}) * z.algebra.from_ints({b}));
      CHECK(x == q7.algebra.from_ints({oracle::mulmod(a, b, 7)}));
    }
  }
  // The section maps classes back to representatives.
  Element c = q7.algebra.from_ints({3});
  CHECK(q7.projection(q7.lift(c)) == c);
}

TEST_CASE("non-free quotient over Z/p^k is rejected") {
  // Z/8 x Z/8 modulo (4) x 0 is Z/4 x Z/8, not free over any Z/2^j.
  auto d = diagonal(ScalarRing::prime_power(2, 3), 2);
  Ideal i = ideal_closure(d.algebra, {d.algebra.from_ints({4, 0})});
  CHECK_THROWS_AS(quotient_algebra(i), PreconditionError);
}

TEST_CASE("commutator filtration ground truth") {
  auto z = zmod(7, 2);
  auto cz = commutator_filtration(Pair(z.ideal));
  REQUIRE(cz.chain.size() == 2);
  CHECK(cz.chain[1].is_zero());
  CHECK(cz.perfect);

  auto inst = free2();
  const Algebra& a = inst.algebra;
  auto cf = commutator_filtration(Pair(inst.ideal));
  REQUIRE(cf.chain.size() == 3);
  CHECK(cf.chain[0] == inst.ideal);
  CHECK(cf.chain[1].length() == 1);
  CHECK(cf.chain[1].contains(a.basis(4) - a.basis(5)));
  CHECK(cf.chain[2].is_zero());
  CHECK(cf.perfect);
  CHECK(is_perfect(Pair(inst.ideal)));

  auto ut = upper_triangular(gf(5), 2);
  auto cu = commutator_filtration(Pair(ut.ideal));
  CHECK_FALSE(cu.perfect);
  CHECK(cu.stable() == ut.ideal);
  CHECK_FALSE(is_perfect(Pair(ut.ideal)));
}

TEST_CASE("commutator chains descend and are preserved by quotient maps") {
  for (auto inst : {trunc_free(gf(2), 2, 4), trunc_free(gf(3), 3, 3), scalar_plus_strict_upper(gf(3), 4)}) {
    Pair p(inst.ideal);
    auto cf = commutator_filtration(p);
    for (std::size_t n = 1; n < cf.chain.size(); ++n) CHECK(cf.chain[n - 1].contains(cf.chain[n]));
    // Projection to A / I^(2) sends I^(n) into the n-th commutator term of the image.
    if (cf.chain.size() < 2 || cf.chain[1].is_zero()) continue;
    Quotient q = quotient_algebra(cf.chain[1]);
    Ideal image = image_ideal(q, inst.ideal);
    if (image.is_whole()) continue;
    auto target = commutator_filtration(Pair(image));
    for (std::size_t n = 0; n < cf.chain.size(); ++n) {
      const Ideal& t = target.chain[std::min(n, target.chain.size() - 1)];
      for (const auto& g : cf.chain[n].basis()) CHECK(t.contains(q.projection(g)));
    }
  }
}

TEST_CASE("perfect quotient") {
  auto ut = upper_triangular(gf(5), 2);
  PerfectQuotient pq = perfect_quotient(Pair(ut.ideal));
  CHECK(pq.pair.algebra().dimension() == 2);
  CHECK(pq.pair.algebra().is_commutative());
  CHECK(pq.pair.ideal().is_zero());
  CHECK(is_perfect(pq.pair));
  CHECK(validate_morphism(pq.projection).ok);
  PerfectQuotient again = perfect_quotient(pq.pair);
  CHECK(again.pair.algebra().dimension() == 2);

  auto inst = free2();
  PerfectQuotient same = perfect_quotient(Pair(inst.ideal));
  CHECK(same.pair.algebra().dimension() == inst.algebra.dimension());
}

TEST_CASE("filtration hypotheses") {
  auto z = zmod(7, 2);
  Filtration fz = with_checked_hypotheses(adic_filtration(Pair(z.ideal)));
  CHECK(fz.length() == 2);
  CHECK(fz.all_hypotheses_verified());

  auto inst = free2();
  Filtration fd = with_checked_hypotheses(degree_filtration(Pair(inst.ideal), inst.degrees));
  CHECK(fd.length() == 3);
  CHECK(fd.level(3).is_zero());
  CHECK(fd.all_hypotheses_verified());

  auto ut = upper_triangular(gf(5), 2);
  Filtration fu = with_checked_hypotheses(adic_filtration(Pair(ut.ideal)));
  CHECK(fu.f_commutative == Verdict::verified_false);
  CHECK_FALSE(fu.all_hypotheses_verified());

  // Bad chains.
  CHECK_THROWS_AS(Filtration(Pair(inst.ideal), {inst.ideal}), PreconditionError);
  CHECK_THROWS_AS(Pair(whole_ideal(inst.algebra)), PreconditionError);
  auto d = diagonal(gf(5), 2);
  Ideal e1 = ideal_closure(d.algebra, {d.algebra.basis(0)});
  CHECK_THROWS_AS(adic_filtration(Pair(e1)), PreconditionError);
}

TEST_CASE("invert_one_plus") {
  auto one = trunc_free(gf(5), 1, 2);
  Filtration f1 = with_checked_hypotheses(adic_filtration(Pair(one.ideal)));
  CHECK(invert_one_plus(one.algebra.zero(), f1) == one.algebra.one());
  CHECK(invert_one_plus(one.algebra.basis(1), f1) == one.algebra.from_ints({1, 4}));

  auto z8 = zmod(2, 3);
  Filtration f8 = with_checked_hypotheses(adic_filtration(Pair(z8.ideal)));
  Element inv = invert_one_plus(z8.algebra.from_ints({2}), f8);
  CHECK(inv == z8.algebra.from_ints({3}));
  CHECK(inv * inv == z8.algebra.one());

  std::mt19937_64 rng(2);
  auto big = trunc_free(gf(3), 2, 4);
  Filtration fb = with_checked_hypotheses(degree_filtration(Pair(big.ideal), big.degrees));
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(big.algebra, rng, 3);
    a = a - a[0] * big.algebra.one();  // into the augmentation ideal
    Element b = invert_one_plus(a, fb);
    CHECK((big.algebra.one() + a) * b == big.algebra.one());
    CHECK(b * (big.algebra.one() + a) == big.algebra.one());
  }
}

TEST_CASE("units") {
  auto one = trunc_free(gf(5), 1, 2);
  CHECK(is_unit(one.algebra.one()));
  CHECK(*unit_inverse(one.algebra.one()) == one.algebra.one());
  CHECK_FALSE(is_unit(one.algebra.basis(1)));

  auto inst = free2();
  const Algebra& a = inst.algebra;
  Element c = a.basis(4) - a.basis(5);
  auto inv = unit_inverse(a.one() + c);
  REQUIRE(inv);
  CHECK(*inv == a.one() - c);
}

TEST_CASE("is_unit agrees with exhaustive inverse search") {
  for (auto inst : {trunc_free(gf(2), 2, 3), scalar_plus_strict_upper(gf(3), 3), upper_triangular(gf(2), 2),
                    diagonal(gf(5), 2)}) {
    const Algebra& a = inst.algebra;
    std::vector<Element> all;
    std::size_t n = a.dimension();
    std::int64_t p = static_cast<std::int64_t>(a.ring().modulus());
    std::vector<std::int64_t> c(n, 0);
    while (true) {
      all.push_back(a.from_ints(c));
      std::size_t i = 0;
      while (i < n && ++c[i] == p) c[i++] = 0;
      if (i == n) break;
    }
    for (const auto& x : all) {
      bool found = false;
      for (const auto& y : all) {
        if (x * y == a.one() && y * x == a.one()) {
          found = true;
          break;
        }
      }
      CHECK(is_unit(x) == found);
    }
  }
}

TEST_CASE("Jacobson and local decisions") {
  auto inst = free2();
  CHECK(is_jacobson(Pair(inst.ideal)).decision == Decision::yes);
  CHECK(is_local_pair(Pair(inst.ideal)).decision == Decision::yes);

  auto field = diagonal(gf(5), 1);
  CHECK(is_jacobson(Pair(field.ideal)).decision == Decision::yes);
  CHECK(is_local_pair(Pair(field.ideal)).decision == Decision::yes);

  auto d = diagonal(gf(5), 2);
  Ideal e1 = ideal_closure(d.algebra, {d.algebra.basis(0)});
  CHECK(is_jacobson(Pair(e1)).decision == Decision::no);
  CHECK(is_local_pair(Pair(e1)).decision == Decision::no);
}

TEST_CASE("morphism validation") {
  auto inst = free2();
  Pair p(inst.ideal);
  CHECK(validate_morphism(PairMorphism(p, p, AlgebraMap::identity(inst.algebra))).ok);

  auto one = trunc_free(gf(5), 1, 2);
  auto field = diagonal(gf(5), 1);
  Matrix m(gf(5), 1, 2);
  m.at(0, 0) = gf(5).one();
  m.at(0, 1) = gf(5).one();
  AlgebraMap u_to_1(one.algebra, field.algebra, m);
  CHECK_FALSE(check_ring_map(u_to_1).ok);
}

TEST_CASE("opposite algebra") {
  auto inst = free2();
  const Algebra& a = inst.algebra;
  Algebra op = opposite_algebra(a);
  CHECK((a.basis(1).rebase(op) * a.basis(2).rebase(op)).rebase(a) == a.basis(5));
  CHECK(opposite_algebra(op) == a);
}
