#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nchensel/errors.hpp"
#include "nchensel/poly.hpp"
#include "oracles.hpp"

using namespace nchensel;
using testing_helpers::gf;
using testing_helpers::int_coeffs;
using testing_helpers::scalar_poly;

namespace {

// Linear polynomial x + (a + b u) over GF(5)<u> truncated at 2.
Poly lin(const Algebra& a, std::int64_t c0, std::int64_t cu) { return Poly::from_ints(a, {{c0, cu}, {1, 0}}); }

}  // namespace

TEST_CASE("polynomial products") {
  auto z = zmod(7, 2);
  Poly p = scalar_poly(z.algebra, {-8, 1}) * scalar_poly(z.algebra, {8, 1});
  CHECK(int_coeffs(p) == std::vector<std::int64_t>{34, 0, 1});
  CHECK(p == scalar_poly(z.algebra, {-15, 0, 1}));

  auto one = trunc_free(gf(5), 1, 2);
  Poly q = lin(one.algebra, -1, 3) * lin(one.algebra, 1, 2);
  CHECK(q == Poly::from_ints(one.algebra, {{-1, 1}, {0, 0}, {1, 0}}));
  CHECK((q * Poly(one.algebra)).is_zero());
  CHECK(poly_arith(q, q, PolyOp::sub).is_zero());
}

TEST_CASE("polynomial products agree with integer convolution") {
  std::mt19937_64 rng(4);
  auto z = zmod(3, 3);
  for (int t = 0; t < 100; ++t) {
    oracle::IntPoly a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& c : a) c = static_cast<std::int64_t>(rng() % 27);
    for (auto& c : b) c = static_cast<std::int64_t>(rng() % 27);
    Poly pa = scalar_poly(z.algebra, a), pb = scalar_poly(z.algebra, b);
    CHECK(int_coeffs(pa * pb) == oracle::mul(a, b, 27));
    CHECK(int_coeffs(pa + pb) == oracle::add(a, b, 27));
  }
}

TEST_CASE("residue polynomials") {
  auto one = trunc_free(gf(5), 1, 2);
  Quotient q = quotient_algebra(one.ideal);
  Poly f = Poly::from_ints(one.algebra, {{-1, 1}, {0, 0}, {1, 0}});
  Poly r = residue_poly(f, q);
  CHECK(r == scalar_poly(q.algebra, {-1, 0, 1}));
  CHECK(r.is_monic());
  CHECK(r.degree() == 2);
  CHECK(residue_poly(Poly::from_ints(one.algebra, {{0, 3}, {0, 2}}), q).is_zero());
  CHECK(lift_poly(r, q).is_monic());
  CHECK(residue_poly(lift_poly(r, q), q) == r);
}

TEST_CASE("euclidean division examples") {
  auto z = zmod(7, 2);
  Poly g = scalar_poly(z.algebra, {0, 0, 7});
  Poly f = scalar_poly(z.algebra, {-15, 0, 1});
  Division d = euclid_divide(g, f, &z.ideal);
  CHECK(int_coeffs(d.quotient) == std::vector<std::int64_t>{7});
  CHECK(int_coeffs(d.remainder) == std::vector<std::int64_t>{7});

  Division small = euclid_divide(scalar_poly(z.algebra, {7}), f, &z.ideal);
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == scalar_poly(z.algebra, {7}));

  auto two = trunc_free(gf(5), 2, 3);
  const Algebra& a = two.algebra;
  Poly ux = Poly::monomial(a.basis(1), 1);
  Poly xv(a, {a.basis(2), a.one()});
  Division e = euclid_divide(ux, xv, &two.ideal);
  CHECK(e.quotient == Poly(a, {a.basis(1)}));
  CHECK(e.remainder == Poly(a, {-a.basis(4)}));

  // Outside I[x] is refused.
  CHECK_THROWS(euclid_divide(scalar_poly(z.algebra, {1, 0, 1}), f, &z.ideal));
}

TEST_CASE("euclidean division reconstructs the dividend") {
  std::mt19937_64 rng(9);
  auto inst = trunc_free(gf(3), 2, 3);
  const Algebra& a = inst.algebra;
  auto rand_elem = [&](bool in_ideal) {
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < a.dimension(); ++i) c.push_back(static_cast<std::int64_t>(rng() % 3));
    if (in_ideal) c[0] = 0;
    return a.from_ints(c);
  };
  for (int t = 0; t < 100; ++t) {
    std::size_t dg = rng() % 5, df = 1 + rng() % 3;
    std::vector<Element> gc, fc;
    for (std::size_t i = 0; i <= dg; ++i) gc.push_back(rand_elem(true));
    for (std::size_t i = 0; i < df; ++i) fc.push_back(rand_elem(false));
    fc.push_back(a.one());
    Poly g(a, gc), f(a, fc);
    Division d = euclid_divide(g, f, &inst.ideal);
    CHECK(d.quotient * f + d.remainder == g);
    CHECK(d.remainder.degree() < f.degree());
    CHECK(poly_in_ideal(d.quotient, inst.ideal));
    CHECK(poly_in_ideal(d.remainder, inst.ideal));
  }
}

TEST_CASE("Bezout search examples") {
  auto f5 = diagonal(gf(5), 1).algebra;
  auto c = bezout_search(scalar_poly(f5, {0, 1}), scalar_poly(f5, {-1, 1}), Side::left);
  REQUIRE(c);
  CHECK(c->holds());
  CHECK(int_coeffs(c->g1) == std::vector<std::int64_t>{1});
  CHECK(int_coeffs(c->g2) == std::vector<std::int64_t>{4});

  auto f7 = diagonal(gf(7), 1).algebra;
  auto d = bezout_search(scalar_poly(f7, {-1, 1}), scalar_poly(f7, {1, 1}), Side::left);
  REQUIRE(d);
  CHECK(int_coeffs(d->g1) == std::vector<std::int64_t>{3});
  CHECK(int_coeffs(d->g2) == std::vector<std::int64_t>{4});

  for (std::size_t cap : {0u, 2u, 5u}) {
    CHECK_FALSE(bezout_search(scalar_poly(f7, {0, 1}), scalar_poly(f7, {0, 1}), Side::left, cap));
  }
}

TEST_CASE("Bezout search agrees with the field gcd") {
  std::mt19937_64 rng(21);
  auto f3 = diagonal(gf(3), 1).algebra;
  for (int t = 0; t < 100; ++t) {
    oracle::IntPoly a(2 + rng() % 3), b(2 + rng() % 3);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 3);
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 3);
    a.back() = 1;
    b.back() = 1;
    bool coprime = oracle::xgcd(a, b, 3).has_value();
    auto c = bezout_search(scalar_poly(f3, a), scalar_poly(f3, b), t % 2 ? Side::left : Side::right);
    CHECK(c.has_value() == coprime);
    if (c) CHECK(c->holds());
  }
}

TEST_CASE("Bezout lift") {
  auto z = zmod(7, 2);
  Quotient q = quotient_algebra(z.ideal);
  Filtration f = with_checked_hypotheses(adic_filtration(Pair(z.ideal)));
  auto res = bezout_search(scalar_poly(q.algebra, {-1, 1}), scalar_poly(q.algebra, {1, 1}), Side::left);
  REQUIRE(res);
  BezoutCertificate lifted =
      bezout_lift(*res, scalar_poly(z.algebra, {-8, 1}), scalar_poly(z.algebra, {8, 1}), q, f);
  CHECK(lifted.holds());
  CHECK(residue_poly(lifted.g1, q) == res->g1);
  CHECK(residue_poly(lifted.g2, q) == res->g2);

  auto one = trunc_free(gf(5), 1, 2);
  Quotient q1 = quotient_algebra(one.ideal);
  Filtration f1 = with_checked_hypotheses(adic_filtration(Pair(one.ideal)));
  for (Side side : {Side::left, Side::right}) {
    auto r1 = bezout_search(scalar_poly(q1.algebra, {-1, 1}), scalar_poly(q1.algebra, {1, 1}), side);
    REQUIRE(r1);
    BezoutCertificate l1 = bezout_lift(*r1, lin(one.algebra, -1, 3), lin(one.algebra, 1, 2), q1, f1);
    CHECK(l1.side == side);
    CHECK(l1.holds());
    CHECK(residue_poly(l1.g1, q1) == r1->g1);
  }
  // Exact lifts of an exact certificate come back unchanged.
  BezoutCertificate exact = bezout_lift(*res, scalar_poly(z.algebra, {-1, 1}), scalar_poly(z.algebra, {1, 1}), q, f);
  CHECK(exact.holds());
}

TEST_CASE("coprimality transfers between A and A/I") {
  std::mt19937_64 rng(5);
  auto inst = trunc_free(gf(3), 2, 3);
  const Algebra& a = inst.algebra;
  Quotient q = quotient_algebra(inst.ideal);
  Filtration f = with_checked_hypotheses(degree_filtration(Pair(inst.ideal), inst.degrees));
  for (int t = 0; t < 30; ++t) {
    std::vector<Element> c1, c2;
    for (int i = 0; i < 2; ++i) {
      std::vector<std::int64_t> x, y;
      for (std::size_t k = 0; k < a.dimension(); ++k) {
        x.push_back(static_cast<std::int64_t>(rng() % 3));
        y.push_back(static_cast<std::int64_t>(rng() % 3));
      }
      c1.push_back(a.from_ints(x));
      c2.push_back(a.from_ints(y));
    }
    c1.push_back(a.one());
    c2.push_back(a.one());
    Poly p1(a, c1), p2(a, c2);
    auto down = bezout_search(residue_poly(p1, q), residue_poly(p2, q), Side::left);
    auto up = bezout_search(p1, p2, Side::left);
    CHECK(down.has_value() == up.has_value());
    if (up) CHECK(up->holds());
    if (down) CHECK(bezout_lift(*down, p1, p2, q, f).holds());
  }
}
