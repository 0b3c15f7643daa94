#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nchensel/errors.hpp"
#include "nchensel/presentations.hpp"
#include "oracles.hpp"

using namespace nchensel;
using testing_helpers::gf;

namespace {

FreePoly word(const ScalarRing& r, Word w, std::int64_t c = 1) { return FreePoly::term(r.from_int(c), std::move(w)); }

FreePoly random_poly(const ScalarRing& r, std::size_t gens, std::size_t max_len, std::mt19937_64& rng) {
  FreePoly p(r);
  std::size_t terms = 1 + rng() % 4;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(rng() % (max_len + 1));
    for (auto& g : w) g = static_cast<std::uint32_t>(rng() % gens);
    p.add_term(r.from_int(static_cast<std::int64_t>(rng() % r.modulus())), w);
  }
  return p;
}

oracle::WordPoly to_oracle(const FreePoly& p) {
  oracle::WordPoly out;
  for (const auto& [w, c] : p.terms()) out[oracle::Word(w.begin(), w.end())] = static_cast<std::int64_t>(c.residue());
  return out;
}

}  // namespace

TEST_CASE("presentation examples") {
  auto r = gf(5);
  auto e1 = complete(NCPresentation{r, {"u"}, {}, 3});
  CHECK(e1.normal_words() == std::vector<Word>{{}, {0}, {0, 0}});

  auto comm = complete(NCPresentation{r, {"u", "v"}, {word(r, {0, 1}) - word(r, {1, 0})}, 3});
  CHECK(comm.dimension() == 6);
  CHECK(comm.normal_form(word(r, {1, 0})) == word(r, {0, 1}));
  CHECK(to_algebra(comm).is_commutative());

  // Every word of length >= cap is zero, so u = u^3 = 0 once u^2 = u.
  auto idem = complete(NCPresentation{r, {"u"}, {word(r, {0, 0}) - word(r, {0})}, 4});
  CHECK(idem.dimension() == 1);

  auto free2 = complete(NCPresentation{r, {"u", "v"}, {}, 4});
  CHECK(free2.dimension() == 15);
}

TEST_CASE("presentations reproduce truncated free tables") {
  for (unsigned gens : {1u, 2u, 3u}) {
    for (unsigned cap : {1u, 2u, 3u}) {
      NCPresentation pres{gf(3), {}, {}, cap};
      for (unsigned g = 0; g < gens; ++g) pres.generators.push_back(generator_name(g));
      Algebra a = to_algebra(complete(pres));
      Algebra b = trunc_free(gf(3), gens, cap).algebra;
      CHECK(a.table() == b.table());
      CHECK(a.labels() == b.labels());
    }
  }
}

TEST_CASE("dimension agrees with the span oracle") {
  std::mt19937_64 rng(31);
  auto r = gf(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t gens = 1 + rng() % 3;
    unsigned cap = 2 + static_cast<unsigned>(rng() % 3);
    if (gens == 3 && cap == 4) cap = 3;
    NCPresentation pres{r, {}, {}, cap};
    for (std::size_t g = 0; g < gens; ++g) pres.generators.push_back(generator_name(g));
    std::size_t nrel = 1 + rng() % 2;
    std::vector<oracle::WordPoly> rels;
    for (std::size_t k = 0; k < nrel; ++k) {
      FreePoly p = random_poly(r, gens, cap - 1, rng);
      pres.relations.push_back(p);
      rels.push_back(to_oracle(p));
    }
    std::size_t want = oracle::presented_dimension(static_cast<unsigned>(gens), cap, rels, 3);
    if (want == 0) {
      CHECK_THROWS_AS(complete(pres), PreconditionError);
      continue;
    }
    CHECK(complete(pres).dimension() == want);
  }
}

TEST_CASE("normal form is idempotent, linear and multiplicative") {
  std::mt19937_64 rng(37);
  auto r = gf(5);
  NCPresentation pres{r, {"u", "v"}, {word(r, {1, 0}) - word(r, {0, 1}, 2), word(r, {0, 0, 0}) - word(r, {1, 1})}, 4};
  auto engine = complete(pres);
  Algebra a = to_algebra(engine);
  for (int t = 0; t < 500; ++t) {
    FreePoly p = random_poly(r, 2, 3, rng), q = random_poly(r, 2, 3, rng);
    FreePoly np = engine.normal_form(p);
    CHECK(engine.normal_form(np) == np);
    Scalar c = r.from_int(static_cast<std::int64_t>(rng() % 5));
    CHECK(engine.normal_form(c * p + q) == c * np + engine.normal_form(q));
    Element ep = a.element(engine.coords(p)), eq = a.element(engine.coords(q));
    CHECK(a.element(engine.coords(p * q)) == ep * eq);
    CHECK(engine.from_coords(engine.coords(p)) == np);
  }
}

TEST_CASE("presentations need field scalars") {
  CHECK_THROWS_AS(complete(NCPresentation{ScalarRing::prime_power(2, 2), {"u"}, {}, 2}), PreconditionError);
}

TEST_CASE("evaluation maps") {
  auto r = gf(5);
  auto engine = complete(NCPresentation{r, {"u"}, {}, 2});
  Algebra a = to_algebra(engine);
  Pair p(trunc_free(r, 1, 2).ideal);
  // Generators to their own classes: the identity.
  AlgebraMap id = eval_map(engine, a, {a.basis(1)}, a);
  CHECK(id.matrix() == Matrix::identity(r, 2));

  Algebra k = diagonal(r, 1).algebra;
  AlgebraMap aug = eval_map(engine, a, {k.zero()}, k);
  CHECK(check_ring_map(aug).ok);
  CHECK(aug(a.from_ints({3, 2})) == k.from_ints({3}));
  CHECK_THROWS_AS(eval_map(engine, a, {k.one()}, k), PreconditionError);

  auto rel = complete(NCPresentation{r, {"u", "v"}, {word(r, {0, 1}) - word(r, {1, 0})}, 3});
  Algebra ra = to_algebra(rel);
  auto diag = diagonal(r, 2).algebra;
  // u, v to commuting idempotents is fine on the relation but fails on the cap words.
  CHECK_THROWS_AS(eval_map(rel, ra, {diag.basis(0), diag.basis(1)}, diag), PreconditionError);
  auto sup = scalar_plus_strict_upper(r, 3).algebra;
  // e12 and e23 do not commute, so uv - vu is violated.
  CHECK_THROWS_AS(eval_map(rel, ra, {sup.basis(1), sup.basis(2)}, sup), PreconditionError);
  AlgebraMap ok = eval_map(rel, ra, {sup.basis(1), sup.basis(1)}, sup);
  CHECK(check_ring_map(ok).ok);
}
