#include "nchensel/ideal.hpp"

#include <algorithm>

#include "nchensel/errors.hpp"

namespace nchensel {

namespace {

std::vector<Vector> coords_of(const std::vector<Element>& elems) {
  std::vector<Vector> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(e.coords());
  return out;
}

// Saturate m under multiplication by basis elements on both sides.
RowModule saturate(const Algebra& a, RowModule m, std::vector<Vector> pending) {
  std::size_t n = a.dimension();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis(i).coords());
  while (!pending.empty()) {
    std::vector<Vector> fresh;
    for (const auto& v : pending) {
      for (const auto& e : basis) {
        for (Vector w : {a.multiply(e, v), a.multiply(v, e)}) {
          Vector r = m.reduce(std::move(w));
          if (!is_zero_vector(r)) fresh.push_back(std::move(r));
        }
      }
    }
    if (!fresh.empty()) m = m.with(fresh);
    pending = std::move(fresh);
  }
  return m;
}

}  // namespace

std::vector<Element> Ideal::basis() const {
  std::vector<Element> out;
  for (const auto& r : module_.rows()) out.emplace_back(algebra_, r);
  return out;
}

bool Ideal::contains(const Element& a) const {
  require_same_algebra(algebra_, a.algebra());
  return module_.contains(a.coords());
}

bool Ideal::contains(const Ideal& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return module_.contains(other.module_);
}

bool Ideal::is_whole() const { return module_.contains(algebra_.unit_coords()); }

bool Ideal::operator==(const Ideal& other) const {
  return algebra_.same_as(other.algebra_) && module_ == other.module_;
}

Ideal ideal_closure(const Algebra& a, std::vector<Element> gens) {
  for (const auto& g : gens) require_same_algebra(a, g.algebra());
  auto vecs = coords_of(gens);
  auto m = RowModule::span(a.ring(), a.dimension(), vecs);
  m = saturate(a, m, m.rows());
  return Ideal(a, std::move(gens), std::move(m));
}

Ideal ideal_from_closed_module(const Algebra& a, RowModule m) {
  if (!(m.ring() == a.ring()) || m.width() != a.dimension()) {
    throw PreconditionError("module does not live in the algebra's coordinate space");
  }
  for (const auto& r : m.rows()) {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      Vector e = a.basis(i).coords();
      if (!m.contains(a.multiply(e, r)) || !m.contains(a.multiply(r, e))) {
        throw PreconditionError("module is not a two-sided ideal");
      }
    }
  }
  std::vector<Element> gens;
  for (const auto& r : m.rows()) gens.emplace_back(a, r);
  return Ideal(a, std::move(gens), std::move(m));
}

Ideal zero_ideal(const Algebra& a) { return ideal_closure(a, {}); }

Ideal whole_ideal(const Algebra& a) { return ideal_closure(a, {a.one()}); }

bool ideal_contains(const Ideal& i, const Element& a) { return i.contains(a); }

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_algebra(i.algebra(), j.algebra());
  return ideal_from_closed_module(i.algebra(), i.module() + j.module());
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_algebra(i.algebra(), j.algebra());
  const auto& a = i.algebra();
  std::vector<Vector> prods;
  for (const auto& x : i.module().rows()) {
    for (const auto& y : j.module().rows()) {
      Vector p = a.multiply(x, y);
      if (!is_zero_vector(p)) prods.push_back(std::move(p));
    }
  }
  // Products of module generators span IJ already when both are two-sided,
  // since I and J are closed under the basis actions.
  auto m = RowModule::span(a.ring(), a.dimension(), std::move(prods));
  return ideal_from_closed_module(a, std::move(m));
}

Ideal commutator_ideal(const Ideal& i) {
  const auto& a = i.algebra();
  std::vector<Element> gens;
  for (const auto& b : i.basis()) {
    for (std::size_t k = 0; k < a.dimension(); ++k) {
      Element c = commutator(a.basis(k), b);
      if (!c.is_zero()) gens.push_back(std::move(c));
    }
  }
  return ideal_closure(a, std::move(gens));
}

RowModule commutator_module(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = i + 1; j < a.dimension(); ++j) {
      Vector c = commutator(a.basis(i), a.basis(j)).coords();
      if (!is_zero_vector(c)) gens.push_back(std::move(c));
    }
  }
  return RowModule::span(a.ring(), a.dimension(), std::move(gens));
}

std::optional<std::size_t> nilpotency_index(const Ideal& i) {
  if (i.is_zero()) return 1;
  Ideal power = i;
  for (std::size_t n = 2;; ++n) {
    Ideal next = ideal_product(power, i);
    if (next.is_zero()) return n;
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
}

}  // namespace nchensel
