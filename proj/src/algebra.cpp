#include "nchensel/algebra.hpp"

#include <sstream>

namespace nchensel {

struct Algebra::Impl {
  ScalarRing ring;
  std::vector<std::string> labels;
  StructureConstants table;
  Vector unit;
  // Sparse view of the table: for (i, j), the nonzero (k, c[i][j][k]).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;
  bool commutative = true;
};

namespace {

std::vector<std::size_t> support(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back(i);
  }
  return out;
}

Vector table_product(const Algebra::Impl& impl, const Vector& a, const Vector& b) {
  std::size_t n = impl.labels.size();
  Vector out = zero_vector(impl.ring, n);
  auto sa = support(a);
  auto sb = support(b);
  for (std::size_t i : sa) {
    for (std::size_t j : sb) {
      const auto& entries = impl.sparse[i * n + j];
      if (entries.empty()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : entries) out[k] += ab * c;
    }
  }
  return out;
}

}  // namespace

Algebra Algebra::make(ScalarRing ring, std::vector<std::string> labels, StructureConstants table, Vector unit) {
  std::size_t n = labels.size();
  if (n == 0) throw AlgebraError("algebra dimension must be at least 1");
  if (table.size() != n || unit.size() != n) throw AlgebraError("structure constant table shape mismatch");
  for (const auto& row : table) {
    if (row.size() != n) throw AlgebraError("structure constant table shape mismatch");
    for (const auto& v : row) {
      if (v.size() != n) throw AlgebraError("structure constant table shape mismatch");
      for (const auto& s : v) {
        if (!(s.ring() == ring)) throw AlgebraError("structure constant from ring " + s.ring().name());
      }
    }
  }
  for (const auto& s : unit) {
    if (!(s.ring() == ring)) throw AlgebraError("unit coordinate from ring " + s.ring().name());
  }

  auto impl = std::make_shared<Impl>();
  impl->ring = ring;
  impl->labels = std::move(labels);
  impl->table = std::move(table);
  impl->unit = std::move(unit);
  impl->sparse.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = impl->table[i][j][k];
        if (!c.is_zero()) impl->sparse[i * n + j].emplace_back(k, c);
      }
      if (impl->table[i][j] != impl->table[j][i]) impl->commutative = false;
    }
  }

  auto basis_vec = [&](std::size_t i) {
    Vector v = zero_vector(ring, n);
    v[i] = ring.one();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = basis_vec(i);
    if (table_product(*impl, impl->unit, e) != e || table_product(*impl, e, impl->unit) != e) {
      throw AlgebraError("unit law fails on basis element '" + impl->labels[i] + "'");
    }
  }
  // (e_i e_j) e_k = sum_l c_ij[l] e_l e_k and e_i (e_j e_k) = sum_l c_jk[l] e_i e_l
  const auto& sp = impl->sparse;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(ring, n);
        Vector rhs = zero_vector(ring, n);
        for (const auto& [l, c] : sp[i * n + j]) {
          for (const auto& [m, d] : sp[l * n + k]) lhs[m] += c * d;
        }
        for (const auto& [l, c] : sp[j * n + k]) {
          for (const auto& [m, d] : sp[i * n + l]) rhs[m] += c * d;
        }
        if (lhs != rhs) {
          throw AlgebraError("associativity fails on basis triple (" + impl->labels[i] + ", " + impl->labels[j] +
                             ", " + impl->labels[k] + ")");
        }
      }
    }
  }
  return Algebra(std::move(impl));
}

Algebra make_algebra(ScalarRing ring, std::vector<std::string> labels, StructureConstants table, Vector unit) {
  return Algebra::make(std::move(ring), std::move(labels), std::move(table), std::move(unit));
}

const ScalarRing& Algebra::ring() const { return impl_->ring; }
std::size_t Algebra::dimension() const { return impl_->labels.size(); }
const std::vector<std::string>& Algebra::labels() const { return impl_->labels; }
const StructureConstants& Algebra::table() const { return impl_->table; }
const Vector& Algebra::unit_coords() const { return impl_->unit; }
bool Algebra::is_commutative() const { return impl_->commutative; }

Element Algebra::zero() const { return Element(*this, zero_vector(ring(), dimension())); }
Element Algebra::one() const { return Element(*this, impl_->unit); }

Element Algebra::basis(std::size_t i) const {
  Vector v = zero_vector(ring(), dimension());
  v.at(i) = ring().one();
  return Element(*this, std::move(v));
}

Element Algebra::element(Vector coords) const { return Element(*this, std::move(coords)); }

Element Algebra::from_ints(const std::vector<std::int64_t>& coords) const {
  Vector v;
  for (auto c : coords) v.push_back(ring().from_int(c));
  return Element(*this, std::move(v));
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const { return table_product(*impl_, a, b); }

bool Algebra::same_as(const Algebra& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->ring == other.impl_->ring && impl_->table == other.impl_->table && impl_->unit == other.impl_->unit;
}

Algebra opposite_algebra(const Algebra& a) {
  std::size_t n = a.dimension();
  StructureConstants t(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a.table()[j][i];
  }
  return Algebra::make(a.ring(), a.labels(), std::move(t), a.unit_coords());
}

void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!a.same_as(b)) throw ParentMismatch("elements belong to different algebras");
}

Element::Element(Algebra parent, Vector coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.dimension()) throw std::invalid_argument("coordinate count differs from dimension");
  for (const auto& s : coords_) {
    if (!(s.ring() == parent_.ring())) throw ScalarError("coordinate from ring " + s.ring().name());
  }
}

Element Element::operator-() const {
  Vector v;
  v.reserve(coords_.size());
  for (const auto& s : coords_) v.push_back(-s);
  return Element(parent_, std::move(v));
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a.parent_, b.parent_);
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
  return Element(a.parent_, std::move(v));
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a.parent_, b.parent_);
  Vector v = a.coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
  return Element(a.parent_, std::move(v));
}

Element operator*(const Element& a, const Element& b) {
  require_same_algebra(a.parent_, b.parent_);
  return Element(a.parent_, a.parent_.multiply(a.coords_, b.coords_));
}

Element operator*(const Scalar& s, const Element& a) { return Element(a.parent_, scaled(s, a.coords_)); }

bool Element::operator==(const Element& other) const {
  return parent_.same_as(other.parent_) && coords_ == other.coords_;
}

Element Element::rebase(const Algebra& other) const {
  if (!(other.ring() == parent_.ring()) || other.dimension() != parent_.dimension()) {
    throw ParentMismatch("rebase target has a different underlying module");
  }
  return Element(other, coords_);
}

std::string Element::to_string() const {
  std::ostringstream out;
  bool first = true;
  const auto& labels = parent_.labels();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (labels[i] == "1") {
      out << coords_[i].to_string();
    } else if (coords_[i].is_one()) {
      out << labels[i];
    } else {
      out << coords_[i].to_string() << "*" << labels[i];
    }
  }
  if (first) out << "0";
  return out.str();
}

Element mul(const Element& a, const Element& b) { return a * b; }

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

}  // namespace nchensel
