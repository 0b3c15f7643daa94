#include "nchensel/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nchensel {

Vector zero_vector(const ScalarRing& ring, std::size_t n) { return Vector(n, ring.zero()); }

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void add_scaled(Vector& y, const Scalar& a, const Vector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector scaled(const Scalar& a, const Vector& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& s : x) out.push_back(a * s);
  return out;
}

Matrix::Matrix(ScalarRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

Matrix Matrix::identity(const ScalarRing& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_columns(const ScalarRing& ring, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out = zero_vector(ring_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) out[r] += at(r, c) * x[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

namespace {

struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  std::vector<unsigned> valuations;
};

// Howell form over Z/p^k; reduces to RREF when the ring is a field.
Echelon canonical_form(const ScalarRing& ring, std::size_t width, std::vector<Vector> work) {
  Echelon out;
  std::erase_if(work, [](const Vector& v) { return is_zero_vector(v); });
  for (std::size_t col = 0; col < width && !work.empty(); ++col) {
    std::size_t best = work.size();
    unsigned best_val = 0;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (work[r][col].is_zero()) continue;
      unsigned v = ring.valuation(work[r][col]);
      if (best == work.size() || v < best_val) {
        best = r;
        best_val = v;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;

    Vector pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    pivot = scaled(unit_part_inverse(pivot[col]), pivot);

    for (auto& row : work) {
      if (row[col].is_zero()) continue;
      add_scaled(row, -floor_div_p_power(row[col], best_val), pivot);
    }
    std::erase_if(work, [](const Vector& v) { return is_zero_vector(v); });

    if (!ring.is_field() && best_val > 0) {
      Vector extra = scaled(ring.p_power(ring.exponent() - best_val), pivot);
      if (!is_zero_vector(extra)) work.push_back(std::move(extra));
    }
    out.rows.push_back(std::move(pivot));
    out.pivots.push_back(col);
    out.valuations.push_back(best_val);
  }

  for (std::size_t j = 0; j < out.rows.size(); ++j) {
    std::size_t c = out.pivots[j];
    for (std::size_t i = 0; i < j; ++i) {
      const Scalar& e = out.rows[i][c];
      if (e.is_zero()) continue;
      Scalar q = floor_div_p_power(e, out.valuations[j]);
      add_scaled(out.rows[i], -q, out.rows[j]);
    }
  }
  return out;
}

}  // namespace

RowModule::RowModule(ScalarRing ring, std::size_t width) : ring_(ring), width_(width) {}

RowModule RowModule::span(const ScalarRing& ring, std::size_t width, std::vector<Vector> generators) {
  for (const auto& g : generators) {
    if (g.size() != width) throw std::invalid_argument("generator width mismatch");
    for (const auto& s : g) {
      if (!(s.ring() == ring)) throw ScalarError("generator entry from ring " + s.ring().name());
    }
  }
  RowModule m(ring, width);
  auto e = canonical_form(ring, width, std::move(generators));
  m.rows_ = std::move(e.rows);
  m.pivots_ = std::move(e.pivots);
  m.valuations_ = std::move(e.valuations);
  return m;
}

Vector RowModule::reduce(Vector v) const {
  if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Scalar& e = v[pivots_[j]];
    if (e.is_zero()) continue;
    add_scaled(v, -floor_div_p_power(e, valuations_[j]), rows_[j]);
  }
  return v;
}

bool RowModule::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool RowModule::contains(const RowModule& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& r) { return contains(r); });
}

RowModule RowModule::with(std::vector<Vector> extra) const {
  extra.insert(extra.end(), rows_.begin(), rows_.end());
  return span(ring_, width_, std::move(extra));
}

RowModule RowModule::operator+(const RowModule& other) const { return with(other.rows_); }

std::uint64_t RowModule::length() const {
  if (ring_.is_field()) return rows_.size();
  std::uint64_t total = 0;
  for (unsigned v : valuations_) total += ring_.exponent() - v;
  return total;
}

std::optional<std::uint64_t> RowModule::cardinality(std::uint64_t cap) const {
  if (!ring_.is_finite()) return std::nullopt;
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < length(); ++i) {
    if (n > cap / ring_.prime()) return std::nullopt;
    n *= ring_.prime();
  }
  return n <= cap ? std::optional(n) : std::nullopt;
}

void RowModule::for_each_element(const std::function<bool(const Vector&)>& visit) const {
  if (!ring_.is_finite()) throw ScalarError("cannot enumerate a module over Q");
  std::vector<std::uint64_t> radix;
  for (unsigned v : valuations_) {
    std::uint64_t r = 1;
    for (unsigned i = v; i < ring_.exponent(); ++i) r *= ring_.prime();
    radix.push_back(r);
  }
  std::vector<std::uint64_t> digits(rows_.size(), 0);
  while (true) {
    Vector v = zero_vector(ring_, width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) add_scaled(v, ring_.from_residue(digits[i]), rows_[i]);
    if (!visit(v)) return;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == radix[i]) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

bool RowModule::operator==(const RowModule& other) const {
  return ring_ == other.ring_ && width_ == other.width_ && rows_ == other.rows_;
}

namespace {

// Rows (M column j | reversed unit vector j). Reversing the right block puts
// kernel pivots on the last unknowns, so the reduced particular solution has
// zero free variables, matching the classical convention.
std::vector<Vector> solution_rows(const Matrix& m) {
  const auto& ring = m.ring();
  std::size_t n = m.cols();
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector row = m.column(j);
    row.resize(m.rows() + n, ring.zero());
    row[m.rows() + (n - 1 - j)] = ring.one();
    rows.push_back(std::move(row));
  }
  return rows;
}

RowModule right_block(const ScalarRing& ring, const RowModule& h, std::size_t left, std::size_t n, bool reversed) {
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < h.rows().size(); ++t) {
    if (h.pivots()[t] < left) continue;
    Vector g(n, ring.zero());
    for (std::size_t j = 0; j < n; ++j) g[j] = h.rows()[t][left + (reversed ? n - 1 - j : j)];
    gens.push_back(std::move(g));
  }
  return RowModule::span(ring, n, std::move(gens));
}

}  // namespace

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vector& rhs) {
  const auto& ring = m.ring();
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  std::size_t n = m.cols();
  auto h = RowModule::span(ring, m.rows() + n, solution_rows(m));

  Vector target = rhs;
  target.resize(m.rows() + n, ring.zero());
  Vector r = h.reduce(std::move(target));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!r[i].is_zero()) return std::nullopt;
  }
  Vector x(n, ring.zero());
  for (std::size_t j = 0; j < n; ++j) x[j] = -r[m.rows() + (n - 1 - j)];
  if (m.apply(x) != rhs) throw std::logic_error("solve_linear: particular solution failed recheck");
  return LinearSolution{std::move(x), right_block(ring, h, m.rows(), n, true)};
}

RowModule kernel(const Matrix& m) {
  auto h = RowModule::span(m.ring(), m.rows() + m.cols(), solution_rows(m));
  return right_block(m.ring(), h, m.rows(), m.cols(), true);
}

RowModule preimage(const Matrix& m, const RowModule& target) {
  const auto& ring = m.ring();
  if (!(target.ring() == ring) || target.width() != m.rows()) {
    throw std::invalid_argument("preimage: target module does not match the matrix");
  }
  std::size_t n = m.cols();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    Vector row = m.column(j);
    row.resize(m.rows() + n, ring.zero());
    row[m.rows() + j] = ring.one();
    rows.push_back(std::move(row));
  }
  for (const auto& t : target.rows()) {
    Vector row = t;
    row.resize(m.rows() + n, ring.zero());
    rows.push_back(std::move(row));
  }
  auto h = RowModule::span(ring, m.rows() + n, std::move(rows));
  return right_block(ring, h, m.rows(), n, false);
}

}  // namespace nchensel
