#include "nchensel/instances.hpp"

#include <map>

#include "nchensel/errors.hpp"

namespace nchensel {

namespace {

using Word = std::vector<std::size_t>;

std::vector<Word> words_below(std::size_t g, unsigned cap) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (unsigned len = 1; len < cap; ++len) {
    std::size_t end = out.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (std::size_t letter = 0; letter < g; ++letter) {
        Word next = out[w];
        next.push_back(letter);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

StructureConstants empty_table(const ScalarRing& ring, std::size_t n) {
  return StructureConstants(n, std::vector<Vector>(n, zero_vector(ring, n)));
}

Ideal span_ideal(const Algebra& a, const std::vector<std::size_t>& indices) {
  std::vector<Vector> gens;
  for (auto i : indices) gens.push_back(a.basis(i).coords());
  return ideal_from_closed_module(a, RowModule::span(a.ring(), a.dimension(), std::move(gens)));
}

std::string matrix_unit(std::size_t i, std::size_t j) {
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

std::string generator_name(std::size_t i) {
  static const char* names[] = {"u", "v", "w", "s", "t"};
  return i < 5 ? names[i] : "g" + std::to_string(i);
}

Instance trunc_free(const ScalarRing& ring, std::size_t generators, unsigned cap) {
  if (generators == 0 || cap == 0) throw PreconditionError("trunc_free needs at least one generator and cap >= 1");
  auto words = words_below(generators, cap);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  std::size_t n = words.size();
  auto table = empty_table(ring, n);
  std::vector<std::string> labels;
  std::vector<unsigned> degrees;
  bool short_names = generators <= 5;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label;
    for (std::size_t k = 0; k < words[i].size(); ++k) {
      if (!short_names && k > 0) label += "*";
      label += generator_name(words[i][k]);
    }
    labels.push_back(words[i].empty() ? "1" : label);
    degrees.push_back(static_cast<unsigned>(words[i].size()));
    for (std::size_t j = 0; j < n; ++j) {
      Word w = words[i];
      w.insert(w.end(), words[j].begin(), words[j].end());
      auto it = index.find(w);
      if (it != index.end()) table[i][j][it->second] = ring.one();
    }
  }
  Vector unit = zero_vector(ring, n);
  unit[0] = ring.one();
  Algebra a = make_algebra(ring, labels, std::move(table), std::move(unit));
  std::vector<std::size_t> positive;
  for (std::size_t i = 1; i < n; ++i) positive.push_back(i);
  return Instance{ring.name() + "<" + std::to_string(generators) + " gens>, deg < " + std::to_string(cap), a,
                  span_ideal(a, positive), std::move(degrees)};
}

Instance scalar_plus_strict_upper(const ScalarRing& ring, std::size_t size) {
  if (size == 0) throw PreconditionError("matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t d = 1; d < size; ++d) {
    for (std::size_t i = 0; i + d < size; ++i) units.emplace_back(i, i + d);
  }
  std::size_t n = units.size() + 1;
  auto table = empty_table(ring, n);
  std::vector<std::string> labels{"1"};
  std::vector<unsigned> degrees{0};
  for (std::size_t a = 0; a < n; ++a) {
    table[0][a][a] = ring.one();
    table[a][0][a] = ring.one();
  }
  for (std::size_t a = 0; a < units.size(); ++a) {
    labels.push_back(matrix_unit(units[a].first, units[a].second));
    degrees.push_back(static_cast<unsigned>(units[a].second - units[a].first));
    for (std::size_t b = 0; b < units.size(); ++b) {
      if (units[a].second != units[b].first) continue;
      for (std::size_t c = 0; c < units.size(); ++c) {
        if (units[c] == std::pair(units[a].first, units[b].second)) table[a + 1][b + 1][c + 1] = ring.one();
      }
    }
  }
  Vector unit = zero_vector(ring, n);
  unit[0] = ring.one();
  Algebra alg = make_algebra(ring, labels, std::move(table), std::move(unit));
  std::vector<std::size_t> upper;
  for (std::size_t i = 1; i < n; ++i) upper.push_back(i);
  return Instance{ring.name() + " + strictly upper " + std::to_string(size) + "x" + std::to_string(size), alg,
                  span_ideal(alg, upper), std::move(degrees)};
}

Instance zmod(std::uint64_t p, unsigned k) {
  ScalarRing ring = ScalarRing::prime_power(p, k);
  StructureConstants table{{Vector{ring.one()}}};
  Algebra a = make_algebra(ring, {"1"}, std::move(table), Vector{ring.one()});
  Ideal i = ideal_closure(a, {Element(a, Vector{ring.p_power(1)})});
  return Instance{ring.name(), a, i, {}};
}

Instance upper_triangular(const ScalarRing& ring, std::size_t size) {
  if (size == 0) throw PreconditionError("matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < size; ++i) units.emplace_back(i, i);
  for (std::size_t d = 1; d < size; ++d) {
    for (std::size_t i = 0; i + d < size; ++i) units.emplace_back(i, i + d);
  }
  std::size_t n = units.size();
  auto table = empty_table(ring, n);
  std::vector<std::string> labels;
  std::vector<unsigned> degrees;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(matrix_unit(units[a].first, units[a].second));
    degrees.push_back(static_cast<unsigned>(units[a].second - units[a].first));
    for (std::size_t b = 0; b < n; ++b) {
      if (units[a].second != units[b].first) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (units[c] == std::pair(units[a].first, units[b].second)) table[a][b][c] = ring.one();
      }
    }
  }
  Vector unit = zero_vector(ring, n);
  for (std::size_t i = 0; i < size; ++i) unit[i] = ring.one();
  Algebra alg = make_algebra(ring, labels, std::move(table), std::move(unit));
  std::vector<std::size_t> upper;
  for (std::size_t i = size; i < n; ++i) upper.push_back(i);
  return Instance{ring.name() + " upper triangular " + std::to_string(size) + "x" + std::to_string(size), alg,
                  span_ideal(alg, upper), std::move(degrees)};
}

Instance diagonal(const ScalarRing& ring, std::size_t copies) {
  if (copies == 0) throw PreconditionError("need at least one factor");
  auto table = empty_table(ring, copies);
  std::vector<std::string> labels;
  Vector unit = zero_vector(ring, copies);
  for (std::size_t i = 0; i < copies; ++i) {
    table[i][i][i] = ring.one();
    labels.push_back("e" + std::to_string(i + 1));
    unit[i] = ring.one();
  }
  Algebra a = make_algebra(ring, labels, std::move(table), std::move(unit));
  return Instance{ring.name() + "^" + std::to_string(copies), a, zero_ideal(a), {}};
}

}  // namespace nchensel
