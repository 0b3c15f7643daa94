#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra or lifting code; everything is plain integer
// arithmetic modulo m.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using IntPoly = std::vector<i64>;  // constant term first

inline i64 mod(i64 a, i64 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

inline i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>((__int128)mod(a, m) * mod(b, m) % m); }

inline i64 power(i64 b, unsigned e) {
  i64 r = 1;
  while (e--) r *= b;
  return r;
}

/// Inverse modulo m by extended Euclid, or nullopt.
inline std::optional<i64> inverse(i64 a, i64 m) {
  i64 g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    i64 q = g / r;
    std::tie(g, r) = std::pair(r, g - q * r);
    std::tie(x, y) = std::pair(y, x - q * y);
  }
  if (g != 1) return std::nullopt;
  return mod(x, m);
}

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly normalize(IntPoly p, i64 m) {
  for (auto& c : p) c = mod(c, m);
  trim(p);
  return p;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b, i64 m) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return normalize(r, m);
}

inline IntPoly scale(const IntPoly& a, i64 c, i64 m) {
  IntPoly r = a;
  for (auto& x : r) x = mulmod(x, c, m);
  return normalize(r, m);
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b, i64 m) { return add(a, scale(b, m - 1, m), m); }

inline IntPoly mul(const IntPoly& a, const IntPoly& b, i64 m) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + mulmod(a[i], b[j], m), m);
  }
  return normalize(r, m);
}

/// Division by a polynomial with unit leading coefficient.
inline std::pair<IntPoly, IntPoly> divmod(IntPoly a, const IntPoly& b, i64 m) {
  a = normalize(a, m);
  i64 lead_inv = *inverse(b.back(), m);
  IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    i64 c = mulmod(a.back(), lead_inv, m);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - mulmod(c, b[i], m), m);
    trim(a);
  }
  return {normalize(q, m), a};
}

/// s, t with s a + t b = 1 over GF(p), when gcd is 1.
inline std::optional<std::pair<IntPoly, IntPoly>> xgcd(const IntPoly& a, const IntPoly& b, i64 p) {
  IntPoly r0 = normalize(a, p), r1 = normalize(b, p);
  IntPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = r1;
    r1 = r;
    IntPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.size() != 1) return std::nullopt;
  i64 inv = *inverse(r0[0], p);
  return std::pair(scale(s0, inv, p), scale(t0, inv, p));
}

/// Classical linear Hensel lifting of F ≡ g h (mod p) to Z/p^k, monic g, h.
inline std::optional<std::pair<IntPoly, IntPoly>> classical_hensel(const IntPoly& f, IntPoly g, IntPoly h, i64 p,
                                                                   unsigned k) {
  auto st = xgcd(g, h, p);
  if (!st) return std::nullopt;
  auto [s, t] = *st;
  i64 pk = power(p, k);
  for (unsigned j = 1; j < k; ++j) {
    i64 pj = power(p, j);
    IntPoly e = sub(f, mul(g, h, pk), pk);
    for (auto& c : e) c = mod(c / pj, p);  // e is divisible by p^j
    trim(e);
    auto [q, r] = divmod(mul(e, s, p), h, p);
    IntPoly dh = r;
    IntPoly dg = add(mul(e, t, p), mul(q, g, p), p);
    g = add(g, scale(dg, pj, pk), pk);
    h = add(h, scale(dh, pj, pk), pk);
  }
  return std::pair(g, h);
}

/// Rank of a list of vectors over GF(p), by plain elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<i64>> rows, i64 p) {
  std::size_t rank = 0;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && mod(rows[piv][col], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    i64 inv = *inverse(rows[rank][col], p);
    for (auto& x : rows[rank]) x = mulmod(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || mod(rows[r][col], p) == 0) continue;
      i64 c = rows[r][col];
      for (std::size_t i = 0; i < width; ++i) rows[r][i] = mod(rows[r][i] - mulmod(c, rows[rank][i], p), p);
    }
    ++rank;
  }
  return rank;
}

/// All x in (Z/m)^n with M x = b, by exhaustive enumeration (tiny sizes only).
inline std::vector<std::vector<i64>> enumerate_solutions(const std::vector<std::vector<i64>>& mat,
                                                         const std::vector<i64>& b, i64 m) {
  std::size_t n = mat.empty() ? 0 : mat[0].size();
  std::vector<std::vector<i64>> out;
  std::vector<i64> x(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < mat.size() && ok; ++r) {
      i64 s = 0;
      for (std::size_t c = 0; c < n; ++c) s = mod(s + mulmod(mat[r][c], x[c], m), m);
      ok = s == mod(b[r], m);
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < n && ++x[i] == m) x[i++] = 0;
    if (i == n) break;
  }
  return out;
}

using Mat = std::vector<std::vector<i64>>;

inline Mat mat_mul(const Mat& a, const Mat& b, i64 m) {
  std::size_t n = a.size();
  Mat c(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] = mod(c[i][j] + mulmod(a[i][k], b[k][j], m), m);
    }
  }
  return c;
}

// Free words truncated below a cap, as an independent model of the
// truncated free algebra and of finitely presented quotients.
using Word = std::vector<unsigned>;

inline std::vector<Word> words_below(unsigned gens, unsigned cap) {
  std::vector<Word> out{{}};
  std::size_t start = 0;
  for (unsigned len = 1; len < cap; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i) {
      for (unsigned g = 0; g < gens; ++g) {
        Word w = out[i];
        w.push_back(g);
        out.push_back(w);
      }
    }
    start = end;
  }
  return out;
}

using WordPoly = std::map<Word, i64>;

/// Dimension of the free algebra on `gens` letters modulo the two-sided ideal
/// of `relations` and every word of length >= cap, over GF(p): spans all
/// a * r * b below the cap and takes the rank.
inline std::size_t presented_dimension(unsigned gens, unsigned cap, const std::vector<WordPoly>& relations, i64 p) {
  auto words = words_below(gens, cap);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::vector<i64>> rows;
  for (const auto& r : relations) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        std::vector<i64> row(words.size(), 0);
        bool any = false;
        for (const auto& [w, c] : r) {
          if (a.size() + w.size() + b.size() >= cap) continue;
          Word x = a;
          x.insert(x.end(), w.begin(), w.end());
          x.insert(x.end(), b.begin(), b.end());
          row[index.at(x)] = mod(row[index.at(x)] + c, p);
          any = true;
        }
        if (any) rows.push_back(row);
      }
    }
  }
  return words.size() - rank_mod_p(rows, p);
}

}  // namespace oracle
