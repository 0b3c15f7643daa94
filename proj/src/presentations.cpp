#include "nchensel/presentations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "nchensel/errors.hpp"

namespace nchensel {

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

FreePoly FreePoly::term(const Scalar& c, Word w) {
  FreePoly p(c.ring());
  p.add_term(c, w);
  return p;
}

std::size_t FreePoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void FreePoly::add_term(const Scalar& c, const Word& w) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreePoly FreePoly::operator-() const {
  FreePoly out(ring_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(c, w);
  return out;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) { return a + (-b); }

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out(a.ring_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(ca * cb, w);
    }
  }
  return out;
}

FreePoly operator*(const Scalar& c, const FreePoly& a) {
  FreePoly out(a.ring_);
  for (const auto& [w, x] : a.terms_) out.add_term(c * x, w);
  return out;
}

FreePoly FreePoly::truncated(std::size_t cap) const {
  FreePoly out(ring_);
  for (const auto& [w, c] : terms_) {
    if (w.size() < cap) out.terms_.emplace(w, c);
  }
  return out;
}

namespace {

std::string join_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  bool short_names = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!short_names && i > 0) out += "*";
    out += w[i] < names.size() ? names[w[i]] : "g" + std::to_string(w[i]);
  }
  return out;
}

// a * p * b with every term of length >= cap dropped.
FreePoly sandwich(const Word& a, const FreePoly& p, const Word& b, std::size_t cap) {
  FreePoly out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    if (a.size() + w.size() + b.size() >= cap) continue;
    Word x = a;
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), b.begin(), b.end());
    out.add_term(c, x);
  }
  return out;
}

std::ptrdiff_t find_subword(const Word& w, const Word& sub) {
  auto it = std::search(w.begin(), w.end(), sub.begin(), sub.end());
  return it == w.end() && !sub.empty() ? -1 : it - w.begin();
}

FreePoly reduce(const FreePoly& p, const std::vector<FreePoly>& rules, std::size_t cap) {
  FreePoly done(p.ring());
  FreePoly rest = p.truncated(cap);
  while (!rest.is_zero()) {
    Word w = rest.leading_word();
    Scalar c = rest.leading_coeff();
    bool hit = false;
    for (const auto& g : rules) {
      auto pos = find_subword(w, g.leading_word());
      if (pos < 0) continue;
      Word a(w.begin(), w.begin() + pos);
      Word b(w.begin() + pos + static_cast<std::ptrdiff_t>(g.leading_word().size()), w.end());
      rest = rest - c * sandwich(a, g, b, cap);
      hit = true;
      break;
    }
    if (!hit) {
      done.add_term(c, w);
      rest.add_term(-c, w);
    }
  }
  return done;
}

FreePoly monic(const FreePoly& p) { return *p.leading_coeff().inverse() * p; }

void words_of_length(std::size_t gens, std::size_t len, const std::function<void(const Word&)>& visit) {
  if (gens == 0 && len > 0) return;
  Word w(len, 0);
  while (true) {
    visit(w);
    std::size_t i = len;
    while (i > 0 && ++w[i - 1] == gens) w[--i] = 0;
    if (i == 0) return;
  }
}

// S-polynomials of proper overlaps below the cap, and cap inclusions
// a * g * b with |a| + |LW(g)| + |b| = cap.
std::vector<FreePoly> obligations(const FreePoly& g, const std::vector<FreePoly>& rules, std::size_t gens,
                                  std::size_t cap) {
  std::vector<FreePoly> out;
  const Word& lw = g.leading_word();
  for (std::size_t left = 0; left + lw.size() <= cap; ++left) {
    std::size_t right = cap - lw.size() - left;
    words_of_length(gens, left, [&](const Word& a) {
      words_of_length(gens, right, [&](const Word& b) {
        FreePoly s = sandwich(a, g, b, cap);
        if (!s.is_zero()) out.push_back(std::move(s));
      });
    });
  }
  auto overlap = [&](const FreePoly& f, const FreePoly& h) {
    const Word& lf = f.leading_word();
    const Word& lh = h.leading_word();
    for (std::size_t k = 1; k < std::min(lf.size(), lh.size()); ++k) {
      if (!std::equal(lf.end() - static_cast<std::ptrdiff_t>(k), lf.end(), lh.begin())) continue;
      if (lf.size() + lh.size() - k >= cap) continue;
      Word tail(lh.begin() + static_cast<std::ptrdiff_t>(k), lh.end());
      Word head(lf.begin(), lf.end() - static_cast<std::ptrdiff_t>(k));
      FreePoly s = sandwich({}, f, tail, cap) - sandwich(head, h, {}, cap);
      if (!s.is_zero()) out.push_back(std::move(s));
    }
  };
  for (const auto& h : rules) {
    overlap(g, h);
    overlap(h, g);
  }
  overlap(g, g);
  return out;
}

}  // namespace

std::string FreePoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (w.empty()) {
      out << c.to_string();
    } else if (c.is_one()) {
      out << join_word(w, names);
    } else {
      out << c.to_string() << "*" << join_word(w, names);
    }
  }
  return out.str();
}

FreePoly NormalFormEngine::normal_form(const FreePoly& p) const { return reduce(p, rules_, pres_.deg_cap); }

Vector NormalFormEngine::coords(const FreePoly& p) const {
  Vector v = zero_vector(pres_.ring, normal_.size());
  FreePoly nf = normal_form(p);
  for (const auto& [w, c] : nf.terms()) v[index_.at(w)] = c;
  return v;
}

FreePoly NormalFormEngine::from_coords(const Vector& v) const {
  FreePoly p(pres_.ring);
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(v[i], normal_[i]);
  return p;
}

std::string NormalFormEngine::word_label(const Word& w) const { return join_word(w, pres_.generators); }

NormalFormEngine complete(const NCPresentation& pres) {
  if (!pres.ring.is_field()) throw PreconditionError("presentations need field scalars, got " + pres.ring.name());
  if (pres.deg_cap < 1) throw PreconditionError("degree cap must be at least 1");
  std::size_t cap = pres.deg_cap;
  std::size_t gens = pres.generators.size();
  for (const auto& r : pres.relations) {
    if (!(r.ring() == pres.ring)) throw PreconditionError("relation over a different scalar ring");
    for (const auto& [w, c] : r.terms()) {
      for (auto letter : w) {
        if (letter >= gens) throw PreconditionError("relation uses an undeclared generator");
      }
    }
  }

  std::vector<FreePoly> rules;
  std::deque<FreePoly> queue(pres.relations.begin(), pres.relations.end());
  while (true) {
    while (!queue.empty()) {
      FreePoly p = reduce(queue.front(), rules, cap);
      queue.pop_front();
      if (p.is_zero()) continue;
      p = monic(p);
      // Rules whose leading word is now reducible go back to the queue.
      std::vector<FreePoly> kept;
      for (auto& g : rules) {
        if (find_subword(g.leading_word(), p.leading_word()) >= 0) {
          queue.push_back(std::move(g));
        } else {
          kept.push_back(std::move(g));
        }
      }
      rules = std::move(kept);
      for (auto& o : obligations(p, rules, gens, cap)) queue.push_back(std::move(o));
      rules.push_back(std::move(p));
    }
    // Recheck every obligation against the final rule set.
    for (const auto& g : rules) {
      for (auto& o : obligations(g, rules, gens, cap)) {
        if (!reduce(o, rules, cap).is_zero()) queue.push_back(std::move(o));
      }
    }
    if (queue.empty()) break;
  }

  // Interreduce tails so the rule set is canonical.
  std::sort(rules.begin(), rules.end(),
            [](const FreePoly& a, const FreePoly& b) { return deglex_less(a.leading_word(), b.leading_word()); });
  for (std::size_t i = 0; i < rules.size(); ++i) {
    FreePoly lead = FreePoly::term(pres.ring.one(), rules[i].leading_word());
    std::vector<FreePoly> others;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (j != i) others.push_back(rules[j]);
    }
    rules[i] = lead + reduce(rules[i] - lead, others, cap);
  }

  NormalFormEngine e;
  e.pres_ = pres;
  e.rules_ = std::move(rules);
  for (std::size_t len = 0; len < cap; ++len) {
    words_of_length(gens, len, [&](const Word& w) {
      bool reducible = std::any_of(e.rules_.begin(), e.rules_.end(),
                                   [&](const FreePoly& g) { return find_subword(w, g.leading_word()) >= 0; });
      if (!reducible) e.normal_.push_back(w);
    });
    if (gens == 0) break;
  }
  if (e.normal_.empty()) throw PreconditionError("presentation collapses to the zero algebra");
  for (std::size_t i = 0; i < e.normal_.size(); ++i) e.index_[e.normal_[i]] = i;
  return e;
}

Algebra to_algebra(const NormalFormEngine& engine) {
  const auto& ring = engine.presentation().ring;
  const auto& words = engine.normal_words();
  std::size_t n = words.size();
  StructureConstants table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Word w = words[i];
      w.insert(w.end(), words[j].begin(), words[j].end());
      table[i][j] = engine.coords(FreePoly::term(ring.one(), w));
    }
  }
  std::vector<std::string> labels;
  for (const auto& w : words) labels.push_back(engine.word_label(w));
  return make_algebra(ring, std::move(labels), std::move(table), engine.coords(FreePoly::constant(ring.one())));
}

Element evaluate(const FreePoly& p, const std::vector<Element>& images, const Algebra& target) {
  Element out = target.zero();
  for (const auto& [w, c] : p.terms()) {
    Element prod = target.one();
    for (auto letter : w) prod = prod * images.at(letter);
    out += target.ring().reduce_into(c) * prod;
  }
  return out;
}

AlgebraMap eval_map(const NormalFormEngine& engine, const Algebra& source, const std::vector<Element>& images,
                    const Algebra& target) {
  const auto& pres = engine.presentation();
  if (images.size() != pres.generators.size()) throw PreconditionError("one image per generator required");
  for (const auto& im : images) require_same_algebra(target, im.algebra());
  if (source.dimension() != engine.dimension()) throw PreconditionError("source algebra does not match the engine");
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    Element v = evaluate(pres.relations[r], images, target);
    if (!v.is_zero()) {
      throw PreconditionError("relation " + std::to_string(r) + " (" + pres.relations[r].to_string(pres.generators) +
                              ") maps to " + v.to_string());
    }
  }
  std::string bad;
  words_of_length(pres.generators.size(), pres.deg_cap, [&](const Word& w) {
    if (!bad.empty()) return;
    Element v = evaluate(FreePoly::term(pres.ring.one(), w), images, target);
    if (!v.is_zero()) bad = engine.word_label(w) + " maps to " + v.to_string();
  });
  if (!bad.empty()) throw PreconditionError("degree-cap word " + bad);
  std::vector<Vector> cols;
  for (const auto& w : engine.normal_words()) {
    cols.push_back(evaluate(FreePoly::term(pres.ring.one(), w), images, target).coords());
  }
  AlgebraMap m(source, target, Matrix::from_columns(target.ring(), target.dimension(), cols));
  auto check = check_ring_map(m);
  if (!check.ok) throw PreconditionError("induced map is not a ring map: " + check.reason);
  return m;
}

PairMorphism eval_morphism(const NormalFormEngine& engine, const Pair& source, const std::vector<Element>& images,
                           const Pair& target) {
  PairMorphism m(source, target, eval_map(engine, source.algebra(), images, target.algebra()));
  auto check = validate_morphism(m);
  if (!check.ok) throw PreconditionError("induced map is not a morphism of pairs: " + check.reason);
  return m;
}

}  // namespace nchensel
