#pragma once

// Finitely presented algebras over a field, truncated at a degree cap, with a
// bounded Buchberger-Mora completion in the free algebra (deglex order).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nchensel/algebra.hpp"
#include "nchensel/pair.hpp"

namespace nchensel {

using Word = std::vector<std::uint32_t>;

/// Degree first, then lexicographic on generator indices.
bool deglex_less(const Word& a, const Word& b);

struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

/// Element of the free algebra; terms kept in decreasing deglex order, so the
/// first term is the leading one.
class FreePoly {
 public:
  explicit FreePoly(ScalarRing ring) : ring_(std::move(ring)) {}
  static FreePoly term(const Scalar& c, Word w);
  static FreePoly constant(const Scalar& c) { return term(c, {}); }
  static FreePoly generator(const ScalarRing& ring, std::uint32_t g) { return term(ring.one(), {g}); }

  const ScalarRing& ring() const { return ring_; }
  const std::map<Word, Scalar, DeglexGreater>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Word& leading_word() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }
  std::size_t degree() const;

  void add_term(const Scalar& c, const Word& w);
  FreePoly operator-() const;
  friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const Scalar& c, const FreePoly& a);
  bool operator==(const FreePoly& other) const { return ring_ == other.ring_ && terms_ == other.terms_; }

  /// Drops every term of length >= cap.
  FreePoly truncated(std::size_t cap) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  ScalarRing ring_;
  std::map<Word, Scalar, DeglexGreater> terms_;
};

struct NCPresentation {
  ScalarRing ring;
  std::vector<std::string> generators;
  std::vector<FreePoly> relations;
  /// Every word of length >= deg_cap is imposed as an extra relation.
  unsigned deg_cap = 4;
};

class NormalFormEngine {
 public:
  const NCPresentation& presentation() const { return pres_; }
  /// Monic reduced rules; each rewrites its leading word to minus the rest.
  const std::vector<FreePoly>& rules() const { return rules_; }
  /// Irreducible words below the cap, in increasing deglex order.
  const std::vector<Word>& normal_words() const { return normal_; }
  std::size_t dimension() const { return normal_.size(); }

  FreePoly normal_form(const FreePoly& p) const;
  /// Coordinates of nf(p) on the normal words.
  Vector coords(const FreePoly& p) const;
  FreePoly from_coords(const Vector& v) const;
  std::string word_label(const Word& w) const;

 private:
  friend NormalFormEngine complete(const NCPresentation& pres);
  NCPresentation pres_;
  std::vector<FreePoly> rules_;
  std::vector<Word> normal_;
  std::map<Word, std::size_t> index_;
};

/// Throws PreconditionError for non-field scalars.
NormalFormEngine complete(const NCPresentation& pres);
/// Structure constants on the normal words; validated by make_algebra.
Algebra to_algebra(const NormalFormEngine& engine);

/// Image of a free polynomial under generator images.
Element evaluate(const FreePoly& p, const std::vector<Element>& images, const Algebra& target);

/// Ring map from to_algebra(engine) sending generator i to images[i].
/// Throws PreconditionError naming the first relation or cap word whose image
/// is nonzero.
AlgebraMap eval_map(const NormalFormEngine& engine, const Algebra& source, const std::vector<Element>& images,
                    const Algebra& target);

/// The same map packaged as a morphism of pairs, validated.
PairMorphism eval_morphism(const NormalFormEngine& engine, const Pair& source, const std::vector<Element>& images,
                           const Pair& target);

}  // namespace nchensel
