#include "nchensel/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "nchensel/errors.hpp"
#include "nchensel/instances.hpp"
#include "nchensel/report.hpp"

namespace nchensel::cli {

const std::vector<std::string> task_names = {
    "lift",   "right-lift", "verify",    "brute-force", "check-pair",        "commutator-filtration",
    "bezout", "divide",     "lf-extend", "abelianize-compare"};

namespace {

[[noreturn]] void bad(const std::string& what) { throw ScenarioError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t read_uint(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

ScalarRing read_ring(const Json& j) {
  try {
    if (j.is_string() && j.get<std::string>() == "QQ") return ScalarRing::rationals();
    if (!j.is_object()) bad("ring must be \"QQ\" or {\"p\": .., \"k\": ..}");
    std::uint64_t p = read_uint(j, "p");
    unsigned k = j.contains("k") ? static_cast<unsigned>(read_uint(j, "k")) : 1;
    return ScalarRing::prime_power(p, k);
  } catch (const ScalarError& e) {
    bad(std::string("bad ring: ") + e.what());
  }
}

// A word is an array of generator names, or a string of one-letter names.
Word read_word(const Json& j, const std::vector<std::string>& names) {
  auto index = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) bad("unknown generator \"" + n + "\"");
    return static_cast<std::uint32_t>(it - names.begin());
  };
  Word w;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "1") return w;
    for (char c : s) w.push_back(index(std::string(1, c)));
  } else if (j.is_array()) {
    for (const auto& n : j) {
      if (!n.is_string()) bad("word letters must be strings");
      w.push_back(index(n.get<std::string>()));
    }
  } else {
    bad("word must be a string or an array of names");
  }
  return w;
}

FreePoly read_free_poly(const ScalarRing& ring, const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) bad("relation must be an array of [coefficient, word] terms");
  FreePoly p(ring);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("relation term must be [coefficient, word]");
    p.add_term(read_scalar(ring, t[0]), read_word(t[1], names));
  }
  return p;
}

Instance table_instance(const Json& j) {
  Json alg = j;
  alg["ring"] = j.at("ring");
  Algebra a = read_algebra(alg);
  return Instance{"table", a, zero_ideal(a), {}};
}

std::vector<unsigned> word_degrees(const NormalFormEngine& e) {
  std::vector<unsigned> d;
  for (const auto& w : e.normal_words()) d.push_back(static_cast<unsigned>(w.size()));
  return d;
}

bool needs_presentation(const std::string& task) { return task == "lf-extend" || task == "abelianize-compare"; }

Json write_decision(const DecisionReport& d) { return Json{{"decision", to_string(d.decision)}, {"reason", d.reason}}; }

Json write_module(const RowModule& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) {
    Json row = Json::array();
    for (const auto& s : r) row.push_back(write_scalar(s));
    rows.push_back(row);
  }
  return rows;
}

Json write_filtration(const Filtration& f) {
  Json chain = Json::array();
  for (const auto& i : f.chain()) chain.push_back(write_module(i.module()));
  return chain;
}

Json write_levels(const std::vector<LiftLevel>& levels) {
  Json out = Json::array();
  for (const auto& l : levels) {
    out.push_back(Json{{"level", l.level},
                       {"f1", write_poly(l.f1)},
                       {"f2", write_poly(l.f2)},
                       {"defect", write_poly(l.defect)},
                       {"in_level", l.in_level}});
  }
  return out;
}

Json write_certificate(const BezoutCertificate& c) {
  return Json{{"side", to_string(c.side)}, {"g1", write_poly(c.g1)}, {"g2", write_poly(c.g2)}};
}

Side read_side(const Json& doc, const std::string& task) {
  if (task == "right-lift") return Side::right;
  if (!doc.contains("side")) return Side::left;
  std::string s = doc.at("side").get<std::string>();
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  bad("side must be \"left\" or \"right\"");
}

struct Outcome {
  ExitCode exit = ExitCode::success;
  std::string reason;
};

const char* outcome_name(ExitCode e) {
  switch (e) {
    case ExitCode::success: return "success";
    case ExitCode::negative: return "negative";
    case ExitCode::inconclusive: return "inconclusive";
    case ExitCode::input_error: return "input-error";
  }
  return "?";
}

// Mathematical failures are reported in-band; input errors propagate.
template <class Fn>
Outcome guarded(Fn&& fn) {
  try {
    fn();
    return {};
  } catch (const CapExceeded& e) {
    return {ExitCode::inconclusive, e.what()};
  } catch (const PreconditionError& e) {
    return {ExitCode::negative, e.what()};
  } catch (const ContainmentFailure& e) {
    return {ExitCode::negative, e.what()};
  }
}

Outcome run_lift(const Scenario& s, const Setting& st, Json& cert) {
  return guarded([&] {
    Filtration filt = with_checked_hypotheses(build_filtration(st, s.doc.value("filtration", Json())));
    cert["hypotheses"] = write_flags(filt.f_commutative, filt.products_condition, filt.squares_condition);
    Quotient q = quotient_algebra(filt.level(1));
    Poly r1 = read_poly(q.algebra, field(s.doc, "f1"));
    Poly r2 = read_poly(q.algebra, field(s.doc, "f2"));
    Poly f = scenario_f(s, st.algebra, q);
    cert["f"] = write_poly(f);
    cert["residue_f1"] = write_poly(r1);
    cert["residue_f2"] = write_poly(r2);
    auto prob = make_lift_problem(filt, f, r1, r2, read_side(s.doc, s.task), s.cap);
    LiftResult res = hensel_lift(prob);
    cert["f1"] = write_poly(res.f1);
    cert["f2"] = write_poly(res.f2);
    cert["bezout"] = write_certificate(res.certificate);
    cert["levels"] = write_levels(res.levels);
  });
}

Outcome run_verify(const Scenario& s, const Setting& st, Json& cert) {
  Quotient q = quotient_algebra(st.ideal);
  Poly f = read_poly(st.algebra, field(s.doc, "f"));
  Poly f1 = read_poly(st.algebra, field(s.doc, "factor1"));
  Poly f2 = read_poly(st.algebra, field(s.doc, "factor2"));
  Poly r1 = read_poly(q.algebra, field(s.doc, "f1"));
  Poly r2 = read_poly(q.algebra, field(s.doc, "f2"));
  auto check = verify_factorization(f, f1, f2, r1, r2, q);
  cert["valid"] = check.ok;
  cert["reason"] = check.reason;
  if (check.ok) return {};
  return {ExitCode::negative, check.reason};
}

Outcome run_brute_force(const Scenario& s, const Setting& st, Json& cert) {
  return guarded([&] {
    Poly f = read_poly(st.algebra, field(s.doc, "f"));
    std::optional<Quotient> q;
    std::optional<ResidueConstraint> rc;
    std::size_t d1 = 0, d2 = 0;
    if (s.doc.contains("f1")) {
      q = quotient_algebra(st.ideal);
      rc = ResidueConstraint{&*q, read_poly(q->algebra, s.doc.at("f1")), read_poly(q->algebra, s.doc.at("f2"))};
      d1 = static_cast<std::size_t>(rc->f1.degree());
      d2 = static_cast<std::size_t>(rc->f2.degree());
    } else {
      d1 = read_uint(s.doc, "d1");
      d2 = read_uint(s.doc, "d2");
    }
    auto sols = brute_force_factorizations(st.algebra, f, d1, d2, rc ? &*rc : nullptr,
                                           s.cap.value_or(default_brute_force_cap));
    Json list = Json::array();
    for (const auto& [a, b] : sols) list.push_back(Json{{"f1", write_poly(a)}, {"f2", write_poly(b)}});
    cert["f"] = write_poly(f);
    cert["degrees"] = Json::array({d1, d2});
    cert["solutions"] = list;
    cert["count"] = sols.size();
    if (rc && sols.size() != 1) throw PreconditionError("expected exactly one factorization per residue split");
  });
}

Outcome run_check_pair(const Scenario& s, const Setting& st, Json& cert) {
  return guarded([&] {
    Pair p(st.ideal);
    auto cf = commutator_filtration(p);
    Json chain = Json::array();
    for (const auto& i : cf.chain) chain.push_back(write_module(i.module()));
    cert["commutator_chain"] = chain;
    cert["perfect"] = cf.perfect;
    if (s.task == "commutator-filtration") return;
    std::uint64_t cap = s.cap.value_or(default_enumeration_cap);
    Filtration filt = build_filtration(st, s.doc.value("filtration", Json()));
    cert["filtration"] = write_filtration(filt);
    cert["hypotheses"] = write_hypotheses(check_filtration_hypotheses(filt));
    cert["jacobson"] = write_decision(is_jacobson(p, cap));
    cert["local"] = write_decision(is_local_pair(p, cap));
  });
}

Outcome run_bezout(const Scenario& s, const Setting& st, Json& cert) {
  return guarded([&] {
    Algebra a = st.algebra;
    if (s.doc.value("over", std::string("algebra")) == "quotient") a = quotient_algebra(st.ideal).algebra;
    Poly f1 = read_poly(a, field(s.doc, "f1"));
    Poly f2 = read_poly(a, field(s.doc, "f2"));
    Side side = read_side(s.doc, s.task);
    auto c = bezout_search(f1, f2, side, s.cap);
    if (!c) throw CapExceeded("no Bezout certificate within the degree cap");
    cert["bezout"] = write_certificate(*c);
  });
}

Outcome run_divide(const Scenario& s, const Setting& st, Json& cert) {
  return guarded([&] {
    Poly g = read_poly(st.algebra, field(s.doc, "g"));
    Poly f = read_poly(st.algebra, field(s.doc, "f"));
    bool in_ideal = s.doc.value("in_ideal", false);
    auto d = euclid_divide(g, f, in_ideal ? &st.ideal : nullptr);
    cert["quotient"] = write_poly(d.quotient);
    cert["remainder"] = write_poly(d.remainder);
  });
}

struct LfData {
  PresentedPair src;
  Poly f, r1, r2;
};

LfData read_lf(const Scenario& s, const Setting& st) {
  if (!st.presented) bad("this task needs a presentation or trunc_free instance over a field");
  const PresentedPair& src = *st.presented;
  return LfData{src, read_poly(src.algebra, field(s.doc, "f")), read_poly(src.residue, field(s.doc, "f1")),
                read_poly(src.residue, field(s.doc, "f2"))};
}

Outcome run_lf_extend(const Scenario& s, const Setting& st, Json& cert) {
  LfData d = read_lf(s, st);
  return guarded([&] {
    unsigned cap = static_cast<unsigned>(s.cap.value_or(4));
    LFExtension ext = build_lf_extension(d.src, d.f, d.r1, d.r2, cap);
    const auto& fac = ext.factorizations.front();
    cert["target"] = Json{{"presentation", write_presentation(ext.target.engine.presentation())},
                          {"algebra", write_algebra(ext.target.algebra)},
                          {"augmentation", write_matrix(ext.target.augmentation.matrix())}};
    cert["phi"] = write_matrix(ext.phi.map().matrix());
    cert["f"] = write_poly(d.f);
    cert["lifted1"] = write_poly(fac.lifted1);
    cert["lifted2"] = write_poly(fac.lifted2);
    cert["local"] = write_decision(check_local(ext));
    if (s.doc.contains("universal")) {
      const Json& u = s.doc.at("universal");
      Poly g1 = read_poly(d.src.algebra, field(u, "g1"));
      Poly g2 = read_poly(d.src.algebra, field(u, "g2"));
      PairMorphism id(d.src.pair, d.src.pair, AlgebraMap::identity(d.src.algebra));
      UniversalMap um = universal_map(ext, id, g1, g2);
      cert["universal"] = Json{{"g1", write_poly(g1)},
                               {"g2", write_poly(g2)},
                               {"psi", write_matrix(um.psi.map().matrix())},
                               {"uniqueness", um.uniqueness}};
      if (!um.composition_ok) throw PreconditionError("ψ ∘ Φ differs from φ");
    }
  });
}

Outcome run_abelianize_compare(const Scenario& s, const Setting& st, Json& cert) {
  LfData d = read_lf(s, st);
  return guarded([&] {
    Filtration filt = with_checked_hypotheses(build_filtration(st, s.doc.value("filtration", Json())));
    Quotient q = quotient_algebra(filt.level(1));
    auto prob = make_lift_problem(filt, d.f, read_poly(q.algebra, s.doc.at("f1")), read_poly(q.algebra, s.doc.at("f2")));
    LiftResult lift = hensel_lift(prob);
    LFExtension ext = build_lf_extension(d.src, d.f, d.r1, d.r2, static_cast<unsigned>(s.cap.value_or(4)));
    auto cmp = compare_with_commutative_lift(ext, lift);
    cert["f"] = write_poly(d.f);
    cert["hensel"] = Json{{"f1", write_poly(lift.f1)}, {"f2", write_poly(lift.f2)}};
    cert["abelian_dimension"] = cmp.abelian_dimension;
    cert["agree"] = cmp.ok;
    cert["reason"] = cmp.reason;
    if (cmp.abelian) {
      cert["abelian"] = Json{{"algebra", write_algebra(cmp.abelian->pair.algebra)},
                             {"to_source", write_matrix(cmp.to_source->matrix())},
                             {"f1", write_poly(*cmp.abelian_f1)},
                             {"f2", write_poly(*cmp.abelian_f2)}};
    }
    if (!cmp.ok) throw PreconditionError(cmp.reason);
  });
}

}  // namespace

Json write_flags(Verdict fc, Verdict pc, Verdict sc) {
  return Json{{"f_commutative", to_string(fc)}, {"products_condition", to_string(pc)},
              {"squares_condition", to_string(sc)}};
}

Json write_hypotheses(const HypothesisReport& h) {
  Json levels = Json::array();
  for (const auto& l : h.levels) {
    Json e = write_flags(l.f_commutative, l.products_condition, l.squares_condition);
    e["level"] = l.level;
    if (!l.witness.empty()) e["witness"] = l.witness;
    levels.push_back(e);
  }
  Json out = write_flags(h.f_commutative, h.products_condition, h.squares_condition);
  out["levels"] = levels;
  return out;
}

Json write_presentation(const NCPresentation& p) {
  Json rel = Json::array();
  for (const auto& r : p.relations) rel.push_back(r.to_string(p.generators));
  return Json{{"generators", p.generators}, {"relations", rel}, {"cap", p.deg_cap}};
}

Scalar read_scalar(const ScalarRing& ring, const Json& j) {
  try {
    if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
    if (j.is_string()) return parse_scalar(ring, j.get<std::string>());
  } catch (const ScalarError& e) {
    bad(std::string("bad scalar: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad scalar: ") + e.what());
  }
  bad("scalar must be an integer or a string, got " + j.dump());
}

Element read_element(const Algebra& a, const Json& j) {
  if (!j.is_array() || j.size() != a.dimension()) {
    bad("element must be an array of " + std::to_string(a.dimension()) + " coordinates, got " + j.dump());
  }
  Vector v;
  for (const auto& x : j) v.push_back(read_scalar(a.ring(), x));
  return a.element(std::move(v));
}

Poly read_poly(const Algebra& a, const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficient elements");
  std::vector<Element> c;
  for (const auto& e : j) c.push_back(read_element(a, e));
  return Poly(a, std::move(c));
}

Json write_scalar(const Scalar& s) {
  if (s.ring().is_finite()) return s.residue();
  return s.to_string();
}

Json write_element(const Element& e) {
  Json out = Json::array();
  for (const auto& s : e.coords()) out.push_back(write_scalar(s));
  return out;
}

Json write_poly(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(write_element(c));
  return out;
}

Json write_matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_scalar(m.at(r, c)));
    out.push_back(row);
  }
  return out;
}

Matrix read_matrix(const ScalarRing& ring, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a nonempty array of rows");
  Matrix m(ring, j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) bad("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = read_scalar(ring, j[r][c]);
  }
  return m;
}

Json write_algebra(const Algebra& a) {
  Json ring;
  if (a.ring().is_finite()) {
    ring = Json{{"p", a.ring().prime()}, {"k", a.ring().exponent()}};
  } else {
    ring = "QQ";
  }
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const Vector& v = a.table()[i][j];
      if (is_zero_vector(v)) continue;
      Json coords = Json::array();
      for (const auto& s : v) coords.push_back(write_scalar(s));
      products.push_back(Json{i, j, coords});
    }
  }
  Json unit = Json::array();
  for (const auto& s : a.unit_coords()) unit.push_back(write_scalar(s));
  return Json{{"ring", ring}, {"labels", a.labels()}, {"products", products}, {"unit", unit}};
}

Algebra read_algebra(const Json& j) {
  ScalarRing ring = read_ring(field(j, "ring"));
  const Json& labels = field(j, "labels");
  if (!labels.is_array() || labels.empty()) bad("labels must be a nonempty array");
  std::size_t n = labels.size();
  StructureConstants table(n, std::vector<Vector>(n, zero_vector(ring, n)));
  for (const auto& p : field(j, "products")) {
    if (!p.is_array() || p.size() != 3) bad("product entry must be [i, j, coords]");
    std::size_t a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>();
    if (a >= n || b >= n || !p[2].is_array() || p[2].size() != n) bad("product entry out of range");
    for (std::size_t k = 0; k < n; ++k) table[a][b][k] = read_scalar(ring, p[2][k]);
  }
  Vector unit;
  const Json& u = field(j, "unit");
  if (!u.is_array() || u.size() != n) bad("unit must have one coordinate per label");
  for (const auto& x : u) unit.push_back(read_scalar(ring, x));
  try {
    return make_algebra(ring, labels.get<std::vector<std::string>>(), std::move(table), std::move(unit));
  } catch (const AlgebraError& e) {
    bad(std::string("invalid algebra: ") + e.what());
  }
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  s.text = text;
  try {
    s.doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!s.doc.is_object()) bad("scenario must be a JSON object");
  s.task = s.doc.value("task", std::string());
  if (std::find(task_names.begin(), task_names.end(), s.task) == task_names.end()) {
    bad("unknown or missing task \"" + s.task + "\"");
  }
  if (s.doc.contains("seed")) s.seed = read_uint(s.doc, "seed");
  if (s.doc.contains("cap")) s.cap = read_uint(s.doc, "cap");
  field(s.doc, "instance");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read scenario " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Setting build_setting(const Scenario& s) {
  const Json& spec = field(s.doc, "instance");
  std::string kind = field(spec, "kind").get<std::string>();
  try {
    std::optional<Instance> inst;
    std::optional<PresentedPair> presented;
    if (kind == "zmod") {
      inst = zmod(read_uint(spec, "p"), static_cast<unsigned>(read_uint(spec, "k")));
    } else if (kind == "trunc_free") {
      ScalarRing ring = read_ring(field(spec, "ring"));
      auto g = read_uint(spec, "generators");
      auto cap = static_cast<unsigned>(read_uint(spec, "cap"));
      inst = trunc_free(ring, g, cap);
      if (needs_presentation(s.task)) {
        presented = free_presented_pair(ring, g, cap);
        inst->algebra = presented->algebra;
        inst->ideal = presented->pair.ideal();
      }
    } else if (kind == "scalar_plus_strict_upper") {
      inst = scalar_plus_strict_upper(read_ring(field(spec, "ring")), read_uint(spec, "size"));
    } else if (kind == "upper_triangular") {
      inst = upper_triangular(read_ring(field(spec, "ring")), read_uint(spec, "size"));
    } else if (kind == "diagonal") {
      inst = diagonal(read_ring(field(spec, "ring")), read_uint(spec, "copies"));
    } else if (kind == "table") {
      inst = table_instance(spec);
    } else if (kind == "presentation") {
      ScalarRing ring = read_ring(field(spec, "ring"));
      NCPresentation pres{ring, field(spec, "generators").get<std::vector<std::string>>(), {},
                          static_cast<unsigned>(read_uint(spec, "cap"))};
      for (const auto& r : spec.value("relations", Json::array())) {
        pres.relations.push_back(read_free_poly(ring, r, pres.generators));
      }
      presented = make_presented_pair(std::move(pres));
      inst = Instance{"presentation", presented->algebra, presented->pair.ideal(),
                      word_degrees(presented->engine)};
    } else {
      bad("unknown instance kind \"" + kind + "\"");
    }
    Setting st{inst->algebra, inst->ideal, inst->degrees, std::move(presented)};
    if (s.doc.contains("ideal")) {
      std::vector<Element> gens;
      for (const auto& g : s.doc.at("ideal")) gens.push_back(read_element(st.algebra, g));
      st.ideal = ideal_closure(st.algebra, std::move(gens));
      st.degrees.clear();
    }
    return st;
  } catch (const PreconditionError& e) {
    bad(std::string("cannot build instance: ") + e.what());
  } catch (const ScalarError& e) {
    bad(std::string("cannot build instance: ") + e.what());
  } catch (const Json::exception& e) {
    bad(std::string("malformed instance: ") + e.what());
  }
}

Filtration build_filtration(const Setting& st, const Json& spec) {
  Pair p(st.ideal);
  if (spec.is_null()) return st.degrees.empty() ? adic_filtration(p) : degree_filtration(p, st.degrees);
  if (spec.is_string()) {
    std::string name = spec.get<std::string>();
    if (name == "adic") return adic_filtration(p);
    if (name == "degree") {
      if (st.degrees.empty()) bad("degree filtration needs a graded instance");
      return degree_filtration(p, st.degrees);
    }
    if (name == "commutator") {
      auto cf = commutator_filtration(p);
      if (!cf.filtration) throw PreconditionError("pair is not perfect; commutator filtration does not reach 0");
      return *cf.filtration;
    }
    bad("unknown filtration \"" + name + "\"");
  }
  std::vector<Ideal> chain;
  for (const auto& level : field(spec, "chain")) {
    std::vector<Element> gens;
    for (const auto& g : level) gens.push_back(read_element(st.algebra, g));
    chain.push_back(ideal_closure(st.algebra, std::move(gens)));
  }
  try {
    return Filtration(p, std::move(chain));
  } catch (const PreconditionError& e) {
    bad(std::string("invalid filtration chain: ") + e.what());
  }
}

Poly scenario_f(const Scenario& s, const Algebra& a, const Quotient& q) {
  if (s.doc.contains("f")) return read_poly(a, s.doc.at("f"));
  if (!s.doc.value("random_f", false)) bad("lift needs \"f\" or \"random_f\": true");
  // F = lift(f1) lift(f2) + noise in I_1[x] below the top degree.
  Poly r1 = read_poly(q.algebra, field(s.doc, "f1"));
  Poly r2 = read_poly(q.algebra, field(s.doc, "f2"));
  Poly f = lift_poly(r1, q) * lift_poly(r2, q);
  std::mt19937_64 rng(s.seed);
  const ScalarRing& ring = a.ring();
  auto scalar = [&] {
    if (ring.is_finite()) return ring.from_residue(rng() % ring.modulus());
    return ring.from_int(static_cast<std::int64_t>(rng() % 11) - 5);
  };
  std::vector<Element> noise;
  const auto& rows = q.kernel.rows();
  for (long d = 0; d < f.degree(); ++d) {
    Vector v = zero_vector(ring, a.dimension());
    for (const auto& r : rows) add_scaled(v, scalar(), r);
    noise.push_back(a.element(std::move(v)));
  }
  return f + Poly(a, std::move(noise));
}

Report run_scenario(const Scenario& s) {
  Setting st = build_setting(s);
  Json cert = Json::object();
  Outcome out;
  try {
    if (s.task == "lift" || s.task == "right-lift") {
      out = run_lift(s, st, cert);
    } else if (s.task == "verify") {
      out = run_verify(s, st, cert);
    } else if (s.task == "brute-force") {
      out = run_brute_force(s, st, cert);
    } else if (s.task == "check-pair" || s.task == "commutator-filtration") {
      out = run_check_pair(s, st, cert);
    } else if (s.task == "bezout") {
      out = run_bezout(s, st, cert);
    } else if (s.task == "divide") {
      out = run_divide(s, st, cert);
    } else if (s.task == "lf-extend") {
      out = run_lf_extend(s, st, cert);
    } else {
      out = run_abelianize_compare(s, st, cert);
    }
  } catch (const Json::exception& e) {
    bad(std::string("malformed payload: ") + e.what());
  } catch (const ParentMismatch& e) {
    bad(std::string("payload mixes algebras: ") + e.what());
  }

  Report r;
  r.exit = out.exit;
  r.body = Json{{"task", s.task},
                {"scenario_sha256", sha256_hex(s.text)},
                {"seed", s.seed},
                {"cap", s.cap ? Json(*s.cap) : Json()},
                {"outcome", outcome_name(out.exit)},
                {"reason", out.reason},
                {"algebra", write_algebra(st.algebra)},
                {"ideal", write_module(st.ideal.module())},
                {"certificates", cert},
                {"assertions", Json::array()}};
  r.body["assertions"] = checks_to_json(recheck_certificates(r.body, s));
  VerifyResult v = verify_report(r.body, s);
  if (!v.ok) {
    std::string msg = "report failed its own verification:";
    for (const auto& f : v.failures) msg += "\n  " + f;
    throw std::logic_error(msg);
  }
  return r;
}

}  // namespace nchensel::cli
