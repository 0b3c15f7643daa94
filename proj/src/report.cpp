#include <optional>
#include "nchensel/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <functional>

#include "nchensel/errors.hpp"

namespace nchensel::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string render_report(const Json& body, double elapsed_ms) {
  Json full = body;
  full["timing"] = Json{{"elapsed_ms", elapsed_ms}};
  return full.dump(2) + "\n";
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  return out;
}

namespace {

class Checker {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), pass, pass ? std::string() : std::move(detail)});
  }
  // Runs fn; any exception counts as a failed check with its message.
  void run(const std::string& name, const std::function<std::string()>& fn) {
    try {
      std::string why = fn();
      add(name, why.empty(), why);
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string expect(bool ok, const std::string& why) { return ok ? std::string() : why; }

Json flags_of(const Filtration& f) {
  return Json{{"f_commutative", to_string(f.f_commutative)},
              {"products_condition", to_string(f.products_condition)},
              {"squares_condition", to_string(f.squares_condition)}};
}

Json module_json(const RowModule& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) {
    Json row = Json::array();
    for (const auto& s : r) row.push_back(write_scalar(s));
    rows.push_back(row);
  }
  return rows;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

void check_lift(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  Filtration filt = build_filtration(st, s.doc.value("filtration", Json()));
  if (has(c, "hypotheses")) {
    ck.run("hypothesis flags", [&] {
      Filtration checked = with_checked_hypotheses(filt);
      return expect(flags_of(checked) == c.at("hypotheses"), "reported flags differ from the recomputed ones");
    });
  }
  if (!has(c, "f")) return;
  Quotient q = quotient_algebra(filt.level(1));
  Poly f = read_poly(st.algebra, c.at("f"));
  Poly r1 = read_poly(q.algebra, c.at("residue_f1"));
  Poly r2 = read_poly(q.algebra, c.at("residue_f2"));
  ck.run("input F", [&] { return expect(f == scenario_f(s, st.algebra, q), "F differs from the scenario"); });
  ck.run("input residues", [&] {
    return expect(r1 == read_poly(q.algebra, s.doc.at("f1")) && r2 == read_poly(q.algebra, s.doc.at("f2")),
                  "residue factors differ from the scenario");
  });
  if (!has(c, "f1")) return;
  Poly f1 = read_poly(st.algebra, c.at("f1"));
  Poly f2 = read_poly(st.algebra, c.at("f2"));
  ck.run("F = F1 F2", [&] { return expect(f1 * f2 == f, "F1 F2 - F = " + (f1 * f2 - f).to_string()); });
  ck.run("factors monic of residue degree", [&] {
    return expect(f1.is_monic() && f2.is_monic() && f1.degree() == r1.degree() && f2.degree() == r2.degree(),
                  "factor degrees or leading coefficients wrong");
  });
  ck.run("residues of F1, F2", [&] {
    return expect(residue_poly(f1, q) == r1 && residue_poly(f2, q) == r2, "factor residues differ from f1, f2");
  });
  ck.run("Bezout identity over A", [&] {
    const Json& b = c.at("bezout");
    Side side = b.at("side") == "right" ? Side::right : Side::left;
    Side want = s.task == "right-lift" || s.doc.value("side", std::string("left")) == "right" ? Side::right
                                                                                                : Side::left;
    BezoutCertificate cert{f1, f2, read_poly(st.algebra, b.at("g1")), read_poly(st.algebra, b.at("g2")), side};
    if (side != want) return std::string("certificate has the wrong side");
    return expect(cert.holds(), std::string(to_string(side)) + " Bezout combination is not 1");
  });
  ck.run("defect trace", [&] {
    const Json& levels = c.at("levels");
    if (levels.size() != filt.length()) return std::string("trace length differs from the filtration length");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const Json& l = levels[i];
      std::size_t lvl = l.at("level").get<std::size_t>();
      if (lvl != i + 1) return "level " + std::to_string(i + 1) + " is labelled " + std::to_string(lvl);
      Poly a = read_poly(st.algebra, l.at("f1"));
      Poly b = read_poly(st.algebra, l.at("f2"));
      Poly d = read_poly(st.algebra, l.at("defect"));
      if (!(d == f - a * b)) return "defect at level " + std::to_string(lvl) + " is not F - F1 F2";
      if (!l.at("in_level").get<bool>() || !poly_in_ideal(d, filt.level(lvl))) {
        return "defect at level " + std::to_string(lvl) + " is not in I_" + std::to_string(lvl) + "[x]";
      }
      if (!(residue_poly(a, q) == r1) || !(residue_poly(b, q) == r2)) {
        return "level " + std::to_string(lvl) + " factors leave the residue class";
      }
    }
    const Json& last = levels.back();
    if (!(read_poly(st.algebra, last.at("f1")) == f1) || !(read_poly(st.algebra, last.at("f2")) == f2)) {
      return std::string("last traced factors differ from the result");
    }
    return std::string();
  });
}

void check_verify(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  ck.run("verdict", [&] {
    Quotient q = quotient_algebra(st.ideal);
    auto r = verify_factorization(read_poly(st.algebra, s.doc.at("f")), read_poly(st.algebra, s.doc.at("factor1")),
                                  read_poly(st.algebra, s.doc.at("factor2")), read_poly(q.algebra, s.doc.at("f1")),
                                  read_poly(q.algebra, s.doc.at("f2")), q);
    return expect(c.at("valid").get<bool>() == r.ok, "reported verdict differs: " + r.reason);
  });
}

void check_brute_force(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "solutions")) return;
  Poly f = read_poly(st.algebra, c.at("f"));
  ck.run("input F", [&] { return expect(f == read_poly(st.algebra, s.doc.at("f")), "F differs from the scenario"); });
  std::optional<Quotient> q;
  if (s.doc.contains("f1")) q = quotient_algebra(st.ideal);
  auto d1 = c.at("degrees")[0].get<long>(), d2 = c.at("degrees")[1].get<long>();
  ck.run("every solution multiplies to F", [&] {
    for (std::size_t i = 0; i < c.at("solutions").size(); ++i) {
      const Json& sol = c.at("solutions")[i];
      Poly a = read_poly(st.algebra, sol.at("f1"));
      Poly b = read_poly(st.algebra, sol.at("f2"));
      if (!(a * b == f)) return "solution " + std::to_string(i) + ": F1 F2 != F";
      if (!a.is_monic() || !b.is_monic() || a.degree() != d1 || b.degree() != d2) {
        return "solution " + std::to_string(i) + ": wrong degree or not monic";
      }
      if (q && (!(residue_poly(a, *q) == read_poly(q->algebra, s.doc.at("f1"))) ||
                !(residue_poly(b, *q) == read_poly(q->algebra, s.doc.at("f2"))))) {
        return "solution " + std::to_string(i) + ": residues differ from the constraint";
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (sol == c.at("solutions")[j]) return "solution " + std::to_string(i) + " repeats " + std::to_string(j);
      }
    }
    return std::string();
  });
  ck.run("count", [&] {
    return expect(c.at("count").get<std::size_t>() == c.at("solutions").size(), "count differs from the list");
  });
}

void check_pair(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "commutator_chain")) return;
  ck.run("commutator chain", [&] {
    // Rebuilt by saturating the commutators [e_i, x] level by level.
    const Algebra& a = st.algebra;
    Ideal cur = st.ideal;
    std::vector<Json> chain{module_json(cur.module())};
    while (true) {
      std::vector<Element> gens;
      for (const auto& x : cur.basis()) {
        for (std::size_t i = 0; i < a.dimension(); ++i) gens.push_back(commutator(a.basis(i), x));
      }
      Ideal next = ideal_closure(a, std::move(gens));
      if (next == cur) break;
      chain.push_back(module_json(next.module()));
      cur = next;
    }
    if (Json(chain) != c.at("commutator_chain")) return std::string("reported chain differs from the recomputed one");
    return expect(c.at("perfect").get<bool>() == cur.is_zero(), "perfect flag differs from the stable term");
  });
  if (!has(c, "hypotheses")) return;
  Filtration filt = build_filtration(st, s.doc.value("filtration", Json()));
  ck.run("filtration", [&] {
    Json chain = Json::array();
    for (const auto& i : filt.chain()) chain.push_back(module_json(i.module()));
    return expect(chain == c.at("filtration"), "reported filtration differs");
  });
  ck.run("hypothesis flags", [&] {
    return expect(write_hypotheses(check_filtration_hypotheses(filt)) == c.at("hypotheses"),
                  "reported hypothesis checks differ from the recomputed ones");
  });
  std::uint64_t cap = s.cap.value_or(default_enumeration_cap);
  ck.run("jacobson verdict", [&] {
    return expect(c.at("jacobson").at("decision") == to_string(is_jacobson(Pair(st.ideal), cap).decision),
                  "Jacobson verdict differs");
  });
  ck.run("local verdict", [&] {
    return expect(c.at("local").at("decision") == to_string(is_local_pair(Pair(st.ideal), cap).decision),
                  "local verdict differs");
  });
}

void check_bezout(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "bezout")) return;
  ck.run("Bezout identity", [&] {
    Algebra a = st.algebra;
    if (s.doc.value("over", std::string("algebra")) == "quotient") a = quotient_algebra(st.ideal).algebra;
    const Json& b = c.at("bezout");
    Side side = b.at("side") == "right" ? Side::right : Side::left;
    if (side != (s.doc.value("side", std::string("left")) == "right" ? Side::right : Side::left)) {
      return std::string("certificate has the wrong side");
    }
    BezoutCertificate cert{read_poly(a, s.doc.at("f1")), read_poly(a, s.doc.at("f2")), read_poly(a, b.at("g1")),
                           read_poly(a, b.at("g2")), side};
    return expect(cert.holds(), std::string(to_string(side)) + " Bezout combination is not 1");
  });
}

void check_divide(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "quotient")) return;
  Poly g = read_poly(st.algebra, s.doc.at("g"));
  Poly f = read_poly(st.algebra, s.doc.at("f"));
  Poly q = read_poly(st.algebra, c.at("quotient"));
  Poly r = read_poly(st.algebra, c.at("remainder"));
  ck.run("G = Q F + R", [&] { return expect(q * f + r == g, "Q F + R differs from G"); });
  ck.run("deg R < deg F", [&] { return expect(r.degree() < f.degree(), "remainder degree too large"); });
  if (s.doc.value("in_ideal", false)) {
    ck.run("Q, R in I[x]", [&] {
      return expect(poly_in_ideal(q, st.ideal) && poly_in_ideal(r, st.ideal), "quotient or remainder leaves I[x]");
    });
  }
}

Poly base_poly(const PresentedPair& p, const Json& j) { return read_poly(p.residue, j); }

void check_lf(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "lifted1") || !st.presented) return;
  const PresentedPair& src = *st.presented;
  Algebra target = read_algebra(c.at("target").at("algebra"));
  AlgebraMap phi(src.algebra, target, read_matrix(target.ring(), c.at("phi")));
  AlgebraMap aug(target, src.residue, read_matrix(target.ring(), c.at("target").at("augmentation")));
  Ideal j = ideal_from_closed_module(target, kernel(aug.matrix()));
  Poly f = read_poly(src.algebra, c.at("f"));
  Poly l1 = read_poly(target, c.at("lifted1"));
  Poly l2 = read_poly(target, c.at("lifted2"));
  ck.run("input F", [&] { return expect(f == read_poly(src.algebra, s.doc.at("f")), "F differs from the scenario"); });
  ck.run("target presentation", [&] {
    // The presentation is descriptive; it is rebuilt from the inputs and compared.
    unsigned cap = static_cast<unsigned>(s.cap.value_or(4));
    LFExtension ext = build_lf_extension(src, f, base_poly(src, s.doc.at("f1")), base_poly(src, s.doc.at("f2")), cap);
    return expect(write_presentation(ext.target.engine.presentation()) == c.at("target").at("presentation"),
                  "reported presentation differs from the rebuilt one");
  });
  ck.run("augmentation is a ring map", [&] {
    auto m = check_ring_map(aug);
    return m.reason.empty() && m.ok ? std::string() : m.reason;
  });
  ck.run("Phi is a morphism of pairs", [&] {
    auto m = validate_morphism(PairMorphism(src.pair, Pair(j), phi));
    return m.ok ? std::string() : m.reason;
  });
  ck.run("Phi(F) = F1 F2", [&] { return expect(map_poly(f, phi) == l1 * l2, "Φ(F) differs from F1 F2"); });
  ck.run("residues of F1, F2", [&] {
    return expect(map_poly(l1, aug) == base_poly(src, s.doc.at("f1")) &&
                      map_poly(l2, aug) == base_poly(src, s.doc.at("f2")),
                  "adjoined factors have the wrong residues");
  });
  ck.run("local verdict", [&] {
    return expect(c.at("local").at("decision") == to_string(is_local_pair(Pair(j)).decision), "local verdict differs");
  });
  if (!has(c, "universal")) return;
  const Json& u = c.at("universal");
  AlgebraMap psi(target, src.algebra, read_matrix(src.algebra.ring(), u.at("psi")));
  ck.run("psi is a morphism of pairs", [&] {
    auto m = validate_morphism(PairMorphism(Pair(j), src.pair, psi));
    return m.ok ? std::string() : m.reason;
  });
  ck.run("psi Phi = phi", [&] {
    return expect(compose(psi, phi).matrix() == Matrix::identity(src.algebra.ring(), src.algebra.dimension()),
                  "ψ ∘ Φ is not the identity");
  });
  ck.run("psi(F1), psi(F2) = G1, G2", [&] {
    Poly g1 = read_poly(src.algebra, u.at("g1"));
    Poly g2 = read_poly(src.algebra, u.at("g2"));
    bool in = g1 == read_poly(src.algebra, s.doc.at("universal").at("g1")) &&
              g2 == read_poly(src.algebra, s.doc.at("universal").at("g2"));
    return expect(in && map_poly(l1, psi) == g1 && map_poly(l2, psi) == g2, "ψ does not send the factors to G1, G2");
  });
}

void check_abelian(const Json& c, const Scenario& s, const Setting& st, Checker& ck) {
  if (!has(c, "hensel") || !st.presented) return;
  const PresentedPair& src = *st.presented;
  Poly f = read_poly(src.algebra, c.at("f"));
  Poly h1 = read_poly(src.algebra, c.at("hensel").at("f1"));
  Poly h2 = read_poly(src.algebra, c.at("hensel").at("f2"));
  ck.run("input F", [&] { return expect(f == read_poly(src.algebra, s.doc.at("f")), "F differs from the scenario"); });
  ck.run("Hensel factors multiply to F", [&] { return expect(h1 * h2 == f, "H1 H2 differs from F"); });
  ck.run("Hensel residues", [&] {
    return expect(map_poly(h1, src.augmentation) == base_poly(src, s.doc.at("f1")) &&
                      map_poly(h2, src.augmentation) == base_poly(src, s.doc.at("f2")),
                  "Hensel factors have the wrong residues");
  });
  if (!has(c, "abelian")) return;
  const Json& ab = c.at("abelian");
  Algebra a = read_algebra(ab.at("algebra"));
  AlgebraMap to_src(a, src.algebra, read_matrix(src.algebra.ring(), ab.at("to_source")));
  Poly a1 = read_poly(a, ab.at("f1"));
  Poly a2 = read_poly(a, ab.at("f2"));
  ck.run("abelianized algebra is commutative", [&] {
    if (!(a.ring() == src.algebra.ring())) return std::string("scalars differ from the source");
    if (c.at("abelian_dimension") != a.dimension()) return std::string("reported dimension differs");
    return expect(a.is_commutative(), "not commutative");
  });
  ck.run("map to the source is a ring map", [&] {
    auto m = check_ring_map(to_src);
    return m.ok ? std::string() : m.reason;
  });
  ck.run("abelianized factors land on the Hensel factors", [&] {
    bool agree = map_poly(a1, to_src) == h1 && map_poly(a2, to_src) == h2;
    if (c.at("agree").get<bool>() != agree) return std::string("reported agreement differs");
    return expect(agree, "abelianized factors differ from the Hensel factors");
  });
}

}  // namespace

std::vector<Check> recheck_certificates(const Json& report, const Scenario& s) {
  Checker ck;
  ck.add("scenario hash", report.value("scenario_sha256", std::string()) == sha256_hex(s.text),
         "report was produced from a different scenario");
  ck.add("task", report.value("task", std::string()) == s.task, "report task differs from the scenario");
  Setting st = build_setting(s);
  ck.add("algebra", report.value("algebra", Json()) == write_algebra(st.algebra),
         "reported structure constants differ from the instance");
  const Json& c = report.contains("certificates") ? report.at("certificates") : Json::object();
  try {
    if (s.task == "lift" || s.task == "right-lift") {
      check_lift(c, s, st, ck);
    } else if (s.task == "verify") {
      check_verify(c, s, st, ck);
    } else if (s.task == "brute-force") {
      check_brute_force(c, s, st, ck);
    } else if (s.task == "check-pair" || s.task == "commutator-filtration") {
      check_pair(c, s, st, ck);
    } else if (s.task == "bezout") {
      check_bezout(c, s, st, ck);
    } else if (s.task == "divide") {
      check_divide(c, s, st, ck);
    } else if (s.task == "lf-extend") {
      check_lf(c, s, st, ck);
    } else {
      check_abelian(c, s, st, ck);
    }
  } catch (const std::exception& e) {
    ck.add("certificates readable", false, e.what());
  }
  return ck.take();
}

// Which outcome the certificates support: success, not success, or undetermined.
namespace {

std::optional<bool> certified_success(const Json& c, const Scenario& s) {
  auto has_key = [&](const char* k) { return c.contains(k); };
  if (s.task == "lift" || s.task == "right-lift") return has_key("levels");
  if (s.task == "verify") return has_key("valid") && c.at("valid").is_boolean() && c.at("valid").get<bool>();
  if (s.task == "brute-force") {
    if (!has_key("count")) return false;
    if (!s.doc.contains("f1")) return true;
    return c.at("count") == 1;
  }
  if (s.task == "commutator-filtration") return has_key("perfect");
  if (s.task == "check-pair") return has_key("local");
  if (s.task == "bezout") return has_key("bezout");
  if (s.task == "divide") return has_key("remainder");
  if (s.task == "lf-extend") {
    if (!has_key("local")) return false;
    if (!s.doc.contains("universal")) return true;
    // A universal map that misses φ is written before the refusal.
    if (!has_key("universal")) return false;
    return std::nullopt;
  }
  return has_key("agree") && c.at("agree").is_boolean() && c.at("agree").get<bool>();
}

}  // namespace

VerifyResult verify_report(const Json& report, const Scenario& given) {
  VerifyResult out;
  // Seed and cap may have been overridden on the command line.
  Scenario scenario = given;
  if (report.contains("seed") && report.at("seed").is_number_unsigned()) scenario.seed = report.at("seed");
  if (report.contains("cap")) {
    if (report.at("cap").is_null()) {
      scenario.cap.reset();
    } else if (report.at("cap").is_number_unsigned()) {
      scenario.cap = report.at("cap").get<std::uint64_t>();
    }
  }
  std::vector<Check> checks = recheck_certificates(report, scenario);
  out.checks = checks.size();
  for (const auto& c : checks) {
    if (!c.pass) out.failures.push_back(c.name + ": " + c.detail);
  }
  if (report.contains("assertions") && !report.at("assertions").empty() &&
      report.at("assertions") != checks_to_json(checks)) {
    out.failures.push_back("assertions: reported pass/fail ledger differs from the recomputed one");
  }
  std::string outcome = report.value("outcome", std::string());
  if (outcome != "success" && outcome != "negative" && outcome != "inconclusive") {
    out.failures.push_back("outcome: unknown value \"" + outcome + "\"");
  } else if (report.contains("certificates") && report.at("certificates").is_object()) {
    auto want = certified_success(report.at("certificates"), scenario);
    if (want && *want != (outcome == "success")) {
      out.failures.push_back("outcome: \"" + outcome + "\" contradicts the certificates");
    }
  }
  out.ok = out.failures.empty();
  return out;
}

}  // namespace nchensel::cli
