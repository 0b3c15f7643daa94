#pragma once

// JSON scenarios for the command-line runner, and the reports they produce.
//
// A scenario names an instance, optionally an ideal and a filtration, and the
// polynomial payloads of one task. Scalars are integers or strings such as
// "-3/4"; elements are coordinate arrays; polynomials are arrays of elements,
// constant term first.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nchensel/hensel.hpp"
#include "nchensel/lf_extension.hpp"

namespace nchensel::cli {

using Json = nlohmann::json;

/// Malformed or inconsistent scenario input (exit status 4).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExitCode : int { success = 0, negative = 2, inconclusive = 3, input_error = 4 };

extern const std::vector<std::string> task_names;

struct Scenario {
  Json doc;
  std::string text;  // raw bytes, hashed into the report
  std::string task;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
};

/// Throws ScenarioError on malformed JSON or an unknown task.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Objects materialized from the instance, ideal and filtration specs.
struct Setting {
  Algebra algebra;
  Ideal ideal;
  std::vector<unsigned> degrees;
  std::optional<PresentedPair> presented;
};

Setting build_setting(const Scenario& s);
Filtration build_filtration(const Setting& setting, const Json& spec);

Scalar read_scalar(const ScalarRing& ring, const Json& j);
Element read_element(const Algebra& a, const Json& j);
Poly read_poly(const Algebra& a, const Json& j);
Json write_scalar(const Scalar& s);
Json write_element(const Element& e);
Json write_poly(const Poly& p);
Json write_matrix(const Matrix& m);
Matrix read_matrix(const ScalarRing& ring, const Json& j);
Json write_algebra(const Algebra& a);
Json write_flags(Verdict fc, Verdict pc, Verdict sc);
Json write_hypotheses(const HypothesisReport& h);
Json write_presentation(const NCPresentation& p);
/// Rebuilds (and revalidates) an algebra from write_algebra output.
Algebra read_algebra(const Json& j);

/// The residue polynomial payloads of a lift problem, or a seeded random F
/// when the scenario asks for one.
Poly scenario_f(const Scenario& s, const Algebra& a, const Quotient& q);

struct Report {
  Json body;
  ExitCode exit = ExitCode::success;
};

/// Runs the scenario's task. The body never includes timing, so equal inputs
/// give byte-identical bodies. Every certificate is re-verified before
/// returning. Throws ScenarioError for input errors.
Report run_scenario(const Scenario& s);

}  // namespace nchensel::cli
