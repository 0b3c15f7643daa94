#pragma once

// Report rendering and independent re-verification of report certificates.

#include <string>
#include <string_view>
#include <vector>

#include "nchensel/scenario.hpp"

namespace nchensel::cli {

std::string sha256_hex(std::string_view data);

/// Pretty JSON with the timing block appended under its own key.
std::string render_report(const Json& body, double elapsed_ms);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Recomputes every identity behind the report's certificates. Missing
/// certificates (negative outcomes) give no checks for them.
std::vector<Check> recheck_certificates(const Json& report, const Scenario& scenario);
Json checks_to_json(const std::vector<Check>& checks);

struct VerifyResult {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // one line per violated identity
};

/// Rechecks every certificate in the report against the scenario: products,
/// containments, Bezout identities, morphism laws. Never reruns the lifting,
/// enumeration or completion algorithms.
VerifyResult verify_report(const Json& report, const Scenario& scenario);

}  // namespace nchensel::cli
