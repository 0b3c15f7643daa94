// Command-line scenario runner.
//
//   nchensel <task> --scenario s.json [--seed N] [--cap N] [--out report.json]
//   nchensel run --scenario s.json          (task taken from the scenario)
//   nchensel verify-report --report r.json --scenario s.json
//
// Exit status: 0 success, 2 mathematical negative, 3 inconclusive (cap),
// 4 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nchensel/report.hpp"
#include "nchensel/scenario.hpp"

using namespace nchensel::cli;

namespace {

constexpr int input_error = static_cast<int>(ExitCode::input_error);

struct Options {
  std::string scenario;
  std::string report;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> cap;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ScenarioError("cannot write " + out);
  f << text;
}

int run_task(const std::string& task, const Options& o) {
  Scenario s = load_scenario(o.scenario);
  if (task != "run" && task != s.task) {
    throw ScenarioError("scenario declares task \"" + s.task + "\", not \"" + task + "\"");
  }
  if (o.seed) s.seed = *o.seed;
  if (o.cap) s.cap = *o.cap;
  auto start = std::chrono::steady_clock::now();
  Report r = run_scenario(s);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(render_report(r.body, ms), o.out);
  if (!o.out.empty()) std::cerr << s.task << ": " << r.body.at("outcome").get<std::string>() << "\n";
  return static_cast<int>(r.exit);
}

int run_verify_report(const Options& o) {
  Scenario s = load_scenario(o.scenario);
  std::ifstream in(o.report, std::ios::binary);
  if (!in) throw ScenarioError("cannot read report " + o.report);
  std::ostringstream buf;
  buf << in.rdbuf();
  Json report;
  try {
    report = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ScenarioError(std::string("report is not valid JSON: ") + e.what());
  }
  VerifyResult v = verify_report(report, s);
  std::ostringstream text;
  text << (v.ok ? "verified" : "REJECTED") << " (" << v.checks << " checks)\n";
  for (const auto& f : v.failures) text << "  violated: " << f << "\n";
  emit(text.str(), o.out);
  return v.ok ? 0 : static_cast<int>(ExitCode::negative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Hensel lifting: scenario runner and certificate checker"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::string> tasks = task_names;
  tasks.push_back("run");
  for (const auto& t : tasks) {
    auto* sub = app.add_subcommand(t, t == "run" ? "run the task named in the scenario" : "run a scenario with task " + t);
    sub->add_option("--scenario", o.scenario, "scenario JSON file")->required();
    sub->add_option("--seed", o.seed, "override the scenario seed");
    sub->add_option("--cap", o.cap, "override the scenario cap");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  }
  auto* vr = app.add_subcommand("verify-report", "recheck every certificate in a report");
  vr->add_option("--report", o.report, "report JSON file")->required();
  vr->add_option("--scenario", o.scenario, "scenario the report was produced from")->required();
  vr->add_option("--out", o.out, "write the verdict here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  try {
    auto* sub = app.get_subcommands().front();
    if (sub->get_name() == "verify-report") return run_verify_report(o);
    return run_task(sub->get_name(), o);
  } catch (const ScenarioError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
