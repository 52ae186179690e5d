#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gbc {

// One law/suite check.  A failing check always carries a serialized witness.
struct CheckResult {
  std::string id;
  std::string label;
  bool passed = true;
  bool complete = true;
  long long instances = 0;
  std::string bound;
  nlohmann::json counterexample;
  nlohmann::json details;
  double millis = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  bool complete() const {
    for (const auto& c : checks)
      if (!c.complete) return false;
    return true;
  }

  CheckResult& add(std::string id, std::string label, std::string bound) {
    checks.push_back(CheckResult{std::move(id), std::move(label), true, true, 0, std::move(bound),
                                 nlohmann::json(), nlohmann::json(), 0.0});
    return checks.back();
  }

  // Structured format is a stable, versioned schema; timings are excluded by
  // default so reports with a fixed seed are byte-identical across runs.
  nlohmann::json to_json(bool include_timings = false) const {
    nlohmann::json checks_json = nlohmann::json::array();
    long long failed = 0;
    for (const auto& c : checks) {
      nlohmann::json j{{"id", c.id},
                       {"label", c.label},
                       {"status", c.passed ? (c.complete ? "pass" : "incomplete") : "fail"},
                       {"instances", c.instances},
                       {"bound", c.bound},
                       {"counterexample", c.counterexample}};
      if (!c.details.is_null()) j["details"] = c.details;
      if (include_timings) j["millis"] = c.millis;
      checks_json.push_back(std::move(j));
      if (!c.passed) ++failed;
    }
    return nlohmann::json{{"schema", "gbc-report/1"},
                          {"checks", checks_json},
                          {"summary",
                           {{"total", static_cast<long long>(checks.size())},
                            {"failed", failed},
                            {"complete", complete()}}}};
  }

  std::string to_text(bool include_timings = true) const {
    std::string out;
    for (const auto& c : checks) {
      out += c.passed ? (c.complete ? "[PASS] " : "[INCOMPLETE] ") : "[FAIL] ";
      out += c.id + " — " + c.label;
      out += " (instances: " + std::to_string(c.instances);
      if (!c.bound.empty()) out += ", bound: " + c.bound;
      if (include_timings) out += ", ms: " + std::to_string(static_cast<long long>(c.millis));
      out += ")\n";
      if (!c.passed && !c.counterexample.is_null())
        out += "       witness: " + c.counterexample.dump() + "\n";
      if (!c.details.is_null()) out += "       details: " + c.details.dump() + "\n";
    }
    out += all_passed() ? (complete() ? "all checks passed\n" : "incomplete run\n") : "FAILURES\n";
    return out;
  }
};

namespace detail {

template <typename R, typename J>
void flag(R& r, const J& witness) {
  if (r.passed) {
    r.passed = false;
    r.counterexample = witness;
  }
}

}  // namespace detail

}  // namespace gbc
