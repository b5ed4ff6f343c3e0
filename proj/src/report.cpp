#include "packcert/report.hpp"

#include <algorithm>

namespace packcert {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

const Condition* FeasibilityReport::find(const std::string& id) const {
  auto it = std::find_if(conditions.begin(), conditions.end(), [&](const Condition& c) { return c.id == id; });
  return it == conditions.end() ? nullptr : &*it;
}

void FeasibilityReport::finalize() {
  const bool failed =
      std::any_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.status == Status::fail; });
  verdict = failed ? Verdict::infeasible : Verdict::feasible;
}

}  // namespace packcert
