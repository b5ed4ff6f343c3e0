#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "packcert/arith.hpp"

namespace packcert {

enum class Status { pass, fail, not_applicable };
enum class Verdict { feasible, infeasible, unknown };

const char* to_string(Status s);
const char* to_string(Verdict v);

using WitnessValue = std::variant<Rational, Surd, bool, std::string>;
using Witness = std::vector<std::pair<std::string, WitnessValue>>;

/// One necessary condition and how the queried parameters fared against it.
struct Condition {
  std::string id;
  Status status = Status::not_applicable;
  Witness witness;
  std::string note;
};

struct FeasibilityReport {
  std::string kind;
  Witness query;
  std::vector<Condition> conditions;
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> notes;

  const Condition* find(const std::string& id) const;

  /// Infeasible iff some applicable condition failed; not_applicable never blocks.
  void finalize();
};

}  // namespace packcert
