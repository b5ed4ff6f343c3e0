#pragma once

#include <optional>

#include "packcert/arith.hpp"
#include "packcert/bounds.hpp"
#include "packcert/report.hpp"
#include "packcert/srg.hpp"

namespace packcert {

/// Graph parameters (n-1, a, (3a-n)/2, a/2) attached to a real ETF of n
/// vectors in R^d, with a = n/2 - 1 + (1 - n/(2d)) sqrt(d(n-1)/(n-d)).
struct EtfGraph {
  SrgParams params;
  Rational radicand;  // d(n-1)/(n-d)
  Surd root;          // sqrt(radicand)
  bool rational = false;
};

EtfGraph etf_srg(long d, long n);

struct AwIntegrality {
  Status status = Status::not_applicable;
  std::optional<Surd> root_a;  // sqrt(d(n-1)/(n-d))
  std::optional<Surd> root_b;  // sqrt((n-d)(n-1)/d)
  std::string reason;
};

/// Both square roots above must be odd integers, for n > d+1 > 2 and n != 2d.
AwIntegrality aw_integrality(long d, long n);

enum class EtfClass { exceptional_lower, exceptional_upper, window, infeasible, not_applicable };
const char* to_string(EtfClass c);

struct EtfClassification {
  EtfClass cls = EtfClass::not_applicable;
  Integer window_lo;  // ceil(d + 1/2 + sqrt(3d + 1/4))
  Integer window_hi;  // floor(d(d+2)/3)
};

/// For d >= 5 and n > d+1: n is one of the two exceptional sizes, or lies in
/// [d + 1/2 + sqrt(3d + 1/4), d(d+2)/3], or no ETF exists.
EtfClassification coro1_classify(long d, long n);

/// Runs every ETF necessary condition and aggregates a verdict. Requires n > d+1 > 2.
FeasibilityReport etf_report(long d, long n);

}  // namespace packcert
